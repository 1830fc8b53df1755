#pragma once

// Test-only oracles. Nothing here calls into SNF, HNF or the lattice code;
// they enumerate directly so they can check those routines independently.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace brute {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

inline long det(Mat m) {
  // Laplace expansion; fine for n <= 6 in tests.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const long term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// gcd of all k x k minors by enumerating index subsets.
inline std::vector<long> determinantal_divisors(const Mat& m) {
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long g = 0;
    for (std::uint32_t rmask = 0; rmask < (1U << rows); ++rmask) {
      if (static_cast<std::size_t>(__builtin_popcount(rmask)) != k) continue;
      for (std::uint32_t cmask = 0; cmask < (1U << cols); ++cmask) {
        if (static_cast<std::size_t>(__builtin_popcount(cmask)) != k) continue;
        Mat sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if ((rmask >> r & 1U) == 0) continue;
          Vec row;
          for (std::size_t c = 0; c < cols; ++c)
            if ((cmask >> c & 1U) != 0) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = gcd(g, det(sub));
      }
    }
    out.push_back(g);
  }
  return out;
}

/// Elements of Z/s_1 + ... + Z/s_r.
inline std::vector<Vec> group_elements(const std::vector<long>& orders) {
  std::vector<Vec> elems{Vec{}};
  for (long s : orders) {
    std::vector<Vec> next;
    for (const auto& e : elems)
      for (long a = 0; a < s; ++a) {
        Vec v = e;
        v.push_back(a);
        next.push_back(v);
      }
    elems = std::move(next);
  }
  return elems;
}

/// log_p |G / pG| by listing pG.
inline std::size_t rank_p_by_cosets(const std::vector<long>& orders, long p) {
  const auto elems = group_elements(orders);
  std::set<Vec> multiples;
  for (const auto& e : elems) {
    Vec v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = (p * e[i]) % orders[i];
    multiples.insert(v);
  }
  std::size_t index = elems.size() / multiples.size();
  std::size_t k = 0;
  while (index > 1) {
    index /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

/// Kernel of x -> M x on (Q/Z)^n, as numerators y in [0, d)^n with M y = 0 mod d, d = |det M|.
/// `support` restricts to vectors vanishing outside the given coordinates.
inline std::vector<Vec> kernel_elements(const Mat& m, const std::vector<std::size_t>& support) {
  const long d = std::labs(det(m));
  const std::size_t n = m.size();
  std::vector<Vec> out;
  Vec y(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == support.size()) {
      for (std::size_t r = 0; r < n; ++r) {
        long s = 0;
        for (std::size_t c = 0; c < n; ++c) s += m[r][c] * y[c];
        if (s % d != 0) return;
      }
      out.push_back(y);
      return;
    }
    for (long a = 0; a < d; ++a) {
      y[support[i]] = a;
      rec(i + 1);
    }
    y[support[i]] = 0;
  };
  rec(0);
  return out;
}

/// log_p of the number of p-torsion elements among kernel numerators (denominator d).
inline std::size_t p_torsion_rank(const std::vector<Vec>& elems, long d, long p) {
  std::size_t count = 0;
  for (const auto& y : elems)
    if (std::all_of(y.begin(), y.end(), [&](long a) { return (p * a) % d == 0; })) ++count;
  std::size_t k = 0;
  while (count > 1) {
    count /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

/// Largest rank of an elementary abelian 2-subgroup of S_m (or A_m), by
/// backtracking over pairwise commuting involutions.
inline std::size_t max_elementary_two_rank(int m, bool alternating) {
  using Perm = std::vector<int>;
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  auto is_even = [](const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  };
  Perm id(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) id[static_cast<std::size_t>(i)] = i;
  std::vector<Perm> involutions;
  Perm p = id;
  do {
    if (p != id && compose(p, p) == id && (!alternating || is_even(p))) involutions.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::size_t best = 0;
  std::set<std::set<Perm>> seen;
  std::function<void(std::size_t, std::vector<Perm>&, std::set<Perm>&)> rec =
      [&](std::size_t start, std::vector<Perm>& gens, std::set<Perm>& group) {
        best = std::max(best, gens.size());
        for (std::size_t i = start; i < involutions.size(); ++i) {
          const Perm& t = involutions[i];
          if (group.contains(t)) continue;
          bool commutes = true;
          for (const auto& g : gens)
            if (compose(g, t) != compose(t, g)) {
              commutes = false;
              break;
            }
          if (!commutes) continue;
          std::set<Perm> bigger = group;
          for (const auto& e : group) bigger.insert(compose(e, t));
          if (!seen.insert(bigger).second) continue;
          gens.push_back(t);
          rec(i + 1, gens, bigger);
          gens.pop_back();
        }
      };
  std::vector<Perm> gens;
  std::set<Perm> group{id};
  rec(0, gens, group);
  return best;
}

}  // namespace brute
