#include "isoed/oracle.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "isoed/edim.hpp"
#include "isoed/error.hpp"
#include "isoed/report.hpp"
#include "isoed/sampling.hpp"

namespace isoed {

namespace {

using sampling::Rng;

constexpr std::size_t kMaxNotes = 5;

void note(SuiteResult& s, const std::string& what) {
  ++s.failures;
  if (s.failure_notes.size() < kMaxNotes) s.failure_notes.push_back(what);
}

std::size_t max_genus(const OracleOptions& o) { return std::clamp<std::size_t>(o.max_dim / 2, 1, 3); }

long block_entry_cap(const OracleOptions& o) { return std::clamp(o.max_entry, 1L, 6L); }

// Independent streams per suite so trial counts in one suite never shift another.
Rng suite_rng(const OracleOptions& o, std::uint64_t salt) { return Rng(o.seed ^ (0x9E3779B97F4A7C15ULL * salt)); }

std::shared_ptr<const AbelianVariety> random_product(Rng& rng, std::size_t g) {
  return std::make_shared<const AbelianVariety>(AbelianVariety::product("A", sampling::random_factors(rng, g)));
}

void check_ordering(SuiteResult& s, const Isogeny& alpha, std::size_t trial) {
  ++s.ordering_checks;
  try {
    const auto rep = bound_report(alpha);
    if (!rep.lower || *rep.lower > rep.upper || rep.upper > rep.dim) {
      ++s.ordering_violations;
      note(s, "trial " + std::to_string(trial) + ": ordering violated");
    }
  } catch (const Error& e) {
    ++s.ordering_violations;
    note(s, "trial " + std::to_string(trial) + ": " + e.what());
  }
}

}  // namespace

SuiteResult snf_suite(const OracleOptions& o) {
  SuiteResult s{"snf-vs-determinantal-divisors", o.trials, 0, 0, 0, {}};
  Rng rng = suite_rng(o, 1);
  const long side = static_cast<long>(std::max<std::size_t>(o.max_dim, 1));
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, side));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, side));
    const IntMatrix m = sampling::random_matrix(rng, rows, cols, o.max_entry);
    const auto snf = smith_normal_form(m);
    const auto dd = determinantal_divisors(m);

    bool ok = snf.left * m * snf.right == snf.diagonal;
    ok = ok && abs(snf.left.determinant()) == 1 && abs(snf.right.determinant()) == 1;
    for (std::size_t i = 0; i < rows && ok; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && snf.diagonal(i, j) != 0) ok = false;
    const auto& f = snf.invariant_factors;
    for (std::size_t k = 1; k < f.size() && ok; ++k) ok = f[k] % f[k - 1] == 0;
    for (std::size_t k = 0; k < dd.size() && ok; ++k) {
      if (k < f.size()) {
        const Integer prev = k == 0 ? Integer(1) : dd[k - 1];
        ok = dd[k] != 0 && dd[k] == prev * f[k];
      } else {
        ok = dd[k] == 0;
      }
    }
    if (!ok) note(s, "trial " + std::to_string(t) + ": " + m.to_string());
  }
  return s;
}

SuiteResult kernel_splitting_suite(const OracleOptions& o) {
  SuiteResult s{"kernel-splitting", o.trials, 0, 0, 0, {}};
  Rng rng = suite_rng(o, 2);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto g = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_genus(o))));
    const auto variety = random_product(rng, g);
    std::vector<IntMatrix> blocks;
    std::vector<FiniteAbelianGroup> block_kernels;
    for (const auto& f : variety->factors()) {
      blocks.push_back(sampling::random_nonsingular(rng, 2 * f.dim, block_entry_cap(o)));
      block_kernels.push_back(normalize(smith_normal_form(blocks.back()).invariant_factors));
    }
    const Isogeny alpha(variety, variety, sampling::block_diagonal(blocks));
    const std::uint64_t subsets = 1ULL << variety->factors().size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      FiniteAbelianGroup expected;
      for (std::size_t i = 0; i < block_kernels.size(); ++i)
        if ((mask >> i & 1U) != 0) expected = direct_sum(expected, block_kernels[i]);
      const auto got = kernel_intersect(alpha, sub_product(*variety, mask));
      if (!(got == expected)) {
        note(s, "trial " + std::to_string(t) + " mask " + std::to_string(mask) + ": got " + got.to_string() +
                    ", expected " + expected.to_string());
        break;
      }
    }
    check_ordering(s, alpha, t);
  }
  return s;
}

SuiteResult ordering_suite(const OracleOptions& o) {
  SuiteResult s{"lower-upper-ordering", o.trials, 0, 0, 0, {}};
  Rng rng = suite_rng(o, 3);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto g = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_genus(o))));
    const auto variety = random_product(rng, g);
    IntMatrix m;
    switch (rng.uniform(0, 2)) {
      case 0:
        m = sampling::random_nonsingular(rng, 2 * g, block_entry_cap(o));
        break;
      case 1: {
        std::vector<IntMatrix> blocks;
        for (const auto& f : variety->factors()) blocks.push_back(sampling::random_nonsingular(rng, 2 * f.dim, 3));
        m = sampling::block_diagonal(blocks);
        break;
      }
      default:
        m = IntMatrix::scalar(2 * g, rng.uniform(1, 6));
        break;
    }
    const Isogeny alpha(variety, variety, std::move(m));
    check_ordering(s, alpha, t);
  }
  return s;
}

SuiteResult coprime_suite(const OracleOptions& o) {
  SuiteResult s{"coprime-equality", o.trials, 0, 0, 0, {}};
  Rng rng = suite_rng(o, 4);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto g = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_genus(o))));
    const auto variety = random_product(rng, g);
    const auto primes = sampling::primes_between(static_cast<long>(g), 23);
    std::vector<IntMatrix> blocks;
    for (const auto& f : variety->factors()) {
      std::vector<Integer> diag;
      for (std::size_t i = 0; i < 2 * f.dim; ++i) {
        Integer d = 1;
        const long count = rng.uniform(0, 2);
        for (long c = 0; c < count; ++c) d *= primes[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(primes.size()) - 1))];
        diag.push_back(d);
      }
      blocks.push_back(sampling::with_smith_form(rng, diag));
    }
    const Isogeny alpha(variety, variety, sampling::block_diagonal(blocks));
    try {
      if (!coprimality_check(alpha.degree(), g)) {
        note(s, "trial " + std::to_string(t) + ": generated degree is not coprime");
      } else {
        const auto rep = bound_report(alpha);
        if (!rep.lower || !rep.exact || *rep.lower != rep.upper || *rep.exact != rep.upper)
          note(s, "trial " + std::to_string(t) + ": lower and upper differ");
      }
    } catch (const Error& e) {
      note(s, "trial " + std::to_string(t) + ": " + e.what());
    }
    check_ordering(s, alpha, t);
  }
  return s;
}

std::vector<SuiteResult> run_oracle(const OracleOptions& options) {
  return {snf_suite(options), kernel_splitting_suite(options), ordering_suite(options), coprime_suite(options)};
}

bool oracle_passed(const std::vector<SuiteResult>& suites) {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.failures == 0 && s.ordering_violations == 0; });
}

std::string render_oracle_text(const OracleOptions& o, const std::vector<SuiteResult>& suites) {
  std::ostringstream os;
  os << "oracle seed=" << o.seed << " trials=" << o.trials << " max-dim=" << o.max_dim << " max-entry=" << o.max_entry
     << "\n";
  std::size_t checks = 0, violations = 0;
  for (const auto& s : suites) {
    os << s.name << ": " << s.trials << " trials, " << s.failures << " failures\n";
    for (const auto& n : s.failure_notes) os << "  " << n << "\n";
    checks += s.ordering_checks;
    violations += s.ordering_violations;
  }
  os << "ordering lower <= upper <= dim A: " << checks << " instances, " << violations << " violations\n";
  os << "result: " << (oracle_passed(suites) ? "PASS" : "FAIL") << "\n";
  os << kToolName << " " << kToolVersion << "\n";
  return os.str();
}

}  // namespace isoed
