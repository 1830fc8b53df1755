#include "isoed/report.hpp"

#include <sstream>

namespace isoed {

namespace {

ojson header(std::string_view command) {
  ojson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

ojson group_json(const FiniteAbelianGroup& g) {
  ojson factors = ojson::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(integer_to_json(f));
  return factors;
}

std::string group_text(const ojson& factors) {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) s += " + ";
    s += "Z/" + json_scalar_text(factors[i]);
  }
  return s;
}

ojson matrix_json(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (const auto& x : m.row(r)) row.push_back(integer_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string json_scalar_text(const ojson& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "none";
  return value.dump();
}

std::string dump_block(const ojson& block) { return block.dump(2) + "\n"; }

ojson kernel_json(const Instance& instance) {
  const auto g = kernel(instance.isogeny);
  ojson j = header("kernel");
  j["instance"] = instance.name;
  j["dim"] = instance.variety->dim();
  j["degree"] = integer_to_json(instance.isogeny.degree());
  j["invariant_factors"] = group_json(g);
  j["order"] = integer_to_json(g.order());
  j["rank"] = rank(g);
  ojson per_prime = ojson::array();
  for (const auto& p : prime_divisors(g.order()))
    per_prime.push_back({{"p", integer_to_json(p)}, {"rank_p", rank_p(g, p)}});
  j["rank_p"] = std::move(per_prime);
  return j;
}

ojson subvarieties_json(const Instance& instance) {
  const auto family = enumerate_subvarieties(*instance.variety);
  ojson j = header("subvarieties");
  j["instance"] = instance.name;
  j["dim"] = instance.variety->dim();
  j["complete"] = family.complete;
  ojson members = ojson::array();
  for (const auto& s : family.members)
    members.push_back({{"label", s.label}, {"dim", s.dim()}, {"basis", matrix_json(s.lattice.basis())}});
  j["members"] = std::move(members);
  j["assumptions"] = instance.variety->assumptions();
  return j;
}

ojson bounds_json(const Instance& instance, const EdBoundReport& report) {
  ojson j = header("bounds");
  j["instance"] = instance.name;
  j["dim"] = report.dim;
  j["degree"] = integer_to_json(report.degree);
  j["kernel"] = {{"invariant_factors", group_json(report.kernel)},
                 {"order", integer_to_json(report.kernel.order())},
                 {"rank", rank(report.kernel)}};
  j["enumeration_complete"] = report.enumeration_complete;
  j["coprime_to_dim_factorial"] = report.coprimality;
  if (report.lower) {
    j["lower"] = *report.lower;
    j["lower_raw"] = to_string(report.lower_raw);
  } else {
    j["lower"] = nullptr;
    j["lower_raw"] = nullptr;
  }
  j["upper"] = report.upper;
  j["upper_witness"] = {{"label", report.upper_witness.label}, {"dim", report.upper_witness.dim()}};
  j["exact"] = report.exact ? ojson(*report.exact) : ojson(nullptr);
  j["incompressible"] = report.lower ? ojson(*report.lower == report.dim) : ojson(nullptr);
  ojson table = ojson::array();
  for (const auto& row : report.table) {
    ojson terms = ojson::array();
    for (const auto& t : row.terms)
      terms.push_back({{"p", integer_to_json(t.prime)}, {"rank_p", t.rank_p}, {"value", to_string(t.value)}});
    table.push_back({{"label", row.sub.label},
                     {"dim", row.sub.dim()},
                     {"intersection", group_json(row.intersection)},
                     {"rank", rank(row.intersection)},
                     {"upper_value", row.upper_value},
                     {"lower_value", to_string(row.lower_value)},
                     {"terms", std::move(terms)}});
  }
  j["table"] = std::move(table);
  j["assumptions"] = report.assumptions;
  return j;
}

std::string render_kernel_text(const ojson& j) {
  std::ostringstream os;
  os << "instance: " << j["instance"].get<std::string>() << "\n";
  os << "dim A = " << j["dim"].dump() << ", degree = " << json_scalar_text(j["degree"]) << "\n";
  os << "kernel = " << group_text(j["invariant_factors"]) << "\n";
  os << "order = " << json_scalar_text(j["order"]) << ", rank = " << j["rank"].dump() << "\n";
  for (const auto& e : j["rank_p"]) os << "rank_" << json_scalar_text(e["p"]) << " = " << e["rank_p"].dump() << "\n";
  os << kToolName << " " << kToolVersion << "\n";
  return os.str();
}

std::string render_subvarieties_text(const ojson& j) {
  std::ostringstream os;
  os << "instance: " << j["instance"].get<std::string>() << "\n";
  os << "subvariety family (" << j["members"].size() << " members, "
     << (j["complete"].get<bool>() ? "complete" : "not asserted complete") << "):\n";
  for (const auto& m : j["members"])
    os << "  " << m["label"].get<std::string>() << "  dim " << m["dim"].dump() << "  basis " << m["basis"].dump() << "\n";
  os << "assumptions:\n";
  for (const auto& a : j["assumptions"]) os << "  - " << a.get<std::string>() << "\n";
  os << kToolName << " " << kToolVersion << "\n";
  return os.str();
}

std::string render_bounds_text(const ojson& j) {
  std::ostringstream os;
  const auto dim = j["dim"].get<std::size_t>();
  os << "instance: " << j["instance"].get<std::string>() << "\n";
  os << "dim A = " << dim << ", degree = " << json_scalar_text(j["degree"]) << "\n";
  os << "kernel = " << group_text(j["kernel"]["invariant_factors"]) << " (rank " << j["kernel"]["rank"].dump() << ")\n";
  const bool complete = j["enumeration_complete"].get<bool>();
  os << "subvariety family: " << j["table"].size() << " members, " << (complete ? "complete" : "not asserted complete")
     << "\n";
  for (const auto& row : j["table"]) {
    os << "  B = " << row["label"].get<std::string>() << "  dim " << row["dim"].dump() << "  ker n B = "
       << group_text(row["intersection"]) << "  upper term " << row["upper_value"].dump() << "  lower term "
       << row["lower_value"].get<std::string>();
    if (!row["terms"].empty()) {
      os << "  [";
      bool first = true;
      for (const auto& t : row["terms"]) {
        if (!first) os << "; ";
        first = false;
        os << "p=" << json_scalar_text(t["p"]) << ": rank_p " << t["rank_p"].dump() << ", value "
           << t["value"].get<std::string>();
      }
      os << "]";
    }
    os << "\n";
  }
  os << "coprime to dim A!: " << (j["coprime_to_dim_factorial"].get<bool>() ? "yes" : "no") << "\n";

  const auto upper = j["upper"].get<std::size_t>();
  if (j["lower"].is_null()) {
    os << "lower = uncertified (subvariety enumeration not complete)\n";
  } else {
    os << "lower = " << j["lower"].dump() << " (ceiling of " << j["lower_raw"].get<std::string>() << ")\n";
  }
  os << "upper = " << upper << " (B = " << j["upper_witness"]["label"].get<std::string>() << ")\n";
  if (!j["lower"].is_null() && j["lower"].get<std::size_t>() == upper) {
    os << "lower = upper = " << upper;
    if (upper == dim) os << " (incompressible)";
    os << "\n";
  }
  if (!j["exact"].is_null()) {
    os << "exact = " << j["exact"].dump() << "\n";
  } else if (!complete) {
    os << "exact = not certified (subvariety enumeration not complete)\n";
  } else {
    os << "exact = not certified (degree not coprime to " << dim << "!)\n";
  }
  os << "assumptions:\n";
  for (const auto& a : j["assumptions"]) os << "  - " << a.get<std::string>() << "\n";
  os << kToolName << " " << kToolVersion << "\n";
  return os.str();
}

std::string render_groupbound_text(const ojson& j) {
  std::ostringstream os;
  os << "groupbound " << j["kind"].get<std::string>() << " (";
  bool first = true;
  for (const auto& [key, value] : j["inputs"].items()) {
    if (value.is_null()) continue;
    if (!first) os << ", ";
    first = false;
    os << key << "=" << json_scalar_text(value);
  }
  os << ")\n";
  for (const auto& [key, value] : j["result"].items()) os << "  " << key << " = " << json_scalar_text(value) << "\n";
  os << kToolName << " " << kToolVersion << "\n";
  return os.str();
}

}  // namespace isoed
