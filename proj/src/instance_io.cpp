#include "isoed/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "isoed/error.hpp"

namespace isoed {

namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSpec, what); }

void require_fields(const json& obj, const std::string& where, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) malformed(where + " must be an object");
  std::set<std::string> allowed;
  for (const char* f : required) {
    allowed.insert(f);
    if (!obj.contains(f)) malformed(where + " is missing field '" + f + "'");
  }
  for (const char* f : optional) allowed.insert(f);
  for (const auto& [key, value] : obj.items())
    if (!allowed.contains(key)) malformed(where + " has unknown field '" + key + "'");
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) malformed(where + "." + key + " must be a string");
  return v.get<std::string>();
}

Integer get_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    Integer x;
    if (s.empty() || x.set_str(s, 10) != 0) malformed(where + " is not a decimal integer");
    return x;
  }
  malformed(where + " must be an integer");
}

std::size_t get_count(const json& v, const std::string& where, std::size_t minimum) {
  const Integer x = get_integer(v, where);
  if (x < static_cast<unsigned long>(minimum) || !x.fits_ulong_p())
    malformed(where + " must be an integer >= " + std::to_string(minimum));
  return x.get_ui();
}

IntMatrix get_matrix(const json& v, const std::string& where, std::size_t cols, bool allow_empty) {
  if (!v.is_array()) malformed(where + " must be an array of rows");
  if (v.empty() && !allow_empty) malformed(where + " must not be empty");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const auto& row = v[r];
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!row.is_array()) malformed(rw + " must be an array");
    if (row.size() != cols) malformed(rw + " has length " + std::to_string(row.size()) + ", expected " + std::to_string(cols));
    std::vector<Integer> entries;
    entries.reserve(cols);
    for (std::size_t c = 0; c < row.size(); ++c) entries.push_back(get_integer(row[c], rw + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(entries));
  }
  return IntMatrix::from_rows(rows, cols);
}

std::shared_ptr<const AbelianVariety> parse_variety(const json& v, const std::string& name) {
  if (!v.is_object() || !v.contains("kind")) malformed("variety must be an object with a 'kind'");
  const std::string kind = get_string(v, "kind", "variety");
  if (kind == "product") {
    require_fields(v, "variety", {"kind", "factors"});
    const auto& fs = v.at("factors");
    if (!fs.is_array() || fs.empty()) malformed("variety.factors must be a non-empty array");
    std::vector<ProductFactor> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const std::string where = "variety.factors[" + std::to_string(i) + "]";
      require_fields(fs[i], where, {"label", "dim"});
      factors.push_back({get_string(fs[i], "label", where), get_count(fs[i].at("dim"), where + ".dim", 1)});
    }
    return std::make_shared<const AbelianVariety>(AbelianVariety::product(name, std::move(factors)));
  }
  if (kind == "custom") {
    require_fields(v, "variety", {"kind", "ambient_rank", "subvarieties", "complete"});
    const std::size_t n = get_count(v.at("ambient_rank"), "variety.ambient_rank", 2);
    if (n % 2 != 0) malformed("variety.ambient_rank must be even");
    const auto& subs = v.at("subvarieties");
    if (!subs.is_array()) malformed("variety.subvarieties must be an array");
    if (!v.at("complete").is_boolean()) malformed("variety.complete must be a boolean");
    std::vector<Subvariety> declared;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string where = "variety.subvarieties[" + std::to_string(i) + "]";
      require_fields(subs[i], where, {"label", "basis"});
      IntMatrix basis = get_matrix(subs[i].at("basis"), where + ".basis", n, true);
      Lattice lattice = Lattice::from_generators(n, basis);
      if (lattice.rank() != basis.rows()) malformed(where + ".basis rows are linearly dependent");
      declared.push_back({get_string(subs[i], "label", where), std::move(lattice)});
    }
    return std::make_shared<const AbelianVariety>(
        AbelianVariety::custom(name, n, std::move(declared), v.at("complete").get<bool>()));
  }
  malformed("variety.kind must be 'product' or 'custom'");
}

}  // namespace

nlohmann::ordered_json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
  require_fields(doc, "instance", {"name", "variety", "isogeny"});
  const std::string name = get_string(doc, "name", "instance");
  auto variety = parse_variety(doc.at("variety"), name);

  const auto& iso = doc.at("isogeny");
  if (!iso.is_object() || !iso.contains("kind")) malformed("isogeny must be an object with a 'kind'");
  const std::string kind = get_string(iso, "kind", "isogeny");
  if (kind == "mult") {
    require_fields(iso, "isogeny", {"kind", "m"});
    Integer m = get_integer(iso.at("m"), "isogeny.m");
    if (m < 1) malformed("isogeny.m must be >= 1");
    return {name, variety, mult_by_m(variety, m), m};
  }
  if (kind == "matrix") {
    require_fields(iso, "isogeny", {"kind", "entries"});
    const std::size_t n = variety->ambient_rank();
    IntMatrix entries = get_matrix(iso.at("entries"), "isogeny.entries", n, false);
    if (entries.rows() != n) malformed("isogeny.entries must have " + std::to_string(n) + " rows");
    return {name, variety, Isogeny(variety, variety, std::move(entries)), std::nullopt};
  }
  malformed("isogeny.kind must be 'mult' or 'matrix'");
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read instance file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

nlohmann::ordered_json instance_to_json(const Instance& instance) {
  using ojson = nlohmann::ordered_json;
  auto matrix_json = [](const IntMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      ojson row = ojson::array();
      for (const auto& x : m.row(r)) row.push_back(integer_to_json(x));
      rows.push_back(std::move(row));
    }
    return rows;
  };

  ojson doc;
  doc["name"] = instance.name;
  const auto& v = *instance.variety;
  ojson variety;
  if (v.kind() == VarietyKind::Product) {
    variety["kind"] = "product";
    ojson factors = ojson::array();
    for (const auto& f : v.factors()) factors.push_back({{"label", f.label}, {"dim", f.dim}});
    variety["factors"] = std::move(factors);
  } else {
    variety["kind"] = "custom";
    variety["ambient_rank"] = v.ambient_rank();
    ojson subs = ojson::array();
    for (const auto& s : v.declared_subvarieties()) subs.push_back({{"label", s.label}, {"basis", matrix_json(s.lattice.basis())}});
    variety["subvarieties"] = std::move(subs);
    variety["complete"] = v.completeness_asserted();
  }
  doc["variety"] = std::move(variety);
  if (instance.multiplier)
    doc["isogeny"] = {{"kind", "mult"}, {"m", integer_to_json(*instance.multiplier)}};
  else
    doc["isogeny"] = {{"kind", "matrix"}, {"entries", matrix_json(instance.isogeny.matrix())}};
  return doc;
}

}  // namespace isoed
