#include "bw/graded.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace bw {

namespace {

const AbelianGroupInvariants kZeroGroup{};

using json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(const std::string& source, std::size_t byte,
                               const std::string& what) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < source.size(); ++i) {
    if (source[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  throw ParseError(what, line, col);
}

int parse_degree_key(const std::string& key) {
  try {
    std::size_t pos = 0;
    int deg = std::stoi(key, &pos);
    if (pos != key.size() || deg < 0) throw std::invalid_argument(key);
    return deg;
  } catch (const std::exception&) {
    throw ValidationError("degree key is not a nonnegative integer: '" + key + "'");
  }
}

Int json_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError("expected an integer in " + where);
}

AbelianGroupInvariants parse_group(const json& j, int degree) {
  if (!j.is_object())
    throw ValidationError("group at degree " + std::to_string(degree) +
                          " must be an object");
  AbelianGroupInvariants g;
  for (const auto& [key, value] : j.items()) {
    if (key == "rank") {
      if (!value.is_number_integer() || value.get<long long>() < 0)
        throw ValidationError("negative or non-integer rank at degree " +
                              std::to_string(degree));
      g.free_rank = value.get<std::size_t>();
    } else if (key == "torsion") {
      if (!value.is_array())
        throw ValidationError("torsion at degree " + std::to_string(degree) +
                              " must be a list");
      for (const auto& t : value)
        g.torsion.push_back(json_int(t, "torsion list"));
    } else {
      throw ValidationError("unknown group field '" + key + "' at degree " +
                            std::to_string(degree));
    }
  }
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    if (g.torsion[i] < 2)
      throw ValidationError("torsion coefficient < 2 at degree " +
                            std::to_string(degree));
    if (i > 0 && g.torsion[i] % g.torsion[i - 1] != 0)
      throw ValidationError("torsion coefficients at degree " +
                            std::to_string(degree) +
                            " are not in divisibility-chain order");
  }
  return g;
}

IntMatrix parse_matrix(const json& j, int degree, std::size_t expect_cols) {
  if (!j.is_array())
    throw ValidationError("cup map at degree " + std::to_string(degree) +
                          " must be a list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = expect_cols;
  if (rows > 0) {
    if (!j[0].is_array())
      throw ValidationError("cup map row at degree " + std::to_string(degree) +
                            " must be a list");
    cols = j[0].size();
  }
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ValidationError("dimension mismatch in cup map at degree " +
                            std::to_string(degree) + ": ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = json_int(j[i][c], "cup map at degree " + std::to_string(degree));
  }
  return m;
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m.at(i, j).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const AbelianGroupInvariants& GradedAbelianGroup::at(int degree) const {
  auto it = groups.find(degree);
  return it == groups.end() ? kZeroGroup : it->second;
}

void GradedAbelianGroup::set(int degree, AbelianGroupInvariants g) {
  if (g.is_zero())
    groups.erase(degree);
  else
    groups[degree] = std::move(g);
}

ASequence ASequence::from_values(std::vector<Int> values) {
  ASequence s;
  if (values.empty()) throw ValidationError("a-sequence must be nonempty");
  s.n = static_cast<int>(values.size()) - 1;
  s.a = std::move(values);
  s.validate();
  return s;
}

void ASequence::validate() const {
  if (n < 1) throw ValidationError("a-sequence needs n >= 1");
  if (a.size() != static_cast<std::size_t>(n) + 1)
    throw ValidationError("a-sequence must have n + 1 entries");
  if (a[0] != 1) throw ValidationError("a-sequence must start with 1");
  for (const Int& x : a)
    if (x < 1) throw ValidationError("a-sequence entries must be positive");
}

IntMatrix CupPresentation::cup_map(int k) const {
  auto it = cup_x.find(k);
  if (it != cup_x.end()) return it->second;
  return IntMatrix(groups.free_rank(k + 2), groups.free_rank(k));
}

void CupPresentation::validate() const {
  if (dim_base < 2 || dim_base % 2 != 0)
    throw ValidationError("base dimension must be a positive even integer");
  for (const auto& [deg, g] : groups.groups) {
    if (deg < 0 || deg > dim_base)
      throw ValidationError("group at degree " + std::to_string(deg) +
                            " is outside [0, dim]");
    (void)g;
  }
  for (const auto& [deg, m] : cup_x) {
    if (deg < 0 || deg > dim_base)
      throw ValidationError("cup map at degree " + std::to_string(deg) +
                            " is outside [0, dim]");
    const std::size_t want_rows = groups.free_rank(deg + 2);
    const std::size_t want_cols = groups.free_rank(deg);
    if (m.rows() != want_rows || m.cols() != want_cols)
      throw ValidationError(
          "dimension mismatch in cup map at degree " + std::to_string(deg) +
          ": got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
          ", expected " + std::to_string(want_rows) + "x" +
          std::to_string(want_cols));
  }
  for (int deg = 0; deg + 2 <= dim_base; ++deg) {
    if (groups.free_rank(deg) > 0 && groups.free_rank(deg + 2) > 0 &&
        cup_x.find(deg) == cup_x.end())
      throw ValidationError("missing cup map at degree " + std::to_string(deg));
  }
  if (!euler_class_coords.empty() &&
      euler_class_coords.size() != groups.free_rank(2))
    throw ValidationError("euler class has " +
                          std::to_string(euler_class_coords.size()) +
                          " coordinates, degree-2 rank is " +
                          std::to_string(groups.free_rank(2)));
  for (const auto& [deg, names] : labels)
    if (names.size() != groups.free_rank(deg))
      throw ValidationError("label count at degree " + std::to_string(deg) +
                            " does not match the free rank");
}

std::optional<int> CupPresentation::torsion_interaction_degree() const {
  for (const auto& [deg, g] : groups.groups) {
    if (g.torsion.empty()) continue;
    if (!cup_map(deg - 2).is_zero() || !cup_map(deg).is_zero()) return deg;
  }
  return std::nullopt;
}

CupPresentation parse_presentation(const std::string& source) {
  json j;
  try {
    j = json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    syntax_error(source, e.byte, "JSON syntax error");
  }
  if (!j.is_object()) throw ValidationError("ring description must be a JSON object");

  static const std::set<std::string> known = {"dim",         "groups", "cup_x",
                                              "euler_class", "a_sequence", "labels"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key))
      throw ValidationError("unknown top-level field '" + key + "'");
  }

  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ValidationError("missing integer field 'dim'");
  const int dim = j["dim"].get<int>();
  if (dim < 2 || dim % 2 != 0)
    throw ValidationError("'dim' must be a positive even integer");

  const bool has_aseq = j.contains("a_sequence");
  if (has_aseq && (j.contains("groups") || j.contains("cup_x")))
    throw ValidationError("'a_sequence' excludes explicit 'groups'/'cup_x'");

  CupPresentation p;
  if (has_aseq) {
    if (!j["a_sequence"].is_array())
      throw ValidationError("'a_sequence' must be a list of integers");
    std::vector<Int> values;
    for (const auto& v : j["a_sequence"]) values.push_back(json_int(v, "a_sequence"));
    ASequence s = ASequence::from_values(std::move(values));
    if (2 * s.n != dim)
      throw ValidationError("a-sequence length does not match 'dim'");
    p = from_a_sequence(s);
    if (j.contains("euler_class")) {
      std::vector<Int> ec;
      for (const auto& v : j["euler_class"]) ec.push_back(json_int(v, "euler_class"));
      if (ec != p.euler_class_coords)
        throw ValidationError("'euler_class' conflicts with the a-sequence convention [1]");
    }
  } else {
    p.dim_base = dim;
    p.groups.top_degree = dim;
    if (j.contains("groups")) {
      for (const auto& [key, value] : j["groups"].items())
        p.groups.set(parse_degree_key(key), parse_group(value, parse_degree_key(key)));
    }
    if (j.contains("cup_x")) {
      for (const auto& [key, value] : j["cup_x"].items()) {
        const int deg = parse_degree_key(key);
        p.cup_x[deg] = parse_matrix(value, deg, p.groups.free_rank(deg));
      }
    }
    if (!j.contains("euler_class") || !j["euler_class"].is_array())
      throw ValidationError("missing list field 'euler_class'");
    for (const auto& v : j["euler_class"])
      p.euler_class_coords.push_back(json_int(v, "euler_class"));
  }

  if (j.contains("labels")) {
    for (const auto& [key, value] : j["labels"].items()) {
      const int deg = parse_degree_key(key);
      std::vector<std::string> names;
      for (const auto& s : value) {
        if (!s.is_string()) throw ValidationError("labels must be strings");
        names.push_back(s.get<std::string>());
      }
      p.labels[deg] = std::move(names);
    }
  }

  p.validate();
  return p;
}

std::string serialize_presentation(const CupPresentation& p) {
  json j;
  j["dim"] = p.dim_base;
  json groups = json::object();
  for (const auto& [deg, g] : p.groups.groups) {
    json entry;
    entry["rank"] = g.free_rank;
    json tors = json::array();
    for (const Int& t : g.torsion) tors.push_back(t.convert_to<long long>());
    entry["torsion"] = std::move(tors);
    groups[std::to_string(deg)] = std::move(entry);
  }
  j["groups"] = std::move(groups);
  json cup = json::object();
  for (const auto& [deg, m] : p.cup_x) cup[std::to_string(deg)] = matrix_to_json(m);
  j["cup_x"] = std::move(cup);
  json ec = json::array();
  for (const Int& c : p.euler_class_coords) ec.push_back(c.convert_to<long long>());
  j["euler_class"] = std::move(ec);
  if (!p.labels.empty()) {
    json labels = json::object();
    for (const auto& [deg, names] : p.labels) labels[std::to_string(deg)] = names;
    j["labels"] = std::move(labels);
  }
  return j.dump(2) + "\n";
}

CupPresentation from_a_sequence(const ASequence& s) {
  s.validate();
  CupPresentation p;
  p.dim_base = 2 * s.n;
  p.groups.top_degree = p.dim_base;
  for (int k = 0; k <= s.n; ++k)
    p.groups.set(2 * k, AbelianGroupInvariants{1, {}});
  for (int k = 0; k < s.n; ++k) {
    if (s.a[k + 1] % s.a[k] != 0)
      throw ValidationError(
          "a-sequence not divisible at index " + std::to_string(k + 1) +
          ": the cup product with x does not map the chosen generator to an "
          "integer multiple of the next one; supply full matrices instead");
    IntMatrix m(1, 1);
    m.at(0, 0) = s.a[k + 1] / s.a[k];
    p.cup_x[2 * k] = std::move(m);
  }
  p.cup_x[p.dim_base] = IntMatrix(0, 1);
  p.euler_class_coords = {Int(1)};
  for (int k = 0; k <= s.n; ++k) {
    std::string name;
    if (k == 0)
      name = "1";
    else if (k == 1)
      name = "x";
    else
      name = "x^" + std::to_string(k);
    if (k >= 2 && s.a[k] != 1) name += "/" + s.a[k].str();
    p.labels[2 * k] = {name};
  }
  p.validate();
  return p;
}

bool validate_duality(const ASequence& s) {
  s.validate();
  for (int i = 1; i <= s.n - 1; ++i)
    if (s.a[i] * s.a[s.n - i] != s.a[s.n]) return false;
  return true;
}

bool is_primitive(const std::vector<Int>& v) {
  if (v.empty()) throw ValidationError("primitivity of an empty vector");
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  if (g == 0) throw ValidationError("primitivity of the zero vector");
  return g == 1;
}

}  // namespace bw
