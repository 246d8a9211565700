#include "bw/reeb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "bw/lattice.hpp"
#include "json.hpp"

namespace bw {

namespace {

using json = nlohmann::ordered_json;

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::size_t rank_of(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return rank(m);
}

bool accept_relation(const std::vector<long long>& c, const std::vector<double>& v,
                     double tol, double vnorm) {
  double dot = 0, cn = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    dot += static_cast<double>(c[i]) * v[i];
    cn += static_cast<double>(c[i]) * static_cast<double>(c[i]);
  }
  return std::abs(dot) <= tol * std::sqrt(cn) * vnorm;
}

void normalize_sign(std::vector<long long>& c) {
  for (long long x : c) {
    if (x > 0) return;
    if (x < 0) break;
  }
  for (long long& x : c) x = -x;
}

// Exhaustive lexicographic scan of the box, feasible up to a few million
// candidates.
constexpr double kExhaustiveBudget = 4.2e6;

std::vector<std::vector<long long>> relations_exhaustive(const std::vector<double>& v,
                                                         long long bound, double tol) {
  const std::size_t k = v.size();
  const double vnorm = norm2(v);
  std::vector<std::vector<long long>> found;
  std::vector<long long> c(k, -bound);
  bool done = false;
  // a nonzero direction admits at most k - 1 independent relations
  const std::size_t cap = k - 1;
  while (!done) {
    bool zero = true;
    for (long long x : c)
      if (x != 0) {
        zero = false;
        break;
      }
    if (!zero && found.size() < cap && accept_relation(c, v, tol, vnorm)) {
      std::vector<long long> cand = c;
      normalize_sign(cand);
      auto trial = found;
      trial.push_back(cand);
      if (rank_of(trial, k) == found.size() + 1) found.push_back(std::move(cand));
    }
    std::size_t i = k;
    for (;;) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (c[i] < bound) {
        ++c[i];
        break;
      }
      c[i] = -bound;
    }
  }
  return found;
}

// Largest box half-width whose full scan stays within the budget.
long long exhaustive_limit(std::size_t k, long long bound) {
  long long s = 0;
  for (;;) {
    double box = 1;
    for (std::size_t i = 0; i < k && box <= kExhaustiveBudget; ++i)
      box *= 2.0 * (s + 1) + 1.0;
    if (box > kExhaustiveBudget || s + 1 > bound) return s;
    ++s;
  }
}

// At double precision a genuine relation evaluates to rounding noise,
// about eps * |c| * |v|; near-relations that merely satisfy the relative
// tolerance sit orders of magnitude above that. The factor leaves a wide
// margin over the noise while staying far below the best non-relations any
// ladder scale can surface.
bool at_noise_floor(const std::vector<long long>& c, const std::vector<double>& v) {
  double dot = 0, cmax = 0, vmax = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    dot += static_cast<double>(c[i]) * v[i];
    cmax = std::max(cmax, std::abs(static_cast<double>(c[i])));
    vmax = std::max(vmax, std::abs(v[i]));
  }
  return std::abs(dot) <= 1e-13 * std::max(cmax, 1.0) * std::max(vmax, 1.0);
}

std::vector<std::vector<long long>> relations_lll(const std::vector<double>& v,
                                                  long long bound, double tol,
                                                  std::vector<std::vector<long long>> found) {
  const std::size_t k = v.size();
  const double vnorm = norm2(v);
  double vmax = 0;
  for (double x : v) vmax = std::max(vmax, std::abs(x));

  // Ladder of scales: small scales find relations with small coefficients,
  // large ones resolve larger coefficients against the per-entry rounding
  // of the embedded lattice.
  const double scale_cap =
      std::min(1e13 / std::max(vmax, 1e-30), 9e15 / std::max(vmax, 1.0));
  // Beyond this coefficient size, near-relations of a generic vector cross
  // the noise floor (expected count ~ 1e-13 * C^k), and double precision
  // can no longer tell them from exact relations.
  const long long coeff_cap = std::min(
      bound, static_cast<long long>(std::pow(1e10, 1.0 / static_cast<double>(k))));
  std::vector<std::vector<long long>> candidates;
  for (double scale = 1e4; scale <= scale_cap && found.size() < k - 1; scale *= 100.0) {
    std::vector<std::vector<Int>> basis(k, std::vector<Int>(k + 1, Int(0)));
    for (std::size_t i = 0; i < k; ++i) {
      basis[i][i] = 1;
      basis[i][k] = Int(static_cast<long long>(std::llround(v[i] * scale)));
    }
    lll_reduce(basis);
    for (const auto& row : basis) {
      std::vector<long long> c(k, 0);
      bool nonzero = false, in_box = true;
      for (std::size_t i = 0; i < k; ++i) {
        if (int_abs(row[i]) > coeff_cap) {
          in_box = false;
          break;
        }
        c[i] = row[i].convert_to<long long>();
        if (c[i] != 0) nonzero = true;
      }
      if (nonzero && in_box && accept_relation(c, v, tol, vnorm) &&
          at_noise_floor(c, v)) {
        normalize_sign(c);
        candidates.push_back(std::move(c));
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const std::vector<long long>& a, const std::vector<long long>& b) {
                double na = 0, nb = 0;
                for (long long x : a) na += double(x) * double(x);
                for (long long x : b) nb += double(x) * double(x);
                if (na != nb) return na < nb;
                return a < b;
              });
    for (auto& c : candidates) {
      if (found.size() == k - 1) break;
      auto trial = found;
      trial.push_back(c);
      if (rank_of(trial, k) == found.size() + 1) found.push_back(std::move(c));
    }
    candidates.clear();
  }
  return found;
}

}  // namespace

std::vector<std::vector<long long>> integer_relations(const std::vector<double>& v,
                                                      unsigned long bound, double tol) {
  if (v.empty()) throw PreconditionError("integer relation search needs a nonempty vector");
  if (bound < 1) throw PreconditionError("relation bound must be at least 1");
  const std::size_t k = v.size();
  const long long b = static_cast<long long>(std::min(bound, 1000000000000000ul));
  const long long limit = exhaustive_limit(k, b);

  // Doubling boxes keep the returned vectors small: the scan stops as soon
  // as the relation lattice is full (rank k - 1) or the box is exhausted.
  std::vector<std::vector<long long>> found;
  if (limit >= 1) {
    for (long long s = 1;; s *= 2) {
      if (s > limit) s = limit;
      found = relations_exhaustive(v, s, tol);
      if (found.size() == k - 1 || s == limit) break;
    }
  }
  if (limit >= b || found.size() == k - 1) return found;

  // The box is too large to finish exhaustively: add LLL candidates, which
  // recover relations with small coefficients beyond the scanned range.
  return relations_lll(v, b, tol, std::move(found));
}

bool MomentData::isolated() const {
  const int n = half_dim();
  for (const auto& p : fixed_points)
    if (static_cast<int>(p.weights.size()) != n) return false;
  return true;
}

void MomentData::validate() const {
  if (base_dim < 2 || base_dim % 2 != 0)
    throw ValidationError("base dimension must be a positive even integer");
  const int n = half_dim();
  if (torus_rank < 1 || torus_rank > n)
    throw ValidationError("torus rank must satisfy 1 <= l <= n; got l = " +
                          std::to_string(torus_rank) + ", n = " + std::to_string(n));
  std::set<std::string> names;
  for (const auto& p : fixed_points) {
    if (p.name.empty()) throw ValidationError("fixed point with empty name");
    if (!names.insert(p.name).second)
      throw ValidationError("duplicate fixed point name '" + p.name + "'");
    if (static_cast<int>(p.moment.size()) != torus_rank)
      throw ValidationError("moment value of '" + p.name + "' has wrong length");
    for (const auto& w : p.weights) {
      if (static_cast<int>(w.size()) != torus_rank)
        throw ValidationError("weight at '" + p.name + "' has wrong length");
      bool nonzero = false;
      for (const Int& x : w)
        if (x != 0) nonzero = true;
      if (!nonzero) throw ValidationError("zero isotropy weight at '" + p.name + "'");
    }
  }
  if (isolated() && static_cast<int>(fixed_points.size()) < n + 1)
    throw ValidationError(
        "isolated fixed point data must contain at least n+1 = " +
        std::to_string(n + 1) + " points; got " + std::to_string(fixed_points.size()));
}

double moment_pairing(const FixedPoint& p, const std::vector<double>& xi1) {
  double s = 0;
  for (std::size_t i = 0; i < xi1.size(); ++i) s += to_double(p.moment[i]) * xi1[i];
  return s;
}

ParameterCheck check_reeb_parameter(const MomentData& d, const ReebParameter& xi,
                                    unsigned long relation_bound, double tol) {
  d.validate();
  if (static_cast<int>(xi.xi1.size()) != d.torus_rank)
    throw ValidationError("xi1 must have one entry per torus factor");
  bool any = xi.xi2 != 0;
  for (double x : xi.xi1) any = any || x != 0;
  if (!any) throw ValidationError("xi must be nonzero");

  ParameterCheck out;
  out.relation_bound = relation_bound;
  out.tol = tol;

  out.positive = true;
  for (const auto& p : d.fixed_points)
    if (moment_pairing(p, xi.xi1) + xi.xi2 <= 0) out.positive = false;

  out.weight_generic = true;
  for (const auto& p : d.fixed_points)
    for (const auto& w : p.weights) {
      double pairing = 0;
      for (std::size_t i = 0; i < xi.xi1.size(); ++i)
        pairing += to_double(w[i]) * xi.xi1[i];
      if (std::abs(pairing) <= tol) out.weight_generic = false;
    }

  std::vector<double> concat = xi.xi1;
  concat.push_back(xi.xi2);
  out.relations = integer_relations(concat, relation_bound, tol);
  out.closure_rank = static_cast<int>(concat.size()) - static_cast<int>(out.relations.size());
  return out;
}

std::vector<ClosedOrbit> closed_orbit_census(const MomentData& d, const ReebParameter& xi,
                                             unsigned long relation_bound, double tol) {
  ParameterCheck chk = check_reeb_parameter(d, xi, relation_bound, tol);
  if (!chk.positive) {
    for (const auto& p : d.fixed_points)
      if (moment_pairing(p, xi.xi1) + xi.xi2 <= 0)
        throw ParameterRejected("positivity failed: speed at fixed point '" + p.name +
                                "' is not positive");
    throw ParameterRejected("positivity failed");
  }
  if (!chk.weight_generic) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", tol);
    throw ParameterRejected(
        "weight genericity failed: xi1 lies on an isotropy weight hyperplane "
        "(pairing within tol " + std::string(buf) + ")");
  }
  if (chk.closure_rank < 2)
    throw ParameterRejected("closure rank " + std::to_string(chk.closure_rank) +
                            " < 2: the flow closure is a circle and the orbit "
                            "correspondence does not apply");

  std::vector<ClosedOrbit> orbits;
  orbits.reserve(d.fixed_points.size());
  for (const auto& p : d.fixed_points) {
    const double speed = moment_pairing(p, xi.xi1) + xi.xi2;
    orbits.push_back({p.name, speed, 1.0 / speed});
  }
  if (d.isolated() && orbits.size() < static_cast<std::size_t>(d.half_dim()) + 1)
    throw std::logic_error("census smaller than the minimal orbit count");
  return orbits;
}

std::vector<std::vector<Int>> subtorus_same_fixed_set(const MomentData& d, int k,
                                                      long long search_bound) {
  d.validate();
  const int l = d.torus_rank;
  if (k < 1 || k > l)
    throw PreconditionError("subtorus rank k must satisfy 1 <= k <= l");
  if (search_bound < 1) throw PreconditionError("search bound must be at least 1");

  // Coordinates scan 0, 1, ..., B, -1, ..., -B; vectors whose first nonzero
  // entry is negative are sign-duplicates and are skipped.
  const long long width = 2 * search_bound + 1;
  auto coord = [&](long long idx) -> long long {
    return idx <= search_bound ? idx : search_bound - idx;
  };

  std::vector<Int> lead;
  std::vector<long long> idx(l, 0);
  for (;;) {
    std::vector<Int> v(l);
    bool zero = true, neg_lead = false;
    for (int i = 0; i < l; ++i) {
      v[i] = coord(idx[i]);
      if (zero && v[i] != 0) {
        zero = false;
        neg_lead = v[i] < 0;
      }
    }
    if (!zero && !neg_lead) {
      bool good = true;
      for (const auto& p : d.fixed_points) {
        for (const auto& w : p.weights) {
          Int pairing = 0;
          for (int i = 0; i < l; ++i) pairing += w[i] * v[i];
          if (pairing == 0) {
            good = false;
            break;
          }
        }
        if (!good) break;
      }
      if (good) {
        lead = std::move(v);
        break;
      }
    }
    int i = l;
    bool done = false;
    while (i > 0) {
      --i;
      if (idx[i] + 1 < width) {
        ++idx[i];
        break;
      }
      idx[i] = 0;
      if (i == 0) done = true;
    }
    if (done)
      throw SearchExhausted("no circle direction within the box [-" +
                            std::to_string(search_bound) + ", " +
                            std::to_string(search_bound) +
                            "]^l avoids all weight hyperplanes; enlarge the bound");
  }

  std::vector<std::vector<Int>> result{lead};
  for (int i = 0; i < l && static_cast<int>(result.size()) < k; ++i) {
    std::vector<Int> e(l, 0);
    e[i] = 1;
    auto trial = result;
    trial.push_back(e);
    IntMatrix m(trial.size(), l);
    for (std::size_t r = 0; r < trial.size(); ++r)
      for (int c = 0; c < l; ++c) m.at(r, c) = trial[r][c];
    if (rank(m) == trial.size()) result.push_back(std::move(e));
  }
  return result;
}

MomentData parse_moment_data(const std::string& source) {
  json j;
  try {
    j = json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < source.size(); ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error", line, col);
  }
  if (!j.is_object()) throw ValidationError("moment data must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "torus_rank" && key != "base_dim" && key != "fixed_points")
      throw ValidationError("unknown top-level field '" + key + "'");
  }
  if (!j.contains("torus_rank") || !j["torus_rank"].is_number_integer())
    throw ValidationError("missing integer field 'torus_rank'");
  if (!j.contains("base_dim") || !j["base_dim"].is_number_integer())
    throw ValidationError("missing integer field 'base_dim'");
  if (!j.contains("fixed_points") || !j["fixed_points"].is_array())
    throw ValidationError("missing list field 'fixed_points'");

  MomentData d;
  d.torus_rank = j["torus_rank"].get<int>();
  d.base_dim = j["base_dim"].get<int>();
  for (const auto& pj : j["fixed_points"]) {
    if (!pj.is_object()) throw ValidationError("fixed point entries must be objects");
    for (const auto& [key, value] : pj.items()) {
      (void)value;
      if (key != "name" && key != "moment" && key != "weights")
        throw ValidationError("unknown fixed point field '" + key + "'");
    }
    FixedPoint p;
    if (!pj.contains("name") || !pj["name"].is_string())
      throw ValidationError("fixed point without a string 'name'");
    p.name = pj["name"].get<std::string>();
    if (!pj.contains("moment") || !pj["moment"].is_array())
      throw ValidationError("fixed point '" + p.name + "' without a 'moment' list");
    for (const auto& m : pj["moment"]) {
      if (m.is_string()) {
        try {
          p.moment.push_back(parse_rational(m.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          throw ValidationError("bad moment entry at '" + p.name + "': " + e.what());
        }
      } else if (m.is_number_integer()) {
        p.moment.push_back(Rat(Int(m.get<long long>()), 1));
      } else {
        throw ValidationError("moment entries must be \"p/q\" strings or integers");
      }
    }
    if (!pj.contains("weights") || !pj["weights"].is_array())
      throw ValidationError("fixed point '" + p.name + "' without a 'weights' list");
    for (const auto& wj : pj["weights"]) {
      if (!wj.is_array()) throw ValidationError("weights must be lists of integers");
      std::vector<Int> w;
      for (const auto& x : wj) {
        if (!x.is_number_integer())
          throw ValidationError("weight entries must be integers");
        w.push_back(Int(x.get<long long>()));
      }
      p.weights.push_back(std::move(w));
    }
    d.fixed_points.push_back(std::move(p));
  }
  d.validate();
  return d;
}

std::string serialize_moment_data(const MomentData& d) {
  json j;
  j["torus_rank"] = d.torus_rank;
  j["base_dim"] = d.base_dim;
  json pts = json::array();
  for (const auto& p : d.fixed_points) {
    json pj;
    pj["name"] = p.name;
    json moment = json::array();
    for (const Rat& m : p.moment) moment.push_back(to_string(m));
    pj["moment"] = std::move(moment);
    json weights = json::array();
    for (const auto& w : p.weights) {
      json wj = json::array();
      for (const Int& x : w) wj.push_back(x.convert_to<long long>());
      weights.push_back(std::move(wj));
    }
    pj["weights"] = std::move(weights);
    pts.push_back(std::move(pj));
  }
  j["fixed_points"] = std::move(pts);
  return j.dump(2) + "\n";
}

}  // namespace bw
