#include "bw/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bw/graded.hpp"
#include "bw/gysin.hpp"
#include "bw/reeb.hpp"
#include "bw/sphere_flow.hpp"
#include "bw/verdicts.hpp"

namespace bw {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_number(const std::string& text) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
  std::size_t pos = 0;
  const double x = std::stod(text, &pos);
  if (pos != text.size()) throw ValidationError("bad numeric literal '" + text + "'");
  return x;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
  if (out.empty()) throw ValidationError("empty numeric list");
  return out;
}

// "xi1_1,xi1_2,...;xi2" with decimal or p/q entries
ReebParameter parse_xi(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos)
    throw ValidationError("xi must be given as 'xi1 entries;xi2'");
  ReebParameter xi;
  xi.xi1 = parse_number_list(text.substr(0, semi));
  xi.xi2 = parse_number(text.substr(semi + 1));
  return xi;
}

json preamble(const std::string& command) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

json group_json(const AbelianGroupInvariants& g) {
  json j;
  j["rank"] = g.free_rank;
  json tors = json::array();
  for (const Int& t : g.torsion) tors.push_back(t.convert_to<long long>());
  j["torsion"] = std::move(tors);
  return j;
}

json cohomology_json(const CupPresentation& p, const TotalSpaceCohomology& tsc) {
  json j;
  j["dim_base"] = p.dim_base;
  j["dim_total"] = p.dim_base + 1;
  json groups = json::object();
  for (int k = 0; k <= p.dim_base + 1; ++k)
    groups[std::to_string(k)] = group_json(tsc.groups.at(k));
  j["groups"] = std::move(groups);
  json ext = json::object();
  for (const auto& [deg, f] : tsc.extension) ext[std::to_string(deg)] = to_string(f);
  j["extension"] = std::move(ext);
  json prov = json::object();
  for (const auto& [deg, parts] : tsc.provenance) {
    json pj;
    pj["cokernel"] = group_json(parts.cokernel_part);
    pj["kernel"] = group_json(parts.kernel_part);
    prov[std::to_string(deg)] = std::move(pj);
  }
  j["provenance"] = std::move(prov);
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["conclusion"] = to_string(v.conclusion);
  json steps = json::array();
  for (const auto& s : v.justification) {
    json sj;
    sj["step"] = s.step;
    sj["status"] = s.checked ? "checked" : "assumed";
    sj["ref"] = s.ref;
    steps.push_back(std::move(sj));
  }
  j["justification"] = std::move(steps);
  return j;
}

json parameter_check_json(const ParameterCheck& chk) {
  json j;
  j["positive"] = chk.positive;
  j["weight_generic"] = chk.weight_generic;
  j["closure_rank"] = chk.closure_rank;
  j["relation_bound"] = chk.relation_bound;
  j["tol"] = chk.tol;
  json rels = json::array();
  for (const auto& r : chk.relations) rels.push_back(r);
  j["relations"] = std::move(rels);
  return j;
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ValidationError("cannot write to '" + out_path + "'");
    f << text;
  }
}

struct Options {
  std::string base, moment, out, xi_text, lambda_text, pi1 = "unknown";
  unsigned long bound = 1000000;
  double tol = 1e-9;
  int k = 1;
  long long subtorus_bound = 10;
  int samples = 1000;
  std::uint64_t seed = 42;
  unsigned long denom_bound = 1000;
  int random_points = 100;
  int n = 0;
  long long c1 = 0;
  int fixed_points = -1;
  bool hamiltonian_isolated = false;
  bool kahler = false;
};

Hypotheses hypotheses_from(const Options& o) {
  Hypotheses h;
  if (o.pi1 == "trivial") h.pi1_base_trivial = Tri::yes;
  if (o.pi1 == "hamiltonian-isolated" || o.hamiltonian_isolated)
    h.hamiltonian_circle_isolated_fixed_points = true;
  if (o.fixed_points >= 0) h.fixed_point_count = o.fixed_points;
  h.base_is_kahler = o.kahler;
  return h;
}

json hypotheses_json(const Hypotheses& h) {
  json j;
  j["pi1_base_trivial"] = to_string(h.pi1_base_trivial);
  j["h2_base_is_Z"] = h.h2_base_is_Z;
  j["euler_primitive"] = h.euler_primitive;
  j["hamiltonian_circle_isolated_fixed_points"] = h.hamiltonian_circle_isolated_fixed_points;
  if (h.fixed_point_count) j["fixed_point_count"] = *h.fixed_point_count;
  if (h.c1_coefficient) j["c1_coefficient"] = h.c1_coefficient->convert_to<long long>();
  j["base_is_kahler"] = h.base_is_kahler;
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cohomology of circle bundles over symplectic bases via the "
               "Gysin sequence, sphere verdicts, and closed Reeb orbit censuses"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options o;
  std::string command;

  auto add_base = [&](CLI::App* cmd) {
    cmd->add_option("--base", o.base, "ring description file")->required();
  };
  auto add_moment = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--moment", o.moment, "moment data file");
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
  };

  CLI::App* total = app.add_subcommand("total-space",
                                       "integral cohomology of the total space");
  add_base(total);
  add_out(total);

  CLI::App* betti = app.add_subcommand("betti", "rational Betti numbers of the total space");
  add_base(betti);
  add_out(betti);

  CLI::App* sphere = app.add_subcommand("sphere-check", "sphere verdict for the total space");
  add_base(sphere);
  add_out(sphere);
  sphere->add_option("--pi1", o.pi1, "trivial | unknown | hamiltonian-isolated")
      ->check(CLI::IsMember({"trivial", "unknown", "hamiltonian-isolated"}));
  sphere->add_option("--fixed-points", o.fixed_points, "number of isolated fixed points");
  sphere->add_flag("--kahler", o.kahler, "base is Kahler");

  CLI::App* pi1 = app.add_subcommand("pi1-check", "simply-connectedness of the total space");
  add_base(pi1);
  add_out(pi1);
  pi1->add_option("--pi1", o.pi1, "trivial | unknown | hamiltonian-isolated")
      ->check(CLI::IsMember({"trivial", "unknown", "hamiltonian-isolated"}));

  CLI::App* chern = app.add_subcommand("chern-check", "first-Chern-class sphere criterion");
  add_out(chern);
  chern->add_option("--n", o.n, "half-dimension of the base")->required();
  chern->add_option("--c1", o.c1, "coefficient c in c1(N) = c x")->required();
  chern->add_option("--fixed-points", o.fixed_points, "number of isolated fixed points");
  chern->add_flag("--hamiltonian-isolated", o.hamiltonian_isolated,
                  "Hamiltonian circle action with isolated fixed points");

  CLI::App* census = app.add_subcommand("reeb-census", "closed Reeb orbits of the perturbed form");
  add_moment(census, true);
  add_out(census);
  census->add_option("--xi", o.xi_text, "'xi1 entries;xi2', decimals or p/q")->required();
  census->add_option("--bound", o.bound, "integer relation search bound");
  census->add_option("--tol", o.tol, "genericity tolerance");

  CLI::App* sub = app.add_subcommand("subtorus", "subtorus with the same fixed point set");
  add_moment(sub, true);
  add_out(sub);
  sub->add_option("--k", o.k, "rank of the subtorus");
  sub->add_option("--bound", o.subtorus_bound, "box bound for the circle direction search");

  CLI::App* flowcmd = app.add_subcommand("sphere-flow", "weighted flow checks on the unit sphere");
  add_out(flowcmd);
  flowcmd->add_option("--lambda", o.lambda_text, "comma-separated positive weights")->required();
  flowcmd->add_option("--samples", o.samples, "invariance sample count");
  flowcmd->add_option("--seed", o.seed, "sampling seed");
  flowcmd->add_option("--tol", o.tol, "tangency tolerance");
  flowcmd->add_option("--denom-bound", o.denom_bound, "denominator bound for closure tests");
  flowcmd->add_option("--random-points", o.random_points, "random full-support points in the census");

  CLI::App* validate = app.add_subcommand("validate", "parse and check an input file");
  add_out(validate);
  validate->add_option("--base", o.base, "ring description file");
  add_moment(validate, false);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (total->parsed()) {
      CupPresentation p = parse_presentation(read_file(o.base));
      TotalSpaceCohomology tsc = total_space_cohomology(p);
      json j = preamble("total-space");
      j["base"] = o.base;
      j.update(cohomology_json(p, tsc));
      emit(j, o.out, out);
    } else if (betti->parsed()) {
      CupPresentation p = parse_presentation(read_file(o.base));
      json j = preamble("betti");
      j["base"] = o.base;
      j["dim_total"] = p.dim_base + 1;
      j["betti"] = total_space_betti(p);
      emit(j, o.out, out);
    } else if (sphere->parsed()) {
      CupPresentation p = parse_presentation(read_file(o.base));
      Hypotheses h = derive_hypotheses(p, hypotheses_from(o));
      Verdict v = sphere_verdict(p, h);
      json j = preamble("sphere-check");
      j["base"] = o.base;
      j["hypotheses"] = hypotheses_json(h);
      j.update(verdict_json(v));
      emit(j, o.out, out);
    } else if (pi1->parsed()) {
      CupPresentation p = parse_presentation(read_file(o.base));
      Hypotheses h = derive_hypotheses(p, hypotheses_from(o));
      json j = preamble("pi1-check");
      j["base"] = o.base;
      j["hypotheses"] = hypotheses_json(h);
      j["pi1_total_space_trivial"] = to_string(pi1_total_space(h));
      emit(j, o.out, out);
    } else if (chern->parsed()) {
      Hypotheses h = hypotheses_from(o);
      h.c1_coefficient = Int(o.c1);
      Verdict v = chern_criterion(o.n, h);
      json j = preamble("chern-check");
      j["n"] = o.n;
      j["hypotheses"] = hypotheses_json(h);
      j.update(verdict_json(v));
      emit(j, o.out, out);
    } else if (census->parsed()) {
      MomentData d = parse_moment_data(read_file(o.moment));
      ReebParameter xi = parse_xi(o.xi_text);
      ParameterCheck chk = check_reeb_parameter(d, xi, o.bound, o.tol);
      json j = preamble("reeb-census");
      j["moment"] = o.moment;
      j["xi1"] = xi.xi1;
      j["xi2"] = xi.xi2;
      j["parameter_check"] = parameter_check_json(chk);
      try {
        std::vector<ClosedOrbit> orbits = closed_orbit_census(d, xi, o.bound, o.tol);
        json oj = json::array();
        for (const auto& orbit : orbits) {
          json e;
          e["name"] = orbit.fixed_point_name;
          e["speed"] = orbit.speed;
          e["period"] = orbit.period;
          oj.push_back(std::move(e));
        }
        j["orbits"] = std::move(oj);
        j["orbit_count"] = orbits.size();
      } catch (const ParameterRejected& e) {
        j["rejected"] = e.what();
        emit(j, o.out, out);
        return 1;
      }
      emit(j, o.out, out);
    } else if (sub->parsed()) {
      MomentData d = parse_moment_data(read_file(o.moment));
      auto vectors = subtorus_same_fixed_set(d, o.k, o.subtorus_bound);
      json j = preamble("subtorus");
      j["moment"] = o.moment;
      j["k"] = o.k;
      j["bound"] = o.subtorus_bound;
      json vj = json::array();
      for (const auto& v : vectors) {
        json row = json::array();
        for (const Int& x : v) row.push_back(x.convert_to<long long>());
        vj.push_back(std::move(row));
      }
      j["vectors"] = std::move(vj);
      emit(j, o.out, out);
    } else if (flowcmd->parsed()) {
      WeightedFlow w;
      w.lambda = parse_number_list(o.lambda_text);
      w.n = static_cast<int>(w.lambda.size()) - 1;
      w.validate();
      InvarianceReport rep = verify_invariance(w, o.samples, o.seed, o.tol);
      ClosureCensus cc = closure_census(w, o.denom_bound, o.tol, o.random_points, o.seed);
      json j = preamble("sphere-flow");
      j["lambda"] = w.lambda;
      j["samples"] = rep.samples;
      j["seed"] = rep.seed;
      j["tol"] = o.tol;
      j["denom_bound"] = o.denom_bound;
      j["random_points"] = o.random_points;
      json inv;
      inv["max_reeb_normalization_dev"] = rep.max_reeb_normalization_dev;
      inv["max_pullback_dev"] = rep.max_pullback_dev;
      inv["max_moment_dev"] = rep.max_moment_dev;
      inv["max_horizontal_dev"] = rep.max_horizontal_dev;
      j["invariance"] = std::move(inv);
      json entries = json::array();
      for (const auto& e : cc.entries) {
        json ej;
        ej["point"] = e.point;
        ej["closed"] = e.closed;
        if (e.period)
          ej["period"] = *e.period;
        else
          ej["period"] = nullptr;
        entries.push_back(std::move(ej));
      }
      json ccj;
      ccj["entries"] = std::move(entries);
      ccj["closed_count"] = cc.closed_count;
      j["closure_census"] = std::move(ccj);
      emit(j, o.out, out);
    } else if (validate->parsed()) {
      if (o.base.empty() == o.moment.empty())
        throw ValidationError("validate needs exactly one of --base or --moment");
      json j = preamble("validate");
      if (!o.base.empty()) {
        parse_presentation(read_file(o.base));
        j["kind"] = "ring";
        j["path"] = o.base;
      } else {
        parse_moment_data(read_file(o.moment));
        j["kind"] = "moment";
        j["path"] = o.moment;
      }
      j["valid"] = true;
      emit(j, o.out, out);
    }
  } catch (const ParameterRejected& e) {
    json j;
    j["error"] = e.what();
    j["kind"] = "parameter-rejected";
    out << j.dump(2) << "\n";
    return 1;
  } catch (const SearchExhausted& e) {
    json j;
    j["error"] = e.what();
    j["kind"] = "search-exhausted";
    out << j.dump(2) << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace bw
