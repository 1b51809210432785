// Command-line front end.
//
// Subcommands:
//   describe  -- print a root system with its pairing data
//   len       -- length of t_lambda * theta, oracle and closed form
//   bruhat    -- compare two elements in both orders
//   adm       -- admissible set of a coweight (json / csv / dot)
//   bgmu      -- test membership of a class in the bounded set of a coweight
//   goodpos   -- run the good-position pipeline at a facet and report
//   verify    -- run a property suite and report failures
//
// Exit codes: 0 all checks pass, 1 a property check failed, 2 input error.

#include <CLI11.hpp>

#include "alcove/alcove.hpp"
#include "alcove/verify/sweep.hpp"

#include <fstream>
#include <iostream>
#include <map>

using namespace alcove;

namespace {

struct CommonArgs {
  std::string type = "A";
  std::string rank = "1";
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--type", c.type, "Cartan type, or comma list for products (A..G)");
  cmd->add_option("--rank", c.rank, "rank, or comma list matching --type");
  cmd->add_option("--format", c.format, "output format: json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

std::vector<std::pair<char, int>> parse_factors(const CommonArgs& c) {
  std::vector<std::string> types, ranks;
  auto split = [](const std::string& s, std::vector<std::string>& out) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      out.push_back(s.substr(pos, comma - pos));
      pos = comma + 1;
    }
  };
  split(c.type, types);
  split(c.rank, ranks);
  if (types.size() != ranks.size())
    throw std::invalid_argument("--type and --rank must list the same number of factors");
  std::vector<std::pair<char, int>> factors;
  for (size_t i = 0; i < types.size(); ++i) {
    if (types[i].size() != 1) throw std::invalid_argument("bad type token: " + types[i]);
    factors.push_back({types[i][0], std::stoi(ranks[i])});
  }
  return factors;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot open output file " + out);
    f << text;
  }
}

// theta given either as a linear-part name or as a json object
// {"linear": ..., "translation": [...]}.
AffineElement parse_theta(RootSystemPtr rs, const std::string& text) {
  if (text.empty()) return identity_element(rs);
  json j;
  if (text[0] == '{' || text[0] == '[')
    j = json::parse(text);
  else
    j = json(text);
  return element_from_json(std::move(rs), j);
}

json report_json(const verify::Report& r) {
  json j;
  j["suite"] = r.suite;
  j["system"] = r.system;
  j["total"] = r.total;
  j["passed"] = r.passed;
  j["failed"] = r.total - r.passed;
  j["skipped"] = r.skipped;
  json fails = json::array();
  for (const auto& f : r.failures) {
    json e;
    e["index"] = f.index;
    e["case"] = f.id;
    e["detail"] = f.detail;
    fails.push_back(e);
  }
  j["failures"] = fails;
  return j;
}

std::string report_csv(const std::vector<verify::Report>& reports) {
  std::ostringstream os;
  os << "suite,system,total,passed,skipped,case,detail\n";
  for (const auto& r : reports) {
    os << r.suite << "," << r.system << "," << r.total << "," << r.passed << "," << r.skipped
       << ",,\n";
    for (const auto& f : r.failures)
      os << r.suite << "," << r.system << ",,,,\"" << f.id << "\",\"" << f.detail << "\"\n";
  }
  return os.str();
}

int run_describe(const CommonArgs& c) {
  auto rs = build_root_system(parse_factors(c));
  json j = to_json(*rs);
  j["cartan"] = rs->cartan;
  json coroots = json::array();
  for (const auto& r : rs->roots) coroots.push_back(r.coroot);
  j["coroots"] = coroots;
  j["positive_count"] = rs->n_positive;
  j["weyl_order"] = weyl_group(*rs).size();
  j["automorphism_order"] = automorphism_group(*rs).size();
  j["omega_order"] = omega_group(fundamental_alcove(rs)).size();
  emit(j.dump(2) + "\n", c.out);
  return 0;
}

int run_len(const CommonArgs& c, const std::string& lambda_s, const std::string& theta_s,
            const std::string& facet_s) {
  auto rs = build_root_system(parse_factors(c));
  Coweight lambda = parse_rat_vec(lambda_s);
  AffineElement theta = parse_theta(rs, theta_s);
  Alcove C = fundamental_alcove(rs);
  Facet F = facet_s.empty() ? Facet{C.interior()} : Facet{parse_rat_vec(facet_s)};

  AffineElement eta = translation_element(rs, lambda) * theta;
  json j;
  j["length"] = length(eta, C);
  j["length_formula"] = length_formula(*rs, F, C, lambda, theta);
  j["lambda"] = to_json(lambda);
  j["theta"] = to_json(theta);
  emit(j.dump(2) + "\n", c.out);
  return j["length"] == j["length_formula"] ? 0 : 1;
}

int run_bruhat(const CommonArgs& c, const std::string& l1, const std::string& t1,
               const std::string& l2, const std::string& t2) {
  auto rs = build_root_system(parse_factors(c));
  auto mk = [&](const std::string& ls, const std::string& ts) {
    Coweight lam = ls.empty() ? Coweight(rs->rank, Rat(0)) : parse_rat_vec(ls);
    return translation_element(rs, lam) * parse_theta(rs, ts);
  };
  AffineElement x = mk(l1, t1), y = mk(l2, t2);
  Alcove C = fundamental_alcove(rs);
  json j;
  j["x"] = to_json(x);
  j["y"] = to_json(y);
  j["len_x"] = length(x, C);
  j["len_y"] = length(y, C);
  j["x_leq_y"] = bruhat_leq(x, y, C);
  j["y_leq_x"] = bruhat_leq(y, x, C);
  j["x_weak_leq_y"] = weak_bruhat_leq(x, y, C);
  j["y_weak_leq_x"] = weak_bruhat_leq(y, x, C);
  emit(j.dump(2) + "\n", c.out);
  return 0;
}

int run_adm(const CommonArgs& c, const std::string& lambda_s, const std::string& facet_s) {
  auto rs = build_root_system(parse_factors(c));
  Coweight mu = parse_rat_vec(lambda_s);
  Alcove C = fundamental_alcove(rs);
  AdmissibleSet adm = admissible_set(rs, mu, C);

  if (c.format == "csv") {
    emit(admissible_rows_csv(adm, C), c.out);
    return 0;
  }
  if (c.format == "dot") {
    emit(bruhat_dot(adm.elements, C), c.out);
    return 0;
  }
  json j;
  j["mu"] = to_json(mu);
  json orbit = json::array();
  for (const auto& lam : adm.orbit) orbit.push_back(to_json(lam));
  j["orbit"] = orbit;
  j["size"] = adm.elements.size();
  j["elements"] = admissible_rows_json(adm, C);
  if (!facet_s.empty()) {
    Facet F{parse_rat_vec(facet_s)};
    json reps = json::array();
    for (const auto& e : admissible_set_parahoric(rs, mu, F, C)) reps.push_back(to_json(e));
    j["parahoric_representatives"] = reps;
  }
  emit(j.dump(2) + "\n", c.out);
  return 0;
}

int run_bgmu(const CommonArgs& c, const std::string& mu_s, const std::string& theta0_s,
             const std::string& b_lambda_s, const std::string& b_theta_s) {
  auto rs = build_root_system(parse_factors(c));
  Coweight mu = parse_rat_vec(mu_s);
  Automorphism theta0 =
      theta0_s.empty() ? identity_automorphism(*rs) : linear_from_json(*rs, json(theta0_s));
  Coweight bl = b_lambda_s.empty() ? Coweight(rs->rank, Rat(0)) : parse_rat_vec(b_lambda_s);
  AffineElement b = translation_element(rs, bl) * parse_theta(rs, b_theta_s);
  Alcove C = fundamental_alcove(rs);

  json j;
  j["b"] = to_json(b);
  j["mu"] = to_json(mu);
  j["newton_point"] = to_json(newton_point(b));
  j["mu_average"] = to_json(galois_average(*rs, mu, theta0));
  j["dominance_holds"] =
      dominance_leq(*rs, newton_point(b), galois_average(*rs, mu, theta0));
  j["in_bg_mu"] = in_bg_mu(b, mu, theta0, C);
  j["mu_minuscule"] = is_minuscule(*rs, mu);
  emit(j.dump(2) + "\n", c.out);
  return 0;
}

int run_goodpos(const CommonArgs& c, const std::string& lambda_s, const std::string& theta_s,
                const std::string& facet_s) {
  auto rs = build_root_system(parse_factors(c));
  Coweight lambda = parse_rat_vec(lambda_s);
  AffineElement theta = parse_theta(rs, theta_s);
  Facet F = facet_s.empty() ? Facet{Point(rs->rank, Rat(0))} : Facet{parse_rat_vec(facet_s)};

  PositiveSubsystem stable =
      stable_chamber(*rs, restricted_system(*rs, F, lambda, theta), theta);
  PositiveSubsystem good = good_position_chamber(*rs, F, lambda, theta, stable);
  Alcove C = alcove_from_facet_chamber(rs, F, good);
  GoodPositionReport rep = good_position_report(*rs, F, lambda, theta, C);

  json j = to_json(rep, *rs);
  j["facet"] = to_json(F.x);
  j["lambda"] = to_json(lambda);
  j["theta"] = to_json(theta);
  emit(j.dump(2) + "\n", c.out);
  bool ok = rep.good_position_holds && rep.length_additivity_holds &&
            rep.bruhat_comparison_holds && rep.weak_bruhat_holds;
  return ok ? 0 : 1;
}

int run_verify(const CommonArgs& c, const std::string& suite, Int bound, Int theta_bound) {
  verify::SweepOptions opt;
  opt.factors = parse_factors(c);
  opt.lambda_bound = bound;
  opt.theta_bound = theta_bound;
  opt.jobs = verify::jobs_from_env();

  int rank = 0;
  for (auto [t, r] : opt.factors) rank += r;

  std::vector<verify::Report> reports;
  auto want = [&](const std::string& name) { return suite == name || suite == "all"; };
  if (want("lenformula")) reports.push_back(verify::length_formula_suite(opt));
  if (want("goodpos")) reports.push_back(verify::good_position_suite(opt));
  if (want("additivity")) reports.push_back(verify::additivity_suite(opt));
  if (want("omega")) reports.push_back(verify::omega_suite(opt));
  if (want("bruhat")) reports.push_back(verify::bruhat_ball_suite(opt));
  if (want("witness")) reports.push_back(verify::witness_suite(opt));
  if (suite == "kottwitz" || (suite == "all" && rank <= 2))
    reports.push_back(verify::kottwitz_suite(opt));
  if (want("minuscule")) reports.push_back(verify::minuscule_suite(opt.jobs));
  if (want("cardinality")) reports.push_back(verify::cardinality_suite(opt.jobs));
  if (reports.empty())
    throw std::invalid_argument(
        "unknown suite: " + suite +
        " (expected lenformula, goodpos, additivity, omega, bruhat, witness, kottwitz, "
        "minuscule, cardinality or all)");

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (c.format == "csv") {
    emit(report_csv(reports), c.out);
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    emit(arr.dump(2) + "\n", c.out);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove: exact combinatorics of extended affine Weyl groups"};
  app.require_subcommand(1);

  CommonArgs c;
  std::string lambda_s, theta_s, facet_s, lambda2_s, theta2_s;
  std::string theta0_s, b_lambda_s, b_theta_s;
  std::string suite = "all";
  Int bound = 2, theta_bound = 1;

  auto* describe = app.add_subcommand("describe", "print a root system");
  add_common(describe, c);

  auto* len = app.add_subcommand("len", "length of t_lambda * theta");
  add_common(len, c);
  len->add_option("--lambda", lambda_s, "coweight coordinates, e.g. 2 or 1,0")->required();
  len->add_option("--theta", theta_s, "linear-part name or element json");
  len->add_option("--facet", facet_s, "facet representative point");

  auto* bruhat = app.add_subcommand("bruhat", "compare t_lambda*theta and t_lambda2*theta2");
  add_common(bruhat, c);
  bruhat->add_option("--lambda", lambda_s, "first element translation");
  bruhat->add_option("--theta", theta_s, "first element twist");
  bruhat->add_option("--lambda2", lambda2_s, "second element translation");
  bruhat->add_option("--theta2", theta2_s, "second element twist");

  auto* adm = app.add_subcommand("adm", "admissible set of a coweight");
  add_common(adm, c);
  adm->add_option("--lambda", lambda_s, "coweight mu")->required();
  adm->add_option("--facet", facet_s, "also give double-coset representatives at this facet");

  auto* bgmu = app.add_subcommand("bgmu", "membership in the classes bounded by mu");
  add_common(bgmu, c);
  bgmu->add_option("--lambda", lambda_s, "coweight mu")->required();
  bgmu->add_option("--theta0", theta0_s, "Frobenius twist (diagram automorphism name)");
  bgmu->add_option("--b-lambda", b_lambda_s, "translation part of the class element");
  bgmu->add_option("--b-theta", b_theta_s, "twist part of the class element");

  auto* goodpos = app.add_subcommand("goodpos", "good-position pipeline at a facet");
  add_common(goodpos, c);
  goodpos->add_option("--lambda", lambda_s, "coweight lambda")->required();
  goodpos->add_option("--theta", theta_s, "normalizing element");
  goodpos->add_option("--facet", facet_s, "facet representative point (default: origin)");

  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  add_common(verify_cmd, c);
  verify_cmd->add_option("--suite", suite,
                         "lenformula, goodpos, additivity, omega, bruhat, witness, kottwitz, "
                         "minuscule, cardinality or all");
  verify_cmd->add_option("--bound", bound, "coweight coordinate bound (default 2)");
  verify_cmd->add_option("--theta-bound", theta_bound, "twist translation bound (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*describe) return run_describe(c);
    if (*len) return run_len(c, lambda_s, theta_s, facet_s);
    if (*bruhat) return run_bruhat(c, lambda_s, theta_s, lambda2_s, theta2_s);
    if (*adm) return run_adm(c, lambda_s, facet_s);
    if (*bgmu) return run_bgmu(c, lambda_s, theta0_s, b_lambda_s, b_theta_s);
    if (*goodpos) return run_goodpos(c, lambda_s, theta_s, facet_s);
    if (*verify_cmd) return run_verify(c, suite, bound, theta_bound);
  } catch (const NoStableChamber& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
