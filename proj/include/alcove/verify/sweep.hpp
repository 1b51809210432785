// Property sweep driver. Each suite enumerates a finite, deterministic case
// list and checks one exact identity per case; failures carry a payload that
// reproduces the case. Groups of cases may run on several threads; results
// are merged in enumeration order, so reports are identical for any worker
// count.

#pragma once

#include "alcove/good_position.hpp"
#include "alcove/verify/oracles.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace alcove::verify {

struct SweepOptions {
  std::vector<std::pair<char, int>> factors{{'A', 1}};
  Int lambda_bound = 2;
  Int theta_bound = 1;
  int jobs = 1;
  std::vector<Point> extra_facets;
};

inline int jobs_from_env() {
  const char* s = std::getenv("ALCOVE_JOBS");
  if (!s) return 1;
  int n = std::atoi(s);
  return n > 0 ? n : 1;
}

enum class Status { pass, fail, skip };

struct CaseResult {
  Status status;
  std::string id;
  std::string detail;
};

inline CaseResult case_pass(std::string id) { return {Status::pass, std::move(id), {}}; }
inline CaseResult case_skip(std::string id, std::string why) {
  return {Status::skip, std::move(id), std::move(why)};
}
inline CaseResult case_fail(std::string id, std::string detail) {
  return {Status::fail, std::move(id), std::move(detail)};
}

struct Failure {
  size_t index;
  std::string id;
  std::string detail;
};

struct Report {
  std::string suite;
  std::string system;
  size_t total = 0;    // executed checks (pass + fail)
  size_t passed = 0;
  size_t skipped = 0;  // cases vacuous by precondition
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
};

// Runs fn over group indices [0, n); fn returns the case results of one
// group. Group order (and within-group order) is preserved in the report.
inline Report run_grouped(std::string suite, std::string system, size_t n, int jobs,
                          const std::function<std::vector<CaseResult>(size_t)>& fn) {
  Report rep;
  rep.suite = std::move(suite);
  rep.system = std::move(system);
  if (jobs < 1) jobs = 1;
  std::vector<std::vector<CaseResult>> results(n);
  if (jobs == 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) results[i] = fn(i);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        results[i] = fn(i);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  size_t index = 0;
  for (auto& group : results)
    for (auto& c : group) {
      switch (c.status) {
        case Status::pass:
          ++rep.total;
          ++rep.passed;
          break;
        case Status::fail:
          ++rep.total;
          rep.failures.push_back({index, std::move(c.id), std::move(c.detail)});
          break;
        case Status::skip:
          ++rep.skipped;
          break;
      }
      ++index;
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Shared sweep context

struct FacetCase {
  Facet F;
  std::vector<int> rf;
  std::vector<PositiveSubsystem> chambers;
  std::vector<Alcove> alcoves;  // aligned with chambers
  std::vector<AffineElement> thetas;
  std::vector<AffineElement> wf;
};

struct SweepContext {
  RootSystemPtr rs;
  Alcove base;
  std::vector<FacetCase> facets;
  std::vector<Coweight> lambdas;

  SweepContext(RootSystemPtr rs_in, const SweepOptions& opt)
      : rs(std::move(rs_in)), base(fundamental_alcove(rs)) {
    const RootSystem& R = *rs;
    auto auts = automorphism_group(R);

    std::vector<Facet> faces = fundamental_alcove_faces(R);
    for (const auto& p : opt.extra_facets) faces.push_back(Facet{p});
    for (const auto& F : faces) {
      FacetCase fc{F, facet_subsystem(R, F), {}, {}, {}, {}};
      fc.chambers = alcove::chambers(R, fc.rf);
      for (const auto& ch : fc.chambers)
        fc.alcoves.push_back(alcove_from_facet_chamber(rs, F, ch));
      IntVec v(R.rank, -opt.theta_bound);
      for (;;) {
        RatVec t = rat_vec(v);
        for (const auto& a : auts) {
          AffineElement theta(rs, a, t);
          if (same_facet(R, theta.act(F.x), F.x)) fc.thetas.push_back(std::move(theta));
        }
        int i = 0;
        while (i < R.rank && ++v[i] > opt.theta_bound) v[i++] = -opt.theta_bound;
        if (i == R.rank) break;
      }
      fc.wf = facet_reflection_group(rs, F);
      facets.push_back(std::move(fc));
    }

    IntVec lv(R.rank, -opt.lambda_bound);
    for (;;) {
      lambdas.push_back(rat_vec(lv));
      int i = 0;
      while (i < R.rank && ++lv[i] > opt.lambda_bound) lv[i++] = -opt.lambda_bound;
      if (i == R.rank) break;
    }
  }
};

inline std::string case_id(const SweepContext& ctx, size_t f, const Coweight* lambda,
                           const AffineElement* theta, const Alcove* C) {
  std::ostringstream os;
  os << ctx.rs->label << ";facet=" << to_string(ctx.facets[f].F.x);
  if (lambda) os << ";lambda=" << to_string(*lambda);
  if (theta) os << ";theta=" << to_string(*theta);
  if (C) os << ";alcove=" << to_string(C->interior());
  return os.str();
}

// ---------------------------------------------------------------------------
// Suite: closed-form length against the separating-wall count

inline Report length_formula_suite(const SweepOptions& opt) {
  auto rs = build_root_system(opt.factors);
  SweepContext ctx(rs, opt);
  const RootSystem& R = *rs;

  // group = (facet, theta); cases = lambdas x alcoves
  std::vector<std::pair<size_t, size_t>> groups;
  for (size_t f = 0; f < ctx.facets.size(); ++f)
    for (size_t t = 0; t < ctx.facets[f].thetas.size(); ++t) groups.push_back({f, t});

  auto fn = [&](size_t g) {
    auto [f, t] = groups[g];
    const FacetCase& fc = ctx.facets[f];
    const AffineElement& theta = fc.thetas[t];
    std::vector<CaseResult> out;
    for (const auto& lambda : ctx.lambdas) {
      AffineElement tl = translation_element(rs, lambda) * theta;
      for (const auto& C : fc.alcoves) {
        Int oracle = length(tl, C);
        Int formula = length_formula(R, fc.F, C, lambda, theta);
        if (oracle == formula)
          out.push_back(case_pass({}));
        else
          out.push_back(case_fail(case_id(ctx, f, &lambda, &theta, &C),
                                  "formula=" + std::to_string(formula) +
                                      " oracle=" + std::to_string(oracle)));
      }
    }
    return out;
  };
  return run_grouped("lenformula", R.label, groups.size(), opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: the constructive good-position chamber

inline Report good_position_suite(const SweepOptions& opt) {
  auto rs = build_root_system(opt.factors);
  SweepContext ctx(rs, opt);
  const RootSystem& R = *rs;

  std::vector<std::pair<size_t, size_t>> groups;  // (facet, theta)
  for (size_t f = 0; f < ctx.facets.size(); ++f)
    for (size_t t = 0; t < ctx.facets[f].thetas.size(); ++t) groups.push_back({f, t});

  auto fn = [&](size_t g) {
    auto [f, t] = groups[g];
    const FacetCase& fc = ctx.facets[f];
    const AffineElement& theta = fc.thetas[t];
    std::vector<CaseResult> out;
    for (const auto& lambda : ctx.lambdas) {
      std::string id = case_id(ctx, f, &lambda, &theta, nullptr);
      PositiveSubsystem stable;
      try {
        stable = stable_chamber(R, restricted_system(R, fc.F, lambda, theta), theta);
      } catch (const NoStableChamber&) {
        out.push_back(case_skip(id, "no stable chamber"));
        continue;
      }
      PositiveSubsystem built = good_position_chamber(R, fc.F, lambda, theta, stable);

      // the output must be one of the enumerated chambers of R_F ...
      size_t pos = fc.chambers.size();
      for (size_t c = 0; c < fc.chambers.size(); ++c)
        if (fc.chambers[c] == built) {
          pos = c;
          break;
        }
      if (pos == fc.chambers.size()) {
        out.push_back(case_fail(id, "output is not a chamber of R_F"));
        continue;
      }
      // ... and a good-position one, containing the stable chamber's
      // positives; at least one good chamber must exist.
      bool good = is_good_position(R, fc.F, lambda, fc.alcoves[pos], theta);
      bool contains = true;
      for (int i : stable.positives)
        if (!built.contains_positive(i)) contains = false;
      bool any_good = false;
      for (size_t c = 0; c < fc.chambers.size() && !any_good; ++c)
        if (is_good_position(R, fc.F, lambda, fc.alcoves[c], theta)) any_good = true;
      if (good && contains && any_good)
        out.push_back(case_pass({}));
      else
        out.push_back(case_fail(id, std::string("good=") + (good ? "1" : "0") +
                                        " contains_stable=" + (contains ? "1" : "0") +
                                        " any_good=" + (any_good ? "1" : "0")));
    }
    return out;
  };
  return run_grouped("goodpos", R.label, groups.size(), opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: length additivity and both order comparisons at good position

inline Report additivity_suite(const SweepOptions& opt) {
  auto rs = build_root_system(opt.factors);
  SweepContext ctx(rs, opt);
  const RootSystem& R = *rs;

  struct Group {
    size_t f, lam, alc;
  };
  std::vector<Group> groups;
  for (size_t f = 0; f < ctx.facets.size(); ++f)
    for (size_t l = 0; l < ctx.lambdas.size(); ++l)
      for (size_t c = 0; c < ctx.facets[f].alcoves.size(); ++c) groups.push_back({f, l, c});

  auto fn = [&](size_t g) {
    const FacetCase& fc = ctx.facets[groups[g].f];
    const Coweight& lambda = ctx.lambdas[groups[g].lam];
    const Alcove& C = fc.alcoves[groups[g].alc];
    std::vector<CaseResult> out;

    AffineElement t_lambda = translation_element(rs, lambda);
    Int len_t = length(t_lambda, C);

    struct Query {
      size_t theta_idx;
      AffineElement witness;
      bool recursion;
      bool additivity;
      bool weak;
    };
    std::vector<Query> queries;
    for (size_t t = 0; t < fc.thetas.size(); ++t) {
      const AffineElement& theta = fc.thetas[t];
      if (!is_good_position(R, fc.F, lambda, C, theta)) continue;
      AffineElement w_c = facet_part(theta, fc.F, C, fc.wf);
      AffineElement w = t_lambda * w_c;
      bool additivity = len_t == length(t_lambda * theta, C) + length(theta, C);
      bool recursion = bruhat_leq(w, t_lambda, C);
      bool weak = weak_bruhat_leq(w, t_lambda, C);
      queries.push_back({t, std::move(w), recursion, additivity, weak});
    }
    if (queries.empty()) return out;

    AffineElement gamma = omega_decompose(t_lambda, C).second;
    auto word = reduced_word(t_lambda, C);
    std::vector<AffineElement> targets;
    for (const auto& q : queries) targets.push_back(q.witness * gamma.inverse());
    std::vector<bool> subword = subword_reachable(C, word, targets);

    for (size_t i = 0; i < queries.size(); ++i) {
      const Query& q = queries[i];
      bool pass = q.additivity && q.recursion && subword[i] && q.weak;
      if (pass)
        out.push_back(case_pass({}));
      else
        out.push_back(case_fail(
            case_id(ctx, groups[g].f, &lambda, &fc.thetas[q.theta_idx], &C),
            std::string("additivity=") + (q.additivity ? "1" : "0") +
                " bruhat_recursion=" + (q.recursion ? "1" : "0") +
                " bruhat_subword=" + (subword[i] ? "1" : "0") + " weak=" + (q.weak ? "1" : "0")));
    }
    return out;
  };
  Report rep = run_grouped("additivity", R.label, groups.size(), opt.jobs, fn);

  // Non-vacuity: the sweep must contain a non-good chamber breaking
  // additivity, otherwise the good-position hypothesis did no work.
  bool found = false;
  for (size_t f = 0; f < ctx.facets.size() && !found; ++f)
    for (const auto& lambda : ctx.lambdas)
      for (const auto& C : ctx.facets[f].alcoves)
        for (const auto& theta : ctx.facets[f].thetas) {
          if (is_good_position(R, ctx.facets[f].F, lambda, C, theta)) continue;
          AffineElement t_lambda = translation_element(rs, lambda);
          if (length(t_lambda, C) !=
              length(t_lambda * theta, C) + length(theta, C)) {
            found = true;
            break;
          }
        }
  ++rep.total;
  if (found)
    ++rep.passed;
  else
    rep.failures.push_back(
        {rep.total, R.label + ";nonvacuity", "no non-good chamber breaks additivity"});
  return rep;
}

// ---------------------------------------------------------------------------
// Suite: stabilizer invariance and inverse symmetry of the length

inline Report omega_suite(const SweepOptions& opt, Int ball_radius = 6) {
  auto rs = build_root_system(opt.factors);
  Alcove C = fundamental_alcove(rs);
  auto omega = omega_group(C);
  auto ball = length_ball(C, ball_radius);

  auto fn = [&](size_t i) {
    std::vector<CaseResult> out;
    for (const auto& g0 : omega) {
      AffineElement eta = ball[i] * g0;
      Int l = length(eta, C);
      bool ok = length(eta.inverse(), C) == l;
      for (const auto& gamma : omega)
        if (length(eta * gamma, C) != l || length(gamma * eta, C) != l) ok = false;
      if (ok)
        out.push_back(case_pass({}));
      else
        out.push_back(case_fail(rs->label + ";eta=" + to_string(eta),
                                "stabilizer invariance or inverse symmetry failed"));
    }
    return out;
  };
  return run_grouped("omega", rs->label, ball.size(), opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: Bruhat recursion against the subword oracle on a ball

inline Report bruhat_ball_suite(const SweepOptions& opt, Int ball_radius = 6) {
  auto rs = build_root_system(opt.factors);
  Alcove C = fundamental_alcove(rs);
  auto ball = length_ball(C, ball_radius);

  auto fn = [&](size_t i) {
    std::vector<CaseResult> out;
    auto word = reduced_word(ball[i], C);
    auto hits = subword_reachable(C, word, ball);
    for (size_t j = 0; j < ball.size(); ++j) {
      bool rec = bruhat_leq(ball[j], ball[i], C);
      bool weak = weak_bruhat_leq(ball[j], ball[i], C);
      bool ok = rec == hits[j] && (!weak || rec);
      if (ok)
        out.push_back(case_pass({}));
      else
        out.push_back(case_fail(
            rs->label + ";x=" + to_string(ball[j]) + ";y=" + to_string(ball[i]),
            std::string("recursion=") + (rec ? "1" : "0") + " subword=" + (hits[j] ? "1" : "0") +
                " weak=" + (weak ? "1" : "0")));
    }
    return out;
  };
  return run_grouped("bruhat", rs->label, ball.size(), opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: minuscule coweights collapse to one double coset at a special point

inline Report minuscule_suite(int jobs = 1) {
  struct Fixture {
    std::vector<std::pair<char, int>> factors;
    IntVec mu;
  };
  std::vector<Fixture> fixtures = {
      {{{'A', 1}}, {1}},
      {{{'A', 2}}, {1, 0}},
      {{{'A', 2}}, {0, 1}},
      {{{'A', 3}}, {0, 1, 0}},
  };
  auto fn = [&](size_t i) {
    auto rs = build_root_system(fixtures[i].factors);
    Coweight mu = rat_vec(fixtures[i].mu);
    Alcove C = fundamental_alcove(rs);
    Facet origin{Point(rs->rank, Rat(0))};
    std::string id = rs->label + ";mu=" + to_string(mu);
    std::vector<CaseResult> out;
    if (!is_minuscule(*rs, mu)) {
      out.push_back(case_fail(id, "expected minuscule coweight"));
      return out;
    }
    auto reps = admissible_set_parahoric(rs, mu, origin, C);
    if (reps.size() == 1)
      out.push_back(case_pass({}));
    else
      out.push_back(case_fail(id, "double cosets: " + std::to_string(reps.size())));
    return out;
  };
  return run_grouped("minuscule", "A1,A2,A3", fixtures.size(), jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: the admissibility witness over dominant coweights

inline Report witness_suite(const SweepOptions& opt) {
  auto rs = build_root_system(opt.factors);
  SweepContext ctx(rs, opt);
  const RootSystem& R = *rs;

  std::vector<Coweight> mus;
  for (const auto& lam : ctx.lambdas)
    if (is_dominant(R, lam)) mus.push_back(lam);

  std::vector<std::pair<size_t, size_t>> groups;  // (facet, mu)
  for (size_t f = 0; f < ctx.facets.size(); ++f)
    for (size_t m = 0; m < mus.size(); ++m) groups.push_back({f, m});

  auto fn = [&](size_t g) {
    auto [f, m] = groups[g];
    const FacetCase& fc = ctx.facets[f];
    std::vector<CaseResult> out;
    for (const auto& theta : fc.thetas) {
      std::string id = case_id(ctx, f, &mus[m], &theta, nullptr);
      try {
        WitnessCertificate cert = admissibility_witness(rs, mus[m], fc.F, theta);
        if (cert.verified())
          out.push_back(case_pass({}));
        else
          out.push_back(case_fail(
              id, std::string("length_equality=") + (cert.length_equality ? "1" : "0") +
                      " admissible=" + (cert.admissible ? "1" : "0")));
      } catch (const NoStableChamber&) {
        out.push_back(case_skip(id, "condition (b) unsatisfiable on the orbit"));
      }
    }
    return out;
  };
  return run_grouped("witness", R.label, groups.size(), opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: Newton/Kottwitz invariants

inline Report kottwitz_suite(const SweepOptions& opt) {
  auto rs = build_root_system(opt.factors);
  const RootSystem& R = *rs;
  Alcove C = fundamental_alcove(rs);

  auto auts = automorphism_group(R);
  std::vector<Automorphism> w0;
  std::vector<Automorphism> diagram;
  for (const auto& a : auts) {
    if (in_weyl_group(R, a)) w0.push_back(a);
    if (is_diagram_automorphism(R, a)) diagram.push_back(a);
  }

  auto box = [&](Int bound) {
    std::vector<RatVec> vs;
    IntVec v(R.rank, -bound);
    for (;;) {
      vs.push_back(rat_vec(v));
      int i = 0;
      while (i < R.rank && ++v[i] > bound) v[i++] = -bound;
      if (i == R.rank) break;
    }
    return vs;
  };

  std::vector<AffineElement> etas;
  for (const auto& v : box(opt.theta_bound))
    for (const auto& a : auts) etas.push_back(AffineElement(rs, a, v));
  std::vector<AffineElement> xis;  // conjugators from the split group
  for (const auto& v : box(opt.theta_bound))
    for (const auto& a : w0) xis.push_back(AffineElement(rs, a, v));

  // group 0: kappa homomorphism; 1: Newton conjugation invariance;
  // 2: Newton of translations and powers; 3: class of mu itself;
  // 4: dominance partial order axioms.
  auto fn = [&](size_t which) {
    std::vector<CaseResult> out;
    switch (which) {
      case 0:
        for (const auto& e1 : etas)
          for (const auto& e2 : etas) {
            bool ok = kappa(e1 * e2, C) == kappa(e1, C) * kappa(e2, C);
            out.push_back(ok ? case_pass({})
                             : case_fail(R.label + ";eta1=" + to_string(e1) +
                                             ";eta2=" + to_string(e2),
                                         "kappa is not multiplicative"));
          }
        break;
      case 1:
        for (const auto& xi : xis)
          for (const auto& eta : etas) {
            bool ok = newton_point(xi * eta * xi.inverse()) == newton_point(eta);
            out.push_back(ok ? case_pass({})
                             : case_fail(R.label + ";xi=" + to_string(xi) +
                                             ";eta=" + to_string(eta),
                                         "Newton point moved under conjugation"));
          }
        break;
      case 2:
        for (const auto& lam : box(opt.lambda_bound)) {
          bool ok = newton_point(translation_element(rs, lam)) ==
                    dominant_representative(R, lam);
          out.push_back(ok ? case_pass({})
                           : case_fail(R.label + ";lambda=" + to_string(lam),
                                       "Newton of a translation"));
        }
        for (const auto& eta : etas)
          for (int n = 1; n <= 3; ++n) {
            RatVec lhs = newton_point(power(eta, n));
            RatVec rhs = newton_point(eta);
            for (auto& c : rhs) c *= n;
            out.push_back(lhs == rhs
                              ? case_pass({})
                              : case_fail(R.label + ";eta=" + to_string(eta) +
                                              ";n=" + std::to_string(n),
                                          "Newton point is not homogeneous in powers"));
          }
        break;
      case 3:
        for (const auto& mu : box(opt.lambda_bound)) {
          if (!is_dominant(R, mu)) continue;
          for (const auto& th : diagram) {
            AffineElement b = translation_element(rs, mu) * linear_element(rs, th);
            bool ok = in_bg_mu(b, mu, th, C);
            out.push_back(ok ? case_pass({})
                             : case_fail(R.label + ";mu=" + to_string(mu),
                                         "class of mu itself rejected"));
          }
        }
        break;
      case 4: {
        std::set<RatVec> doms;
        for (const auto& eta : etas) doms.insert(newton_point(eta));
        for (const auto& mu : box(opt.lambda_bound))
          for (const auto& th : diagram) doms.insert(galois_average(R, mu, th));
        std::vector<RatVec> d(doms.begin(), doms.end());
        bool refl = true, antisym = true, trans = true;
        for (const auto& x : d)
          if (!dominance_leq(R, x, x)) refl = false;
        for (const auto& x : d)
          for (const auto& y : d)
            if (dominance_leq(R, x, y) && dominance_leq(R, y, x) && x != y) antisym = false;
        for (const auto& x : d)
          for (const auto& y : d)
            for (const auto& z : d)
              if (dominance_leq(R, x, y) && dominance_leq(R, y, z) && !dominance_leq(R, x, z))
                trans = false;
        out.push_back(refl && antisym && trans
                          ? case_pass({})
                          : case_fail(R.label + ";dominance",
                                      std::string("reflexive=") + (refl ? "1" : "0") +
                                          " antisymmetric=" + (antisym ? "1" : "0") +
                                          " transitive=" + (trans ? "1" : "0")));
        break;
      }
    }
    return out;
  };
  return run_grouped("kottwitz", R.label, 5, opt.jobs, fn);
}

// ---------------------------------------------------------------------------
// Suite: desk cardinalities of the two smallest admissible sets

inline Report cardinality_suite(int jobs = 1) {
  struct Fixture {
    IntVec mu;
    size_t expect;
  };
  std::vector<Fixture> fixtures = {{{2}, 5}, {{1}, 3}};
  auto fn = [&](size_t i) {
    auto rs = build_root_system('A', 1);
    Alcove C = fundamental_alcove(rs);
    Coweight mu = rat_vec(fixtures[i].mu);
    std::string id = "A1;mu=" + to_string(mu);
    std::vector<CaseResult> out;

    auto brute = brute_admissible(rs, mu, C);
    auto prod = admissible_set(rs, mu, C);
    bool sizes = brute.size() == fixtures[i].expect && prod.elements.size() == fixtures[i].expect;
    bool match = brute == prod.elements;
    if (sizes && match)
      out.push_back(case_pass({}));
    else
      out.push_back(case_fail(id, "brute=" + std::to_string(brute.size()) +
                                      " production=" + std::to_string(prod.elements.size()) +
                                      " expected=" + std::to_string(fixtures[i].expect) +
                                      (match ? "" : " (sets differ)")));
    return out;
  };
  return run_grouped("cardinality", "A1", fixtures.size(), jobs, fn);
}

}  // namespace alcove::verify
