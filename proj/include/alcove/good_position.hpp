// Good position of a triple (facet, coweight, alcove) with respect to a
// normalizing element theta, and everything it buys: the constructive choice
// of a good chamber, length additivity, and the admissibility witness.
//
// (F, lambda, C) is in good position for theta when every root of R_F that
// is positive for C but sent negative by theta^{-1} pairs strictly
// positively with lambda. Good position forces
//     l(t_lambda) = l(t_lambda * theta) + l(theta)
// and puts t_lambda * w_C below t_lambda in Bruhat order, where w_C is the
// facet-group part of theta at C.

#pragma once

#include "alcove/kottwitz.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace alcove {

struct NoStableChamber : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_stable_facet(const RootSystem& R, const Facet& F, const AffineElement& theta) {
  if (!same_facet(R, theta.act(F.x), F.x))
    throw std::invalid_argument("theta does not stabilize the facet");
}

// theta0^i(lambda) for i over the cycle of theta's linear part.
inline std::vector<RatVec> twist_cycle(const AffineElement& theta, const Coweight& lambda) {
  std::vector<RatVec> cyc{lambda};
  int n = automorphism_order(theta.linear());
  for (int i = 1; i < n; ++i) cyc.push_back(theta.linear().apply(cyc.back()));
  return cyc;
}

}  // namespace detail

// The roots of R_F orthogonal to every twist of lambda by the linear part
// of theta; a theta-stable closed symmetric subsystem.
inline std::vector<int> restricted_system(const RootSystem& R, const Facet& F,
                                          const Coweight& lambda, const AffineElement& theta) {
  detail::require_stable_facet(R, F, theta);
  auto cyc = detail::twist_cycle(theta, lambda);
  std::vector<int> out;
  for (int idx : facet_subsystem(R, F)) {
    bool orth = true;
    for (const auto& v : cyc)
      if (R.pairing(idx, v) != 0) {
        orth = false;
        break;
      }
    if (orth) out.push_back(idx);
  }
  return out;
}

// A chamber of the subsystem stable under the linear part of theta. When
// several exist the one with the lexicographically least sign vector (over
// the canonical order of the positive members, positive side first) is
// returned, so the dominant-side chamber wins when it is stable.
inline PositiveSubsystem stable_chamber(const RootSystem& R, const std::vector<int>& members,
                                        const AffineElement& theta) {
  std::vector<int> reps;
  for (int i : members)
    if (R.is_positive_root(i)) reps.push_back(i);
  std::sort(reps.begin(), reps.end());

  std::optional<PositiveSubsystem> best;
  std::vector<int> best_key;
  for (const auto& ch : chambers(R, members)) {
    std::vector<int> img;
    for (int i : ch.positives) img.push_back(theta.linear().apply_root(i));
    std::sort(img.begin(), img.end());
    if (img != ch.positives) continue;
    std::vector<int> key;
    for (int r : reps) key.push_back(ch.contains_positive(r) ? 0 : 1);
    if (!best || key < best_key) {
      best = ch;
      best_key = key;
    }
  }
  if (!best)
    throw NoStableChamber("no chamber of the subsystem is stable under theta");
  return *best;
}

// The constructive chamber of R_F: roots orthogonal to every twist of
// lambda inherit their sign from the given stable chamber; any other pair
// is decided by the sign of the first nonvanishing pairing with a twist,
// scanned from the untwisted lambda upward. The result is a chamber, passes
// the good-position test, and contains the stable chamber's positives.
inline PositiveSubsystem good_position_chamber(const RootSystem& R, const Facet& F,
                                               const Coweight& lambda, const AffineElement& theta,
                                               const PositiveSubsystem& stable) {
  detail::require_stable_facet(R, F, theta);
  if (stable.members != restricted_system(R, F, lambda, theta))
    throw std::invalid_argument("chamber does not belong to the restricted subsystem");
  auto cyc = detail::twist_cycle(theta, lambda);

  PositiveSubsystem out;
  out.members = facet_subsystem(R, F);
  for (int idx : out.members) {
    if (!R.is_positive_root(idx)) continue;  // one representative per pair
    int chosen = -1;
    for (const auto& v : cyc) {
      Rat p = R.pairing(idx, v);
      if (p != 0) {
        chosen = p > 0 ? idx : R.negative_of(idx);
        break;
      }
    }
    if (chosen < 0) chosen = stable.contains_positive(idx) ? idx : R.negative_of(idx);
    out.positives.push_back(chosen);
  }
  std::sort(out.positives.begin(), out.positives.end());
  return out;
}

// The good-position test for an alcove adjacent to F.
inline bool is_good_position(const RootSystem& R, const Facet& F, const Coweight& lambda,
                             const Alcove& C, const AffineElement& theta) {
  detail::require_stable_facet(R, F, theta);
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  Automorphism theta_inv = inverse(theta.linear());
  for (int idx : facet_subsystem(R, F)) {
    if (!detail::facet_positive(R, F, C, idx)) continue;
    if (detail::facet_positive(R, F, C, theta_inv.apply_root(idx))) continue;
    if (!(R.pairing(idx, lambda) > 0)) return false;
  }
  return true;
}

// The unique element of the facet reflection group carrying C to theta(C).
// The overload taking a precomputed group avoids regenerating it in sweeps.
inline AffineElement facet_part(const AffineElement& theta, const Facet& F, const Alcove& C,
                                const std::vector<AffineElement>& facet_group) {
  const RootSystem& R = C.system();
  detail::require_stable_facet(R, F, theta);
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  Point target = theta.act(C.interior());
  for (const auto& w : facet_group)
    if (alcove_floors(R, w.act(C.interior())) == alcove_floors(R, target)) return w;
  throw std::logic_error("theta(C) is not in the facet-group orbit of C");
}

inline AffineElement facet_part(const AffineElement& theta, const Facet& F, const Alcove& C) {
  return facet_part(theta, F, C, facet_reflection_group(C.system_ptr(), F));
}

// The relative-position invariant of the construction: translation by
// lambda composed with a facet-group element.
inline AffineElement kr_invariant(RootSystemPtr rs, const Coweight& lambda,
                                  const AffineElement& w) {
  return translation_element(std::move(rs), lambda) * w;
}

// ---------------------------------------------------------------------------
// Reports

struct GoodPositionReport {
  PositiveSubsystem chamber;  // the chamber of R_F induced by C
  IntVec alcove_floors;
  AffineElement w_c;
  Int len_t_lambda = 0;
  Int len_t_lambda_theta = 0;
  Int len_theta = 0;
  bool good_position_holds = false;
  bool length_additivity_holds = false;
  bool bruhat_comparison_holds = false;
  bool weak_bruhat_holds = false;
};

// Evaluates the length identity and both order comparisons on one triple;
// records outcomes rather than throwing, so non-good chambers can be
// inspected. The oracle and closed-form lengths are cross-checked here.
inline GoodPositionReport good_position_report(const RootSystem& R, const Facet& F,
                                               const Coweight& lambda, const AffineElement& theta,
                                               const Alcove& C) {
  detail::require_stable_facet(R, F, theta);
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");

  auto rs = theta.system_ptr();
  AffineElement t_lambda = translation_element(rs, lambda);
  AffineElement t_lambda_theta = t_lambda * theta;

  GoodPositionReport rep{induced_chamber(R, F, C),
                         C.floors(),
                         facet_part(theta, F, C),
                         length(t_lambda, C),
                         length(t_lambda_theta, C),
                         length(theta, C)};
  if (length_formula(R, F, C, lambda, theta) != rep.len_t_lambda_theta)
    throw std::logic_error("length formula disagrees with the wall-count oracle");

  rep.good_position_holds = is_good_position(R, F, lambda, C, theta);
  rep.length_additivity_holds = rep.len_t_lambda == rep.len_t_lambda_theta + rep.len_theta;
  AffineElement w = kr_invariant(rs, lambda, rep.w_c);
  rep.bruhat_comparison_holds = bruhat_leq(w, t_lambda, C);
  rep.weak_bruhat_holds = weak_bruhat_leq(w, t_lambda, C);
  return rep;
}

struct WitnessCertificate {
  Coweight lambda;
  AffineElement witness;       // t_lambda * w_C
  PositiveSubsystem chamber;   // the constructed good chamber of R_F
  IntVec alcove_floors;
  Int len_t_lambda = 0;
  Int len_witness = 0;
  Int len_complement = 0;      // l(witness^{-1} * t_lambda)
  bool length_equality = false;
  bool admissible = false;

  bool verified() const { return length_equality && admissible; }
};

// Runs the whole pipeline for (mu, F, theta): picks an orbit element
// admitting a stable chamber (dominant first, then lexicographic), builds
// the good chamber and its alcove, and certifies the weak-order equality
// l(t_lambda) = l(w) + l(w^{-1} t_lambda) together with admissibility of w.
inline WitnessCertificate admissibility_witness(RootSystemPtr rs, const Coweight& mu,
                                                const Facet& F, const AffineElement& theta) {
  const RootSystem& R = *rs;
  detail::require_stable_facet(R, F, theta);
  if (!is_coweight(R, mu)) throw std::invalid_argument("mu is not a coweight");

  std::vector<RatVec> orbit = weyl_orbit(R, mu);
  std::stable_sort(orbit.begin(), orbit.end(), [&](const RatVec& a, const RatVec& b) {
    return is_dominant(R, a) > is_dominant(R, b);
  });

  for (const auto& lambda : orbit) {
    PositiveSubsystem stable;
    try {
      stable = stable_chamber(R, restricted_system(R, F, lambda, theta), theta);
    } catch (const NoStableChamber&) {
      continue;
    }
    PositiveSubsystem good = good_position_chamber(R, F, lambda, theta, stable);
    Alcove C = alcove_from_facet_chamber(rs, F, good);
    AffineElement w_c = facet_part(theta, F, C);
    AffineElement w = kr_invariant(rs, lambda, w_c);
    AffineElement t_lambda = translation_element(rs, lambda);

    WitnessCertificate cert{lambda, w, good, C.floors()};
    cert.len_t_lambda = length(t_lambda, C);
    cert.len_witness = length(w, C);
    cert.len_complement = length(w.inverse() * t_lambda, C);
    cert.length_equality = cert.len_t_lambda == cert.len_witness + cert.len_complement;
    for (const auto& lam2 : orbit)
      if (bruhat_leq(w, translation_element(rs, lam2), C)) {
        cert.admissible = true;
        break;
      }
    return cert;
  }
  throw NoStableChamber("no orbit element admits a theta-stable chamber at this facet");
}

}  // namespace alcove
