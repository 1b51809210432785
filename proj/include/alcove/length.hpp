// Length and the gallery walk.
//
// The length of eta relative to a base alcove C is the number of walls
// separating C from eta(C). For a wall direction alpha this is the number
// of integers strictly between the pairings of alpha with an interior point
// and with its image; both are non-integral, so the count is a difference
// of floors. This function is the oracle every closed-form length result is
// checked against.

#pragma once

#include "alcove/geometry.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace alcove {

inline Int length(const AffineElement& eta, const Alcove& C) {
  const RootSystem& R = C.system();
  Point q = eta.act(C.interior());
  Int l = 0;
  for (int i = 0; i < R.n_positive; ++i) {
    Int d = floor_rat(R.pairing(i, q)) - C.floors()[i];
    l += d < 0 ? -d : d;
  }
  return l;
}

// Gallery walk from C to eta(C), crossing one bounding wall of C at a time.
// The returned reflections g_1, ..., g_l multiply (in order) to the unique
// affine Weyl group element w with w(C) = eta(C); the word is reduced.
inline std::vector<AffineElement> reduced_word(const AffineElement& eta, const Alcove& C) {
  const RootSystem& R = C.system();
  auto walls = bounding_walls(C);
  std::vector<AffineElement> word;
  Point t = eta.act(C.interior());
  int guard = 0;
  while (alcove_floors(R, t) != C.floors()) {
    bool crossed = false;
    for (const auto& w : walls) {
      Rat sp = R.pairing(w.root, C.interior()) - Rat(w.level);
      Rat st = R.pairing(w.root, t) - Rat(w.level);
      if ((sp < 0) != (st < 0)) {
        word.push_back(w.reflection);
        t = w.reflection.act(t);
        crossed = true;
        break;
      }
    }
    if (!crossed) throw std::logic_error("no separating bounding wall found");
    if (++guard > 1000000) throw std::logic_error("gallery walk did not terminate");
  }
  return word;
}

// eta = w * gamma with w in the affine Weyl group taking C to eta(C) and
// gamma stabilizing C.
inline std::pair<AffineElement, AffineElement> omega_decompose(const AffineElement& eta,
                                                               const Alcove& C) {
  AffineElement w = identity_element(eta.system_ptr());
  for (const auto& g : reduced_word(eta, C)) w = w * g;
  AffineElement gamma = w.inverse() * eta;
  if (!same_alcove(C, gamma.act(C.interior())))
    throw std::logic_error("omega part does not stabilize the base alcove");
  return {std::move(w), std::move(gamma)};
}

// The stabilizer of C in the extended group. For each linear part there is
// at most one translation bringing the alcove back to C, and it is pinned
// by the floors of the simple-root pairings.
inline std::vector<AffineElement> omega_group(const Alcove& C) {
  const RootSystem& R = C.system();
  const Point& p = C.interior();
  std::vector<AffineElement> out;
  for (const auto& a : automorphism_group(R)) {
    RatVec ap = a.apply(p);
    RatVec v(R.rank);
    for (int j = 0; j < R.rank; ++j)
      v[j] = Rat(floor_rat(Rat(floor_rat(p[j])) - ap[j]) + 1);
    AffineElement cand(C.system_ptr(), a, v);
    if (same_alcove(C, cand.act(p))) out.push_back(std::move(cand));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The closed-form length of t_lambda * theta at a facet

namespace detail {

// Positivity of a root of R_F relative to an adjacent alcove: C lies on the
// positive side of the root's wall through F.
inline bool facet_positive(const RootSystem& R, const Facet& F, const Alcove& C, int idx) {
  Rat k = R.pairing(idx, F.x);
  return floor_rat(R.pairing(idx, C.interior())) == floor_rat(k);
}

}  // namespace detail

// Per-root wall count crossed by t_lambda * theta for a root of R_F that is
// positive for C: |<alpha,lambda>| when theta^{-1}(alpha) stays positive,
// |<alpha,lambda> - 1| when it turns negative. Covers the four sign cases
// (and the zero-pairing boundary) of the separating-wall count.
inline Int wall_count_contribution(const RootSystem& R, const Facet& F, const Alcove& C,
                                   const AffineElement& theta, int root_idx,
                                   const Coweight& lambda) {
  std::vector<int> rf = facet_subsystem(R, F);
  if (!std::binary_search(rf.begin(), rf.end(), root_idx))
    throw std::invalid_argument("root has no wall through the facet");
  if (!detail::facet_positive(R, F, C, root_idx))
    throw std::invalid_argument("root is not positive for the alcove");
  Rat pair = R.pairing(root_idx, lambda);
  int pre = inverse(theta.linear()).apply_root(root_idx);
  bool turns_negative = !detail::facet_positive(R, F, C, pre);
  Rat c = turns_negative ? pair - 1 : pair;
  if (c < 0) c = -c;
  if (!is_integer(c)) throw std::invalid_argument("lambda is not a coweight");
  return c.numerator();
}

// Length of t_lambda * theta relative to C, computed without any walk: sum
// of |<alpha,lambda>| over root pairs avoiding the turned set, plus
// |<alpha,lambda> - 1| over the roots of R_F made negative by theta^{-1}.
// Must agree exactly with length(t_lambda * theta, C).
inline Int length_formula(const RootSystem& R, const Facet& F, const Alcove& C,
                          const Coweight& lambda, const AffineElement& theta) {
  if (!same_facet(R, theta.act(F.x), F.x))
    throw std::invalid_argument("theta does not stabilize the facet");
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  if (!is_coweight(R, lambda)) throw std::invalid_argument("lambda is not a coweight");

  std::vector<int> rf = facet_subsystem(R, F);
  Automorphism theta_inv = inverse(theta.linear());
  Int total = 0;
  for (int i = 0; i < R.n_positive; ++i) {
    Rat pair = R.pairing(i, lambda);
    if (std::binary_search(rf.begin(), rf.end(), i)) {
      int member = detail::facet_positive(R, F, C, i) ? i : R.negative_of(i);
      Rat mp = member == i ? pair : -pair;
      if (!detail::facet_positive(R, F, C, theta_inv.apply_root(member))) mp -= 1;
      if (mp < 0) mp = -mp;
      total += mp.numerator();
    } else {
      if (pair < 0) pair = -pair;
      total += pair.numerator();
    }
  }
  return total;
}

}  // namespace alcove
