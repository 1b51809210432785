// Sigma-conjugacy invariants at the Weyl-group level: the Newton point of an
// extended element, its class in the stabilizer of the base alcove (the
// Kottwitz invariant), the Galois-averaged coweight, dominance order, and
// the Kottwitz-Rapoport admissible sets.

#pragma once

#include "alcove/bruhat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace alcove {

// Dominant representative of the averaged translation part of eta over the
// cycle of its linear part; conjugation-invariant within P(R^v) x W0.
inline RatVec newton_point(const AffineElement& eta) {
  const RootSystem& R = eta.system();
  int n = automorphism_order(eta.linear());
  RatVec acc = eta.translation();
  RatVec u = eta.translation();
  for (int i = 1; i < n; ++i) {
    u = eta.linear().apply(u);
    for (int j = 0; j < R.rank; ++j) acc[j] += u[j];
  }
  for (auto& c : acc) c /= n;
  return dominant_representative(R, acc);
}

// The image of eta in the quotient by the affine Weyl group, realized as the
// unique stabilizer element of C in eta's coset.
inline AffineElement kappa(const AffineElement& eta, const Alcove& C) {
  return omega_decompose(eta, C).second;
}

// The invariants of a sigma-conjugacy class: dominant Newton vector plus the
// Kottwitz class.
struct NewtonPair {
  RatVec nu;
  AffineElement kappa_class;
};

inline NewtonPair newton_pair(const AffineElement& eta, const Alcove& C) {
  return NewtonPair{newton_point(eta), kappa(eta, C)};
}

// Average of the dominant representative over the cycle of a dominant-
// chamber-preserving automorphism; the finite stand-in for the Galois
// average of a cocharacter.
inline RatVec galois_average(const RootSystem& R, const Coweight& mu, const Automorphism& theta0) {
  if (!is_coweight(R, mu)) throw std::invalid_argument("mu is not a coweight");
  if (!is_diagram_automorphism(R, theta0))
    throw std::invalid_argument("automorphism does not stabilize the dominant chamber");
  RatVec star = dominant_representative(R, mu);
  RatVec acc = star;
  RatVec u = theta0.apply(star);
  int m = 1;
  while (u != star) {
    for (int j = 0; j < R.rank; ++j) acc[j] += u[j];
    u = theta0.apply(u);
    if (++m > 1000) throw std::logic_error("orbit of dominant representative did not close");
  }
  for (auto& c : acc) c /= m;
  return acc;
}

// nu <= mu in dominance order: mu - nu is a nonnegative rational combination
// of simple coroots. Solved exactly in the coroot basis.
inline bool dominance_leq(const RootSystem& R, const RatVec& nu, const RatVec& mu) {
  if (!is_dominant(R, nu) || !is_dominant(R, mu))
    throw std::invalid_argument("dominance order needs dominant inputs");
  // Solve sum_i c_i * coroot_i = mu - nu; the matrix has columns the simple
  // coroots, i.e. it is the transpose of the Cartan matrix.
  int n = R.rank;
  std::vector<RatVec> a(n, RatVec(n + 1, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(R.cartan[j][i]);
    a[i][n] = mu[i] - nu[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  for (int i = 0; i < n; ++i)
    if (a[i][n] < 0) return false;
  return true;
}

inline bool is_minuscule(const RootSystem& R, const Coweight& mu) {
  if (!is_coweight(R, mu)) throw std::invalid_argument("mu is not a coweight");
  RatVec star = dominant_representative(R, mu);
  for (int i = 0; i < R.n_positive; ++i) {
    Rat p = R.pairing(i, star);
    if (p != 0 && p != 1) return false;
  }
  return true;
}

// Membership of eta_b (with any Frobenius twist absorbed in its linear part)
// in the classes bounded by mu: the Newton point must lie below the averaged
// dominant representative, and the Kottwitz class must match that of
// t_{mu*} twisted by theta0.
inline bool in_bg_mu(const AffineElement& eta_b, const Coweight& mu, const Automorphism& theta0,
                     const Alcove& C) {
  const RootSystem& R = eta_b.system();
  RatVec nu = newton_point(eta_b);
  RatVec mu_bar = galois_average(R, mu, theta0);
  if (!dominance_leq(R, nu, mu_bar)) return false;
  RatVec star = dominant_representative(R, mu);
  AffineElement model = translation_element(eta_b.system_ptr(), star) *
                        linear_element(eta_b.system_ptr(), theta0);
  return kappa(eta_b, C) == kappa(model, C);
}

// ---------------------------------------------------------------------------
// Admissible sets

struct AdmissibleSet {
  std::vector<RatVec> orbit;  // the generating coweight orbit
  std::vector<AffineElement> elements;

  bool contains(const AffineElement& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }
};

// All elements below some translation by an orbit member, computed by
// downward closure through one-letter deletions of reduced words.
inline AdmissibleSet admissible_set(RootSystemPtr rs, const Coweight& mu, const Alcove& C) {
  if (!is_coweight(*rs, mu)) throw std::invalid_argument("mu is not a coweight");
  AdmissibleSet out;
  out.orbit = weyl_orbit(*rs, mu);
  std::set<AffineElement> seen;
  std::vector<AffineElement> work;
  for (const auto& lam : out.orbit) {
    AffineElement t = translation_element(rs, lam);
    if (seen.insert(t).second) work.push_back(std::move(t));
  }
  for (size_t k = 0; k < work.size(); ++k)
    for (auto& d : one_letter_deletions(work[k], C))
      if (seen.insert(d).second) work.push_back(std::move(d));
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

// Canonical double-coset representatives of the admissible set at a facet.
inline std::vector<AffineElement> admissible_set_parahoric(RootSystemPtr rs, const Coweight& mu,
                                                           const Facet& F, const Alcove& C) {
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  std::set<AffineElement> reps;
  for (const auto& e : admissible_set(rs, mu, C).elements)
    reps.insert(double_coset_min(e, F, C));
  return {reps.begin(), reps.end()};
}

}  // namespace alcove
