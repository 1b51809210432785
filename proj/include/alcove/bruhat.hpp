// Bruhat order on the extended group, fiberwise over the stabilizer of the
// base alcove: eta <= eta' requires equal stabilizer components, then Bruhat
// order between the affine Weyl parts. The comparison runs by the lifting
// recursion on left descents; since everything is driven by which walls of C
// separate C from an image alcove, it reduces to pushing two points around.

#pragma once

#include "alcove/length.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace alcove {

// True when eta and eta' have the same image in the stabilizer of C, i.e.
// their quotient lies in the affine Weyl group.
inline bool same_omega_part(const AffineElement& eta, const AffineElement& eta2,
                            const Alcove& C) {
  auto [w, gamma] = omega_decompose(eta2.inverse() * eta, C);
  return gamma.is_identity();
}

inline bool bruhat_leq(const AffineElement& eta, const AffineElement& eta2, const Alcove& C) {
  if (!same_system(eta.system(), eta2.system()))
    throw std::invalid_argument("elements over different root systems");
  if (!same_omega_part(eta, eta2, C)) return false;

  const RootSystem& R = C.system();
  auto walls = bounding_walls(C);
  Point x = eta.act(C.interior());
  Point y = eta2.act(C.interior());
  int guard = 0;
  for (;;) {
    if (alcove_floors(R, y) == C.floors()) return alcove_floors(R, x) == C.floors();
    const Wall* sep = nullptr;
    for (const auto& w : walls) {
      Rat sp = R.pairing(w.root, C.interior()) - Rat(w.level);
      Rat sy = R.pairing(w.root, y) - Rat(w.level);
      if ((sp < 0) != (sy < 0)) {
        sep = &w;
        break;
      }
    }
    if (!sep) throw std::logic_error("no separating bounding wall found");
    Rat sp = R.pairing(sep->root, C.interior()) - Rat(sep->level);
    Rat sx = R.pairing(sep->root, x) - Rat(sep->level);
    if ((sp < 0) != (sx < 0)) x = sep->reflection.act(x);
    y = sep->reflection.act(y);
    if (++guard > 1000000) throw std::logic_error("bruhat recursion did not terminate");
  }
}

// Weak (left) order: eta <=' eta2 iff the omega parts agree and lengths add.
inline bool weak_bruhat_leq(const AffineElement& eta, const AffineElement& eta2,
                            const Alcove& C) {
  if (!same_system(eta.system(), eta2.system()))
    throw std::invalid_argument("elements over different root systems");
  if (!same_omega_part(eta, eta2, C)) return false;
  return length(eta2, C) == length(eta, C) + length(eta.inverse() * eta2, C);
}

// ---------------------------------------------------------------------------
// The finite reflection group of a facet

// The group generated by the reflections in the walls through F.
inline std::vector<AffineElement> facet_reflection_group(RootSystemPtr rs, const Facet& F) {
  const RootSystem& R = *rs;
  std::vector<AffineElement> gens;
  for (int i = 0; i < R.n_positive; ++i) {
    Rat k = R.pairing(i, F.x);
    if (is_integer(k)) gens.push_back(wall_reflection(rs, i, k.numerator()));
  }
  std::set<AffineElement> seen;
  std::vector<AffineElement> out{identity_element(rs)};
  seen.insert(out[0]);
  for (size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      AffineElement n = out[k] * g;
      if (seen.insert(n).second) out.push_back(std::move(n));
    }
  return out;
}

// The unique minimal-length element of W_F * eta * W_F; the canonical
// representative of eta's double coset at the facet.
inline AffineElement double_coset_min(const AffineElement& eta, const Facet& F,
                                      const Alcove& C) {
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  auto wf = facet_reflection_group(eta.system_ptr(), F);
  const AffineElement* best = nullptr;
  Int best_len = 0;
  bool tie = false;
  std::vector<AffineElement> coset;
  coset.reserve(wf.size() * wf.size());
  for (const auto& u : wf)
    for (const auto& v : wf) {
      coset.push_back(u * eta * v);
      Int l = length(coset.back(), C);
      if (!best || l < best_len) {
        best = &coset.back();
        best_len = l;
        tie = false;
      } else if (l == best_len && !(coset.back() == *best)) {
        tie = true;
      }
    }
  if (tie) throw std::logic_error("double coset has no unique minimal element");
  return *best;
}

// ---------------------------------------------------------------------------
// Covers

// All elements obtained by deleting one letter from a reduced word of the
// affine Weyl part of eta (keeping the stabilizer part). Every element
// covered by eta in Bruhat order appears among the deletions of length
// exactly l(eta) - 1, and every deletion is <= eta.
inline std::vector<AffineElement> one_letter_deletions(const AffineElement& eta,
                                                       const Alcove& C) {
  auto [w, gamma] = omega_decompose(eta, C);
  auto word = reduced_word(eta, C);
  size_t l = word.size();
  std::vector<AffineElement> prefix{identity_element(eta.system_ptr())};
  for (size_t i = 0; i < l; ++i) prefix.push_back(prefix.back() * word[i]);
  std::vector<AffineElement> suffix(l + 1, gamma);
  for (size_t i = l; i-- > 0;) suffix[i] = word[i] * suffix[i + 1];

  std::set<AffineElement> dedup;
  for (size_t i = 0; i < l; ++i) dedup.insert(prefix[i] * suffix[i + 1]);
  return {dedup.begin(), dedup.end()};
}

}  // namespace alcove
