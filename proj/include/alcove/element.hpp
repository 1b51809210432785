// Elements of the extended affine Weyl group, modeled as the semidirect
// product of the coweight lattice P(R^v) with Aut(R): pairs (A, v) acting on
// the apartment by p -> A(p) + v. The translation must pair integrally with
// every root, which in our coordinates means integer coordinates; this is
// exactly the condition for (A, v) to normalize the affine Weyl group.

#pragma once

#include "alcove/root_system.hpp"

#include <stdexcept>
#include <utility>

namespace alcove {

class AffineElement {
 public:
  AffineElement(RootSystemPtr rs, Automorphism linear, RatVec translation)
      : rs_(std::move(rs)), linear_(std::move(linear)), translation_(std::move(translation)) {
    if ((int)translation_.size() != rs_->rank)
      throw std::invalid_argument("translation has wrong dimension");
    for (const auto& c : translation_)
      if (!is_integer(c))
        throw std::invalid_argument(
            "translation is not in the coweight lattice (non-integral pairing with a root)");
  }

  const RootSystem& system() const { return *rs_; }
  RootSystemPtr system_ptr() const { return rs_; }
  const Automorphism& linear() const { return linear_; }
  const RatVec& translation() const { return translation_; }

  Point act(const Point& p) const {
    RatVec r = linear_.apply(p);
    for (int i = 0; i < rs_->rank; ++i) r[i] += translation_[i];
    return r;
  }
  Point operator()(const Point& p) const { return act(p); }

  bool is_identity() const { return linear_.is_identity() && is_zero(translation_); }
  bool is_translation() const { return linear_.is_identity(); }

  friend AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    if (!same_system(*a.rs_, *b.rs_))
      throw std::invalid_argument("cannot compose elements over different root systems");
    RatVec t = a.linear_.apply(b.translation_);
    for (int i = 0; i < a.rs_->rank; ++i) t[i] += a.translation_[i];
    return AffineElement(a.rs_, compose(a.linear_, b.linear_), std::move(t));
  }

  AffineElement inverse() const {
    Automorphism li = alcove::inverse(linear_);
    RatVec t = li.apply(translation_);
    for (auto& c : t) c = -c;
    return AffineElement(rs_, std::move(li), std::move(t));
  }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.linear_.perm == b.linear_.perm && a.translation_ == b.translation_;
  }
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    if (a.linear_.perm != b.linear_.perm) return a.linear_.perm < b.linear_.perm;
    return a.translation_ < b.translation_;
  }

 private:
  RootSystemPtr rs_;
  Automorphism linear_;
  RatVec translation_;
};

inline AffineElement identity_element(RootSystemPtr rs) {
  int rank = rs->rank;
  auto id = identity_automorphism(*rs);
  return AffineElement(std::move(rs), std::move(id), RatVec(rank, Rat(0)));
}

inline AffineElement translation_element(RootSystemPtr rs, const Coweight& lambda) {
  return AffineElement(rs, identity_automorphism(*rs), lambda);
}

inline AffineElement linear_element(RootSystemPtr rs, Automorphism a) {
  int rank = rs->rank;
  return AffineElement(std::move(rs), std::move(a), RatVec(rank, Rat(0)));
}

// The reflection in the wall where the given root pairs to the integer k.
inline AffineElement wall_reflection(RootSystemPtr rs, int root_idx, Int k) {
  const RootSystem& R = *rs;
  Automorphism s;
  s.perm.resize(R.roots.size());
  const IntVec& crt = R.coroot(root_idx);
  for (size_t m = 0; m < R.roots.size(); ++m) {
    Int p = 0;
    for (int j = 0; j < R.rank; ++j) p += R.roots[m].coords[j] * crt[j];
    IntVec img = R.roots[m].coords;
    for (int j = 0; j < R.rank; ++j) img[j] -= p * R.roots[root_idx].coords[j];
    s.perm[m] = R.root_index(img);
  }
  s.nmat.assign(R.rank, IntVec(R.rank, 0));
  const IntVec& a = R.roots[root_idx].coords;
  for (int i = 0; i < R.rank; ++i) {
    s.nmat[i][i] = 1;
    for (int j = 0; j < R.rank; ++j) s.nmat[i][j] -= crt[i] * a[j];
  }
  RatVec t(R.rank);
  for (int i = 0; i < R.rank; ++i) t[i] = Rat(k * crt[i]);
  return AffineElement(std::move(rs), std::move(s), std::move(t));
}

inline AffineElement power(const AffineElement& a, int n) {
  if (n < 0) return power(a.inverse(), -n);
  AffineElement r = identity_element(a.system_ptr());
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

inline std::string to_string(const AffineElement& e) {
  std::string s = "lin[";
  const auto& R = e.system();
  for (size_t k = 0; k < R.simple_indices.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e.linear().perm[R.simple_indices[k]]);
  }
  s += "] t" + to_string(e.translation());
  return s;
}

}  // namespace alcove
