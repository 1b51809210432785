// Alcove bookkeeping. An alcove is identified by any interior point; two
// points determine the same alcove iff their pairings with all roots have
// identical floors. All alcove predicates below reduce to such floor
// comparisons, so representatives never matter.

#pragma once

#include "alcove/element.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace alcove {

inline bool is_wall_free(const RootSystem& R, const Point& p) {
  for (int i = 0; i < R.n_positive; ++i)
    if (is_integer(R.pairing(i, p))) return false;
  return true;
}

// Floors of the pairings with the positive roots; the combinatorial address
// of the alcove containing p.
inline IntVec alcove_floors(const RootSystem& R, const Point& p) {
  IntVec f(R.n_positive);
  for (int i = 0; i < R.n_positive; ++i) f[i] = floor_rat(R.pairing(i, p));
  return f;
}

class Alcove {
 public:
  Alcove(RootSystemPtr rs, Point interior)
      : rs_(std::move(rs)), interior_(std::move(interior)) {
    if (!is_wall_free(*rs_, interior_))
      throw std::invalid_argument("alcove interior point lies on a wall");
    floors_ = alcove_floors(*rs_, interior_);
  }

  const RootSystem& system() const { return *rs_; }
  RootSystemPtr system_ptr() const { return rs_; }
  const Point& interior() const { return interior_; }
  const IntVec& floors() const { return floors_; }

 private:
  RootSystemPtr rs_;
  Point interior_;
  IntVec floors_;
};

inline bool same_alcove(const Alcove& a, const Alcove& b) { return a.floors() == b.floors(); }

inline bool same_alcove(const Alcove& a, const Point& p) {
  return a.floors() == alcove_floors(a.system(), p);
}

// The closure of the alcove contains x iff every pairing of x is within the
// closed unit cell of the alcove's floors.
inline bool closure_contains(const Alcove& C, const Point& x) {
  const RootSystem& R = C.system();
  for (int i = 0; i < R.n_positive; ++i) {
    Rat px = R.pairing(i, x);
    if (px < Rat(C.floors()[i]) || px > Rat(C.floors()[i] + 1)) return false;
  }
  return true;
}

inline Alcove apply(const AffineElement& e, const Alcove& C) {
  return Alcove(C.system_ptr(), e.act(C.interior()));
}

// Bourbaki fundamental alcove: bounded by the simple walls at 0 and the
// highest-root wall at 1 in each irreducible factor. The interior point is
// the barycenter of its vertices.
inline Alcove fundamental_alcove(RootSystemPtr rs) {
  const RootSystem& R = *rs;
  Point p(R.rank, Rat(0));
  for (const auto& f : R.factors) {
    const IntVec& marks = R.roots[f.highest_root].coords;
    for (int j = 0; j < f.rank; ++j)
      p[f.offset + j] = Rat(1, (f.rank + 1) * marks[f.offset + j]);
  }
  return Alcove(std::move(rs), std::move(p));
}

struct Wall {
  int root;  // positive root index
  Int level;
  AffineElement reflection;
};

// The bounding walls of C, i.e. those whose reflection takes C to an
// adjacent alcove. These reflections are the Coxeter generators of the
// affine Weyl group relative to C.
inline std::vector<Wall> bounding_walls(const Alcove& C) {
  const RootSystem& R = C.system();
  std::vector<Wall> out;
  for (int i = 0; i < R.n_positive; ++i) {
    for (Int k : {C.floors()[i], C.floors()[i] + 1}) {
      AffineElement refl = wall_reflection(C.system_ptr(), i, k);
      IntVec f = alcove_floors(R, refl.act(C.interior()));
      bool adjacent = true;
      for (int j = 0; j < R.n_positive && adjacent; ++j) {
        if (j == i) {
          if (f[j] == C.floors()[j]) adjacent = false;
        } else if (f[j] != C.floors()[j]) {
          adjacent = false;
        }
      }
      if (adjacent) out.push_back(Wall{i, k, std::move(refl)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alcoves adjacent to a facet

inline bool adjacent_to_facet(const Alcove& C, const Facet& F) {
  return closure_contains(C, F.x);
}

// The chamber of R_F cut out by an adjacent alcove: a root of R_F is
// positive for C iff C lies on the positive side of its wall through F.
inline PositiveSubsystem induced_chamber(const RootSystem& R, const Facet& F, const Alcove& C) {
  if (!adjacent_to_facet(C, F))
    throw std::invalid_argument("alcove closure does not contain the facet");
  PositiveSubsystem ps;
  ps.members = facet_subsystem(R, F);
  for (int idx : ps.members) {
    Rat k = R.pairing(idx, F.x);
    if (floor_rat(R.pairing(idx, C.interior())) == floor_rat(k)) ps.positives.push_back(idx);
  }
  std::sort(ps.positives.begin(), ps.positives.end());
  return ps;
}

// The alcove adjacent to F inducing the chamber C_F on R_F. The point
// x_F + eps * rho is wall-free for small enough eps, where rho is the
// half-sum of the coroots of the C_F-positive roots; eps is computed so
// that no wall other than those through F is approached, and no wall
// through F is crossed.
inline Alcove alcove_from_facet_chamber(RootSystemPtr rs, const Facet& F,
                                        const PositiveSubsystem& C_F) {
  const RootSystem& R = *rs;
  std::vector<int> rf = facet_subsystem(R, F);
  if (C_F.members != rf)
    throw std::invalid_argument("chamber does not belong to the facet subsystem");

  RatVec rho(R.rank, Rat(0));
  for (int idx : C_F.positives) {
    const IntVec& crt = R.coroot(idx);
    for (int j = 0; j < R.rank; ++j) rho[j] += Rat(crt[j], 2);
  }

  Rat eps(1);
  for (int i = 0; i < R.n_positive; ++i) {
    Rat pr = R.pairing(i, rho);
    if (std::binary_search(rf.begin(), rf.end(), i)) {
      Rat denom = Rat(1) + (pr < 0 ? -pr : pr);
      if (Rat(1) / denom < eps) eps = Rat(1) / denom;
    } else {
      Rat dist = frac_distance(R.pairing(i, F.x));
      Rat denom = Rat(1) + (pr < 0 ? -pr : pr);
      if (dist / denom < eps) eps = dist / denom;
    }
  }
  eps /= 2;

  Point p = F.x;
  for (int j = 0; j < R.rank; ++j) p[j] += eps * rho[j];
  Alcove C(std::move(rs), std::move(p));
  if (!(induced_chamber(R, F, C) == C_F))
    throw std::logic_error("constructed alcove does not induce the requested chamber");
  return C;
}

// All alcoves whose closure contains F, one per chamber of R_F.
inline std::vector<Alcove> alcoves_adjacent_to_facet(RootSystemPtr rs, const Facet& F) {
  std::vector<Alcove> out;
  for (const auto& ch : chambers(*rs, facet_subsystem(*rs, F)))
    out.push_back(alcove_from_facet_chamber(rs, F, ch));
  return out;
}

// ---------------------------------------------------------------------------
// Faces of the closed fundamental alcove

// Representative points (barycenters of vertex subsets) of every facet of
// the closed fundamental alcove; the last entry is the alcove itself. For
// products, faces are products of factor faces.
inline std::vector<Facet> fundamental_alcove_faces(const RootSystem& R) {
  std::vector<std::vector<RatVec>> factor_faces;
  for (const auto& f : R.factors) {
    std::vector<RatVec> verts;
    verts.push_back(RatVec(f.rank, Rat(0)));
    const IntVec& marks = R.roots[f.highest_root].coords;
    for (int j = 0; j < f.rank; ++j) {
      RatVec v(f.rank, Rat(0));
      v[j] = Rat(1, marks[f.offset + j]);
      verts.push_back(v);
    }
    std::vector<RatVec> faces;
    for (size_t mask = 1; mask < (size_t(1) << verts.size()); ++mask) {
      RatVec b(f.rank, Rat(0));
      Int cnt = 0;
      for (size_t k = 0; k < verts.size(); ++k)
        if (mask >> k & 1) {
          ++cnt;
          for (int j = 0; j < f.rank; ++j) b[j] += verts[k][j];
        }
      for (auto& c : b) c /= cnt;
      faces.push_back(std::move(b));
    }
    factor_faces.push_back(std::move(faces));
  }

  std::vector<Facet> out;
  std::vector<size_t> pick(factor_faces.size(), 0);
  for (;;) {
    Point x;
    for (size_t fi = 0; fi < factor_faces.size(); ++fi)
      for (const auto& c : factor_faces[fi][pick[fi]]) x.push_back(c);
    out.push_back(Facet{std::move(x)});
    size_t fi = 0;
    while (fi < pick.size() && ++pick[fi] == factor_faces[fi].size()) pick[fi++] = 0;
    if (fi == pick.size()) break;
  }
  return out;
}

}  // namespace alcove
