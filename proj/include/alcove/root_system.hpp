// Reduced crystallographic root systems with exact pairing data.
//
// Coordinate conventions, used everywhere downstream:
//   * roots are integer vectors in the basis of simple roots;
//   * coweights and points of the apartment are rational vectors in the
//     basis of fundamental coweights, so coordinate j of a vector v is
//     exactly the pairing of the j-th simple root with v;
//   * the pairing of a root (coords a) with a vector (coords v) is the dot
//     product sum_j a_j v_j, an exact rational.
//
// With this setup the coroot of the i-th simple root has coordinates equal
// to row i of the Cartan matrix, and all root/coroot bookkeeping stays in
// integer arithmetic. Simple roots follow Bourbaki numbering.

#pragma once

#include "alcove/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

using IntMat = std::vector<IntVec>;  // row-major

struct Root {
  IntVec coords;  // in the basis of simple roots
  IntVec coroot;  // coroot coordinates in the basis of fundamental coweights
};

struct Factor {
  char type;
  int rank;
  int offset;        // first simple-root index of this factor
  int highest_root;  // root index, set after root generation
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  std::string label;
  int rank = 0;
  IntMat cartan;  // cartan[i][j] = pairing of simple root j with coroot i
  std::vector<Factor> factors;
  std::vector<Root> roots;  // positives first, then negatives in same order
  int n_positive = 0;
  std::vector<int> simple_indices;

  int negative_of(int i) const {
    return i < n_positive ? i + n_positive : i - n_positive;
  }
  bool is_positive_root(int i) const { return i < n_positive; }

  const IntVec& coroot(int i) const { return roots[i].coroot; }

  int root_index(const IntVec& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? -1 : it->second;
  }

  Rat pairing(int root_idx, const RatVec& v) const {
    const IntVec& a = roots[root_idx].coords;
    Rat s(0);
    for (int j = 0; j < rank; ++j)
      if (a[j] != 0) s += Rat(a[j]) * v[j];
    return s;
  }

  // Pairing with an arbitrary integer combination of simple roots.
  Rat pairing(const IntVec& a, const RatVec& v) const {
    Rat s(0);
    for (int j = 0; j < rank; ++j)
      if (a[j] != 0) s += Rat(a[j]) * v[j];
    return s;
  }

  void finish() {
    index_.clear();
    for (size_t i = 0; i < roots.size(); ++i) index_[roots[i].coords] = (int)i;
  }

 private:
  std::map<IntVec, int> index_;
};

inline bool same_system(const RootSystem& a, const RootSystem& b) {
  return a.label == b.label && a.rank == b.rank;
}

namespace detail {

inline IntMat cartan_matrix(char type, int rank) {
  auto chain = [&](IntMat& c) {
    for (int i = 0; i + 1 < rank; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  };
  IntMat c(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      chain(c);
      return c;
    case 'B':
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      chain(c);
      c[rank - 1][rank - 2] = -2;  // last simple root is short
      return c;
    case 'C':
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      chain(c);
      c[rank - 2][rank - 1] = -2;  // last simple root is long
      return c;
    case 'D':
      if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
      for (int i = 0; i + 1 < rank - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
      return c;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
      // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...
      std::vector<std::pair<int, int>> edges = {{1, 3}, {3, 4}, {2, 4}};
      for (int i = 4; i < rank; ++i) edges.push_back({i, i + 1});
      for (auto [u, v] : edges) c[u - 1][v - 1] = c[v - 1][u - 1] = -1;
      return c;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("type F needs rank 4");
      chain(c);
      c[1][2] = -1;
      c[2][1] = -2;  // roots 3,4 are short
      return c;
    case 'G':
      if (rank != 2) throw std::invalid_argument("type G needs rank 2");
      c[0][1] = -3;  // alpha_1 short, alpha_2 long
      c[1][0] = -1;
      return c;
    default:
      throw std::invalid_argument(std::string("unknown Cartan type '") + type + "'");
  }
}

}  // namespace detail

// Cartan types given as a list of irreducible factors, e.g. {{'A',2}} or
// {{'A',1},{'A',1}} for a product.
inline RootSystemPtr build_root_system(const std::vector<std::pair<char, int>>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor list");
  auto rs = std::make_shared<RootSystem>();
  for (auto [t, r] : factors) {
    Factor f;
    f.type = t;
    f.rank = r;
    f.offset = rs->rank;
    f.highest_root = -1;
    IntMat block = detail::cartan_matrix(t, r);
    rs->cartan.resize(rs->rank + r, IntVec(rs->rank + r, 0));
    for (auto& row : rs->cartan) row.resize(rs->rank + r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) rs->cartan[f.offset + i][f.offset + j] = block[i][j];
    rs->rank += r;
    rs->factors.push_back(f);
    if (!rs->label.empty()) rs->label += "x";
    rs->label += t + std::to_string(r);
  }

  // Generate all roots with their coroots by closing the simple pairs under
  // simple reflections.
  std::set<IntVec> seen;
  std::vector<Root> pool;
  for (int i = 0; i < rs->rank; ++i) {
    Root root;
    root.coords = IntVec(rs->rank, 0);
    root.coords[i] = 1;
    root.coroot = rs->cartan[i];
    pool.push_back(root);
    seen.insert(root.coords);
  }
  for (size_t k = 0; k < pool.size(); ++k) {
    for (int i = 0; i < rs->rank; ++i) {
      Root cur = pool[k];
      Int pair_i = 0;  // pairing of cur with coroot i
      for (int j = 0; j < rs->rank; ++j) pair_i += rs->cartan[i][j] * cur.coords[j];
      Root img;
      img.coords = cur.coords;
      img.coords[i] -= pair_i;
      img.coroot = cur.coroot;
      Int co_i = cur.coroot[i];  // pairing of simple root i with cur's coroot
      for (int j = 0; j < rs->rank; ++j) img.coroot[j] -= co_i * rs->cartan[i][j];
      if (seen.insert(img.coords).second) pool.push_back(img);
    }
  }

  auto positive = [](const IntVec& a) {
    for (Int x : a)
      if (x != 0) return x > 0;
    return false;
  };
  std::vector<Root> pos;
  for (auto& r : pool)
    if (positive(r.coords)) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    Int hx = 0, hy = 0;
    for (Int v : x.coords) hx += v;
    for (Int v : y.coords) hy += v;
    if (hx != hy) return hx < hy;
    return x.coords > y.coords;  // simple roots in Bourbaki order first
  });
  rs->n_positive = (int)pos.size();
  rs->roots = pos;
  for (auto& r : pos) {
    Root neg;
    neg.coords.reserve(rs->rank);
    for (Int x : r.coords) neg.coords.push_back(-x);
    for (Int x : r.coroot) neg.coroot.push_back(-x);
    rs->roots.push_back(neg);
  }
  rs->finish();

  for (int i = 0; i < rs->rank; ++i) {
    IntVec e(rs->rank, 0);
    e[i] = 1;
    rs->simple_indices.push_back(rs->root_index(e));
  }
  for (auto& f : rs->factors) {
    Int best = -1;
    for (int i = 0; i < rs->n_positive; ++i) {
      bool in_factor = true;
      Int h = 0;
      for (int j = 0; j < rs->rank; ++j) {
        if (rs->roots[i].coords[j] != 0 && (j < f.offset || j >= f.offset + f.rank))
          in_factor = false;
        h += rs->roots[i].coords[j];
      }
      if (in_factor && (f.highest_root < 0 || h > best)) {
        best = h;
        f.highest_root = i;
      }
    }
  }
  return rs;
}

inline RootSystemPtr build_root_system(char type, int rank) {
  return build_root_system({{type, rank}});
}

// ---------------------------------------------------------------------------
// Facets

// A facet of the affine apartment, represented by any rational point of it.
// The facet itself is recovered from the integrality pattern of the point's
// pairings with the roots.
struct Facet {
  Point x;
};

// True when x and y lie in the same open facet: for every root, both
// pairings are integral and equal, or both are non-integral with the same
// integer floor.
inline bool same_facet(const RootSystem& R, const Point& x, const Point& y) {
  for (int i = 0; i < R.n_positive; ++i) {
    Rat px = R.pairing(i, x), py = R.pairing(i, y);
    if (is_integer(px) != is_integer(py)) return false;
    if (is_integer(px)) {
      if (px != py) return false;
    } else if (floor_rat(px) != floor_rat(py)) {
      return false;
    }
  }
  return true;
}

// Indices of all roots having a wall through F.
inline std::vector<int> facet_subsystem(const RootSystem& R, const Facet& F) {
  std::vector<int> s;
  for (size_t i = 0; i < R.roots.size(); ++i)
    if (is_integer(R.pairing((int)i, F.x))) s.push_back((int)i);
  return s;
}

// ---------------------------------------------------------------------------
// Positive systems (chambers) of a closed symmetric subsystem

struct PositiveSubsystem {
  std::vector<int> members;    // sorted root indices, closed under negation
  std::vector<int> positives;  // one per pair, sorted

  bool contains_positive(int idx) const {
    return std::binary_search(positives.begin(), positives.end(), idx);
  }
};

inline bool operator==(const PositiveSubsystem& a, const PositiveSubsystem& b) {
  return a.members == b.members && a.positives == b.positives;
}

// All positive systems of the subsystem spanned by `members`. A candidate
// half is a chamber iff it is additively closed within the subsystem
// (Bourbaki's criterion for a set of positive roots).
inline std::vector<PositiveSubsystem> chambers(const RootSystem& R, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  std::vector<int> reps;
  for (int i : members)
    if (R.is_positive_root(i)) reps.push_back(i);

  std::vector<PositiveSubsystem> out;
  size_t n = reps.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    std::vector<int> half;
    for (size_t k = 0; k < n; ++k)
      half.push_back(mask >> k & 1 ? R.negative_of(reps[k]) : reps[k]);
    bool closed = true;
    for (size_t a = 0; a < half.size() && closed; ++a)
      for (size_t b = a + 1; b < half.size() && closed; ++b) {
        IntVec sum(R.rank);
        for (int j = 0; j < R.rank; ++j)
          sum[j] = R.roots[half[a]].coords[j] + R.roots[half[b]].coords[j];
        int idx = R.root_index(sum);
        if (idx < 0) continue;
        if (!std::binary_search(members.begin(), members.end(), idx)) continue;
        if (std::find(half.begin(), half.end(), idx) == half.end()) closed = false;
      }
    if (!closed) continue;
    PositiveSubsystem ps;
    ps.members = members;
    ps.positives = half;
    std::sort(ps.positives.begin(), ps.positives.end());
    out.push_back(std::move(ps));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms

// A linear automorphism of the root system: a permutation of the roots that
// extends linearly. `nmat` is the induced integer matrix on the coweight
// side, defined so that pairings are preserved.
struct Automorphism {
  std::vector<int> perm;  // root index -> root index
  IntMat nmat;            // action on coweight coordinates

  bool is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != (int)i) return false;
    return true;
  }

  RatVec apply(const RatVec& v) const {
    RatVec r(nmat.size(), Rat(0));
    for (size_t i = 0; i < nmat.size(); ++i)
      for (size_t j = 0; j < nmat.size(); ++j)
        if (nmat[i][j] != 0) r[i] += Rat(nmat[i][j]) * v[j];
    return r;
  }

  int apply_root(int idx) const { return perm[idx]; }
};

inline bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm == b.perm; }
inline bool operator<(const Automorphism& a, const Automorphism& b) { return a.perm < b.perm; }

namespace detail {

inline IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size();
  IntMat c(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Exact inverse of an integer matrix whose inverse is again integral.
inline IntMat int_mat_inverse(const IntMat& m) {
  size_t n = m.size();
  std::vector<RatVec> a(n, RatVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMat inv(n, IntVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!is_integer(a[i][n + j])) throw std::invalid_argument("inverse not integral");
      inv[i][j] = a[i][n + j].numerator();
    }
  return inv;
}

inline IntMat transpose(const IntMat& m) {
  size_t n = m.size();
  IntMat t(n, IntVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace detail

inline Automorphism identity_automorphism(const RootSystem& R) {
  Automorphism a;
  a.perm.resize(R.roots.size());
  for (size_t i = 0; i < a.perm.size(); ++i) a.perm[i] = (int)i;
  a.nmat.assign(R.rank, IntVec(R.rank, 0));
  for (int i = 0; i < R.rank; ++i) a.nmat[i][i] = 1;
  return a;
}

inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) c.perm[i] = a.perm[b.perm[i]];
  c.nmat = detail::int_mat_mul(a.nmat, b.nmat);
  return c;
}

inline Automorphism inverse(const Automorphism& a) {
  Automorphism inv;
  inv.perm.resize(a.perm.size());
  for (size_t i = 0; i < a.perm.size(); ++i) inv.perm[a.perm[i]] = (int)i;
  inv.nmat = detail::int_mat_inverse(a.nmat);
  return inv;
}

inline int automorphism_order(const Automorphism& a) {
  Automorphism p = a;
  int n = 1;
  while (!p.is_identity()) {
    p = compose(p, a);
    ++n;
    if (n > 100000) throw std::logic_error("automorphism order overflow");
  }
  return n;
}

inline Automorphism simple_reflection(const RootSystem& R, int i) {
  if (i < 0 || i >= R.rank) throw std::invalid_argument("simple reflection index out of range");
  Automorphism s;
  s.perm.resize(R.roots.size());
  for (size_t k = 0; k < R.roots.size(); ++k) {
    IntVec a = R.roots[k].coords;
    Int p = 0;
    for (int j = 0; j < R.rank; ++j) p += R.cartan[i][j] * a[j];
    a[i] -= p;
    s.perm[k] = R.root_index(a);
  }
  s.nmat.assign(R.rank, IntVec(R.rank, 0));
  for (int k = 0; k < R.rank; ++k) {
    s.nmat[k][k] = 1;
    s.nmat[k][i] -= R.cartan[i][k];
  }
  return s;
}

// Builds the automorphism defined by simple root i -> root images[i], or
// nullopt when that assignment does not permute the root set.
inline std::optional<Automorphism> automorphism_from_simple_images(const RootSystem& R,
                                                                   const std::vector<int>& images) {
  // Pairings between images must reproduce the Cartan matrix.
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j) {
      Int p = 0;
      for (int k = 0; k < R.rank; ++k)
        p += R.roots[images[j]].coords[k] * R.roots[images[i]].coroot[k];
      if (p != R.cartan[i][j]) return std::nullopt;
    }
  IntMat m(R.rank, IntVec(R.rank));  // column j = coords of image of simple j
  for (int j = 0; j < R.rank; ++j)
    for (int i = 0; i < R.rank; ++i) m[i][j] = R.roots[images[j]].coords[i];

  Automorphism a;
  a.perm.resize(R.roots.size());
  for (size_t k = 0; k < R.roots.size(); ++k) {
    IntVec img(R.rank, 0);
    for (int i = 0; i < R.rank; ++i)
      for (int j = 0; j < R.rank; ++j) img[i] += m[i][j] * R.roots[k].coords[j];
    int idx = R.root_index(img);
    if (idx < 0) return std::nullopt;
    a.perm[k] = idx;
  }
  std::vector<bool> hit(R.roots.size(), false);
  for (int p : a.perm) {
    if (hit[p]) return std::nullopt;
    hit[p] = true;
  }
  try {
    a.nmat = detail::transpose(detail::int_mat_inverse(m));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return a;
}

// The finite Weyl group W0, as root permutations.
inline std::vector<Automorphism> weyl_group(const RootSystem& R) {
  std::set<std::vector<int>> seen;
  std::vector<Automorphism> out{identity_automorphism(R)};
  seen.insert(out[0].perm);
  std::vector<Automorphism> gens;
  for (int i = 0; i < R.rank; ++i) gens.push_back(simple_reflection(R, i));
  for (size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      Automorphism n = compose(out[k], g);
      if (seen.insert(n.perm).second) out.push_back(std::move(n));
    }
  return out;
}

// The full automorphism group of R: W0 extended by diagram automorphisms
// (including permutations of isomorphic factors). Enumerated by assigning
// images to the simple roots with Cartan-pairing pruning.
inline std::vector<Automorphism> automorphism_group(const RootSystem& R) {
  std::vector<Automorphism> out;
  std::vector<int> images(R.rank, -1);
  int n_roots = (int)R.roots.size();

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == R.rank) {
      if (auto a = automorphism_from_simple_images(R, images)) out.push_back(*a);
      return;
    }
    for (int cand = 0; cand < n_roots; ++cand) {
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        Int p = 0, q = 0;
        for (int k = 0; k < R.rank; ++k) {
          p += R.roots[cand].coords[k] * R.roots[images[j]].coroot[k];
          q += R.roots[images[j]].coords[k] * R.roots[cand].coroot[k];
        }
        if (p != R.cartan[j][depth] || q != R.cartan[depth][j]) ok = false;
      }
      {
        Int d = 0;
        for (int k = 0; k < R.rank; ++k)
          d += R.roots[cand].coords[k] * R.roots[cand].coroot[k];
        if (d != 2) ok = false;
      }
      if (!ok) continue;
      images[depth] = cand;
      self(self, depth + 1);
      images[depth] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// True when a maps the set of simple roots to itself, i.e. a stabilizes the
// dominant chamber.
inline bool is_diagram_automorphism(const RootSystem& R, const Automorphism& a) {
  for (int i : R.simple_indices) {
    int img = a.perm[i];
    if (std::find(R.simple_indices.begin(), R.simple_indices.end(), img) ==
        R.simple_indices.end())
      return false;
  }
  return true;
}

// Membership in W0: pull the dominant chamber back and compare. Every
// automorphism factors as (W0 element) * (diagram automorphism).
inline bool in_weyl_group(const RootSystem& R, const Automorphism& a) {
  RatVec v(R.rank, Rat(1));  // regular dominant
  RatVec u = a.apply(v);
  Automorphism w = identity_automorphism(R);
  int guard = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < R.rank; ++i)
      if (u[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    Automorphism s = simple_reflection(R, neg);
    u = s.apply(u);
    w = compose(s, w);
    if (++guard > 10000) throw std::logic_error("dominantization did not terminate");
  }
  return compose(w, a).is_identity();
}

// The canonical order-two diagram flip, where the irreducible type has one
// (A_n with n >= 2, D_n, E6).
inline Automorphism diagram_flip(const RootSystem& R) {
  auto all = automorphism_group(R);
  for (const auto& a : all)
    if (!a.is_identity() && is_diagram_automorphism(R, a) && automorphism_order(a) == 2)
      return a;
  throw std::invalid_argument("no diagram flip for " + R.label);
}

// The longest element of W0.
inline Automorphism longest_element(const RootSystem& R) {
  for (const auto& w : weyl_group(R)) {
    bool all_neg = true;
    for (int i = 0; i < R.n_positive && all_neg; ++i)
      if (R.is_positive_root(w.perm[i])) all_neg = false;
    if (all_neg) return w;
  }
  throw std::logic_error("longest element not found");
}

// ---------------------------------------------------------------------------
// Coweights

inline bool is_coweight(const RootSystem& R, const RatVec& v) {
  if ((int)v.size() != R.rank) return false;
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

// The dominant W0-representative of v.
inline RatVec dominant_representative(const RootSystem& R, RatVec v) {
  int guard = 0;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < R.rank; ++i)
      if (v[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) return v;
    Rat c = v[neg];
    for (int j = 0; j < R.rank; ++j) v[j] -= c * Rat(R.cartan[neg][j]);
    if (++guard > 100000) throw std::logic_error("dominantization did not terminate");
  }
}

inline bool is_dominant(const RootSystem& R, const RatVec& v) {
  for (int i = 0; i < R.rank; ++i)
    if (v[i] < 0) return false;
  return true;
}

// The W0-orbit of v, sorted.
inline std::vector<RatVec> weyl_orbit(const RootSystem& R, const RatVec& v) {
  std::set<RatVec> seen{v};
  std::vector<RatVec> work{v};
  for (size_t k = 0; k < work.size(); ++k)
    for (int i = 0; i < R.rank; ++i) {
      RatVec u = work[k];
      Rat c = u[i];
      if (c == 0) continue;
      for (int j = 0; j < R.rank; ++j) u[j] -= c * Rat(R.cartan[i][j]);
      if (seen.insert(u).second) work.push_back(u);
    }
  return {seen.begin(), seen.end()};
}

}  // namespace alcove
