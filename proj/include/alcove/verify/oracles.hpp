// Independent test oracles, kept apart from the production paths they
// check.
//
// The Bruhat comparison here is the literal subword characterization: v <= w
// iff some subsequence of one reduced word of w multiplies to v. It is
// evaluated by dynamic programming over prefixes, keeping only reduced
// partial products (every element below w has a reduced word occurring as a
// subsequence, so this loses nothing). The inner loop runs on plain integer
// matrices since interval sizes reach a few thousand elements.

#pragma once

#include "alcove/kottwitz.hpp"

#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace alcove::verify {

struct FastElement {
  IntMat n;   // action on coweight coordinates
  IntVec v;   // translation, integral
};

struct FastContext {
  const RootSystem* R = nullptr;
  Int denom = 1;     // common denominator of the base interior point
  IntVec base_num;   // denom * interior point
  IntVec base_floor; // alcove floors of the base point
  std::vector<IntVec> pos_roots;

  explicit FastContext(const Alcove& C) : R(&C.system()) {
    for (const auto& c : C.interior()) denom = std::lcm(denom, c.denominator());
    for (const auto& c : C.interior()) base_num.push_back(c.numerator() * (denom / c.denominator()));
    base_floor = C.floors();
    for (int i = 0; i < R->n_positive; ++i) pos_roots.push_back(R->roots[i].coords);
  }

  FastElement lift(const AffineElement& e) const {
    FastElement f;
    f.n = e.linear().nmat;
    for (const auto& c : e.translation()) f.v.push_back(c.numerator());
    return f;
  }

  FastElement compose(const FastElement& a, const FastElement& b) const {
    int r = R->rank;
    FastElement c;
    c.n.assign(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        if (a.n[i][k] != 0)
          for (int j = 0; j < r; ++j) c.n[i][j] += a.n[i][k] * b.n[k][j];
    c.v.assign(r, 0);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) c.v[i] += a.n[i][j] * b.v[j];
      c.v[i] += a.v[i];
    }
    return c;
  }

  static Int floor_div(Int a, Int b) {
    Int q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
  }

  Int length(const FastElement& e) const {
    int r = R->rank;
    IntVec q(r, 0);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) q[i] += e.n[i][j] * base_num[j];
      q[i] += e.v[i] * denom;
    }
    Int l = 0;
    for (size_t a = 0; a < pos_roots.size(); ++a) {
      Int s = 0;
      for (int j = 0; j < r; ++j) s += pos_roots[a][j] * q[j];
      Int d = floor_div(s, denom) - base_floor[a];
      l += d < 0 ? -d : d;
    }
    return l;
  }

  IntVec key(const FastElement& e) const {
    IntVec k;
    for (const auto& row : e.n) k.insert(k.end(), row.begin(), row.end());
    k.insert(k.end(), e.v.begin(), e.v.end());
    return k;
  }
};

struct IntVecHash {
  size_t operator()(const IntVec& v) const {
    size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= (size_t)x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Answers, for each target, whether it is a subsequence product of the
// word. Partial products are kept only when reduced; the final set is the
// full Bruhat lower interval of the word's product.
inline std::vector<bool> subword_reachable(const Alcove& C,
                                           const std::vector<AffineElement>& word,
                                           const std::vector<AffineElement>& targets) {
  FastContext ctx(C);
  std::vector<FastElement> gens;
  for (const auto& g : word) gens.push_back(ctx.lift(g));

  Int max_target = 0;
  std::unordered_map<IntVec, size_t, IntVecHash> want;
  for (size_t t = 0; t < targets.size(); ++t) {
    FastElement f = ctx.lift(targets[t]);
    Int l = ctx.length(f);
    if (l > max_target) max_target = l;
    want[ctx.key(f)] = t;
  }

  std::vector<FastElement> pool;
  std::vector<Int> len;
  std::unordered_set<IntVec, IntVecHash> seen;
  FastElement id;
  id.n.assign(ctx.R->rank, IntVec(ctx.R->rank, 0));
  for (int i = 0; i < ctx.R->rank; ++i) id.n[i][i] = 1;
  id.v.assign(ctx.R->rank, 0);
  pool.push_back(id);
  len.push_back(0);
  seen.insert(ctx.key(id));

  for (const auto& g : gens) {
    size_t snapshot = pool.size();
    for (size_t k = 0; k < snapshot; ++k) {
      if (len[k] + 1 > max_target) continue;
      FastElement w = ctx.compose(pool[k], g);
      if (ctx.length(w) != len[k] + 1) continue;
      IntVec key = ctx.key(w);
      if (!seen.insert(key).second) continue;
      len.push_back(len[k] + 1);
      pool.push_back(std::move(w));
    }
  }

  std::vector<bool> out(targets.size(), false);
  for (const auto& f : pool) {
    auto it = want.find(ctx.key(f));
    if (it != want.end()) out[it->second] = true;
  }
  return out;
}

// The subword characterization of Bruhat order, gated (like the production
// comparison) on equal stabilizer components.
inline bool subword_leq(const AffineElement& eta, const AffineElement& eta2, const Alcove& C) {
  if (!same_omega_part(eta, eta2, C)) return false;
  auto [w2, gamma] = omega_decompose(eta2, C);
  AffineElement w1 = eta * gamma.inverse();
  return subword_reachable(C, reduced_word(eta2, C), {w1})[0];
}

// All affine Weyl group elements of length at most maxlen relative to C.
inline std::vector<AffineElement> length_ball(const Alcove& C, Int maxlen) {
  auto walls = bounding_walls(C);
  std::set<AffineElement> seen{identity_element(C.system_ptr())};
  std::vector<AffineElement> work{identity_element(C.system_ptr())};
  for (size_t k = 0; k < work.size(); ++k)
    for (const auto& w : walls) {
      AffineElement n = work[k] * w.reflection;
      if (length(n, C) != length(work[k], C) + 1 || length(n, C) > maxlen) continue;
      if (seen.insert(n).second) work.push_back(std::move(n));
    }
  return {seen.begin(), seen.end()};
}

// Brute-force admissible set: enumerate the length ball in the right
// stabilizer fiber and keep elements passing the subword test against some
// orbit translation. Entirely independent of the production downward BFS.
inline std::vector<AffineElement> brute_admissible(RootSystemPtr rs, const Coweight& mu,
                                                   const Alcove& C) {
  std::vector<RatVec> orbit = weyl_orbit(*rs, mu);
  std::vector<AffineElement> translations;
  for (const auto& lam : orbit) translations.push_back(translation_element(rs, lam));

  AffineElement gamma0 = omega_decompose(translations[0], C).second;
  Int maxlen = 0;
  for (const auto& t : translations) maxlen = std::max(maxlen, length(t, C));

  std::vector<AffineElement> candidates;
  for (const auto& w : length_ball(C, maxlen)) candidates.push_back(w * gamma0);

  std::vector<bool> keep(candidates.size(), false);
  for (const auto& t : translations) {
    auto [wt, gt] = omega_decompose(t, C);
    if (!(gt == gamma0)) throw std::logic_error("orbit translations in different fibers");
    std::vector<AffineElement> targets;
    for (const auto& c : candidates) targets.push_back(c * gamma0.inverse());
    auto hit = subword_reachable(C, reduced_word(t, C), targets);
    for (size_t i = 0; i < hit.size(); ++i)
      if (hit[i]) keep[i] = true;
  }
  std::vector<AffineElement> out;
  for (size_t i = 0; i < candidates.size(); ++i)
    if (keep[i]) out.push_back(candidates[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove::verify
