#include <catch2/catch_amalgamated.hpp>

#include "alcove/root_system.hpp"
#include "alcove/geometry.hpp"

using namespace alcove;

TEST_CASE("construction of the small types") {
  auto a1 = build_root_system('A', 1);
  REQUIRE(a1->roots.size() == 2);
  REQUIRE(a1->n_positive == 1);
  REQUIRE(a1->simple_indices.size() == 1);

  auto a2 = build_root_system('A', 2);
  REQUIRE(a2->roots.size() == 6);
  REQUIRE(a2->n_positive == 3);
  // positives are alpha1, alpha2, alpha1+alpha2
  std::set<IntVec> pos;
  for (int i = 0; i < a2->n_positive; ++i) pos.insert(a2->roots[i].coords);
  REQUIRE(pos == std::set<IntVec>{{1, 0}, {0, 1}, {1, 1}});

  auto b2 = build_root_system('B', 2);
  REQUIRE(b2->roots.size() == 8);

  auto g2 = build_root_system('G', 2);
  REQUIRE(g2->roots.size() == 12);
  REQUIRE(g2->n_positive == 6);

  auto a3 = build_root_system('A', 3);
  REQUIRE(a3->roots.size() == 12);

  auto f4 = build_root_system('F', 4);
  REQUIRE(f4->roots.size() == 48);

  auto prod = build_root_system({{'A', 1}, {'A', 1}});
  REQUIRE(prod->roots.size() == 4);
  REQUIRE(prod->label == "A1xA1");

  REQUIRE_THROWS_AS(build_root_system('G', 3), std::invalid_argument);
  REQUIRE_THROWS_AS(build_root_system('B', 1), std::invalid_argument);
  REQUIRE_THROWS_AS(build_root_system('Z', 2), std::invalid_argument);
}

TEST_CASE("roots come in opposite pairs with exactly one positive") {
  for (auto rs : {build_root_system('A', 2), build_root_system('B', 2),
                  build_root_system('G', 2), build_root_system('A', 3)}) {
    for (size_t i = 0; i < rs->roots.size(); ++i) {
      int n = rs->negative_of((int)i);
      for (int j = 0; j < rs->rank; ++j)
        REQUIRE(rs->roots[n].coords[j] == -rs->roots[(int)i].coords[j]);
      REQUIRE(rs->is_positive_root((int)i) != rs->is_positive_root(n));
    }
    // reduced: 2*alpha is never a root
    for (const auto& r : rs->roots) {
      IntVec dbl(rs->rank);
      for (int j = 0; j < rs->rank; ++j) dbl[j] = 2 * r.coords[j];
      REQUIRE(rs->root_index(dbl) == -1);
    }
  }
}

TEST_CASE("pairings are exact and integral on coroots") {
  auto a2 = build_root_system('A', 2);
  RatVec omega1{Rat(1), Rat(0)};
  int a1 = a2->simple_indices[0];
  int a12 = a2->root_index({1, 1});
  REQUIRE(a2->pairing(a1, omega1) == 1);
  REQUIRE(a2->pairing(a12, omega1) == 1);

  auto r1 = build_root_system('A', 1);
  RatVec coroot = rat_vec(r1->coroot(0));
  REQUIRE(r1->pairing(0, coroot) == 2);

  // <alpha, beta^v> integral for all roots of several systems
  for (auto rs : {build_root_system('B', 2), build_root_system('G', 2)}) {
    for (const auto& a : rs->roots)
      for (const auto& b : rs->roots) {
        Int s = 0;
        for (int j = 0; j < rs->rank; ++j) s += a.coords[j] * b.coroot[j];
        if (a.coords == b.coords) REQUIRE(s == 2);
      }
  }
}

TEST_CASE("facet subsystems") {
  auto a1 = build_root_system('A', 1);
  REQUIRE(facet_subsystem(*a1, Facet{{Rat(0)}}).size() == 2);
  REQUIRE(facet_subsystem(*a1, Facet{{Rat(1, 2)}}).empty());

  auto a2 = build_root_system('A', 2);
  Facet f{{Rat(0), Rat(1, 3)}};
  auto rf = facet_subsystem(*a2, f);
  REQUIRE(rf.size() == 2);
  for (int i : rf) {
    IntVec c = a2->roots[i].coords;
    REQUIRE((c == IntVec{1, 0} || c == IntVec{-1, 0}));
  }
}

TEST_CASE("the subsystem depends only on the facet, not the representative") {
  auto a2 = build_root_system('A', 2);
  Point x{Rat(0), Rat(1, 3)};
  Point y{Rat(0), Rat(2, 5)};
  REQUIRE(same_facet(*a2, x, y));
  REQUIRE(facet_subsystem(*a2, Facet{x}) == facet_subsystem(*a2, Facet{y}));
  Point z{Rat(0), Rat(4, 3)};  // same integrality pattern, different cell
  REQUIRE(!same_facet(*a2, x, z));
  Point w{Rat(1, 3), Rat(1, 3)};
  REQUIRE(!same_facet(*a2, x, w));
}

TEST_CASE("automorphism groups") {
  REQUIRE(automorphism_group(*build_root_system('A', 1)).size() == 2);
  REQUIRE(automorphism_group(*build_root_system('A', 2)).size() == 12);
  REQUIRE(automorphism_group(*build_root_system('B', 2)).size() == 8);
  REQUIRE(weyl_group(*build_root_system('G', 2)).size() == 12);
  REQUIRE(automorphism_group(*build_root_system('G', 2)).size() == 12);
  // factor swap doubles the group of A1 x A1 on top of the two flips
  REQUIRE(automorphism_group(*build_root_system({{'A', 1}, {'A', 1}})).size() == 8);

  auto a2 = build_root_system('A', 2);
  auto all = automorphism_group(*a2);
  int in_w0 = 0;
  for (const auto& a : all) in_w0 += in_weyl_group(*a2, a) ? 1 : 0;
  REQUIRE(in_w0 == 6);
  REQUIRE(is_diagram_automorphism(*a2, diagram_flip(*a2)));
  REQUIRE(automorphism_order(diagram_flip(*a2)) == 2);
}

TEST_CASE("automorphisms preserve the pairing") {
  auto rs = build_root_system('B', 2);
  std::vector<RatVec> samples{{Rat(1), Rat(0)}, {Rat(-2), Rat(3)}, {Rat(1, 2), Rat(-5, 3)}};
  for (const auto& a : automorphism_group(*rs))
    for (const auto& v : samples) {
      RatVec av = a.apply(v);
      for (size_t i = 0; i < rs->roots.size(); ++i)
        REQUIRE(rs->pairing(a.apply_root((int)i), av) == rs->pairing((int)i, v));
    }
}

TEST_CASE("chambers of subsystems") {
  auto a1 = build_root_system('A', 1);
  auto a2 = build_root_system('A', 2);

  REQUIRE(chambers(*a2, {}).size() == 1);
  REQUIRE(chambers(*a1, {0, 1}).size() == 2);

  std::vector<int> full;
  for (size_t i = 0; i < a2->roots.size(); ++i) full.push_back((int)i);
  auto ch = chambers(*a2, full);
  REQUIRE(ch.size() == 6);

  // each chamber is additively closed
  for (const auto& c : ch)
    for (int i : c.positives)
      for (int j : c.positives) {
        IntVec sum(a2->rank);
        for (int k = 0; k < a2->rank; ++k)
          sum[k] = a2->roots[i].coords[k] + a2->roots[j].coords[k];
        int idx = a2->root_index(sum);
        if (idx >= 0) REQUIRE(c.contains_positive(idx));
      }
}

TEST_CASE("the reflection group permutes chambers simply transitively") {
  for (auto rs : {build_root_system('A', 2), build_root_system('B', 2)}) {
    std::vector<int> full;
    for (size_t i = 0; i < rs->roots.size(); ++i) full.push_back((int)i);
    auto ch = chambers(*rs, full);
    auto w0 = weyl_group(*rs);
    REQUIRE(ch.size() == w0.size());
    // for each pair of chambers exactly one group element maps one onto the other
    for (const auto& c1 : ch)
      for (const auto& c2 : ch) {
        int count = 0;
        for (const auto& w : w0) {
          std::vector<int> img;
          for (int i : c1.positives) img.push_back(w.apply_root(i));
          std::sort(img.begin(), img.end());
          if (img == c2.positives) ++count;
        }
        REQUIRE(count == 1);
      }
  }
}

TEST_CASE("dominant representatives and orbits") {
  auto a2 = build_root_system('A', 2);
  REQUIRE(weyl_orbit(*a2, {Rat(1), Rat(0)}).size() == 3);
  REQUIRE(weyl_orbit(*a2, {Rat(0), Rat(0)}).size() == 1);

  auto a1 = build_root_system('A', 1);
  auto orb = weyl_orbit(*a1, {Rat(2)});
  REQUIRE(orb.size() == 2);
  REQUIRE(dominant_representative(*a1, {Rat(-2)}) == RatVec{Rat(2)});

  for (const auto& v : weyl_orbit(*a2, {Rat(2), Rat(-1)})) {
    RatVec d = dominant_representative(*a2, v);
    REQUIRE(is_dominant(*a2, d));
    REQUIRE(d == dominant_representative(*a2, {Rat(2), Rat(-1)}));
  }
}
