#include <catch2/catch_amalgamated.hpp>

#include "alcove/alcove.hpp"
#include "alcove/verify/oracles.hpp"

using namespace alcove;

namespace {

// A1 with its two generators relative to the interval (0,1).
struct A1Fixture {
  RootSystemPtr rs = build_root_system('A', 1);
  Alcove C = fundamental_alcove(rs);
  AffineElement s0 = wall_reflection(rs, 0, 0);
  AffineElement s1 = wall_reflection(rs, 0, 1);
  AffineElement t = translation_element(rs, {Rat(2)});       // t_{alpha^v}
  AffineElement s = linear_element(rs, simple_reflection(*rs, 0));
};

}  // namespace

TEST_CASE("group operations") {
  A1Fixture f;
  REQUIRE((f.t * f.t.inverse()).is_identity());
  REQUIRE(f.t.act({Rat(0)}) == RatVec{Rat(2)});
  // s then translate: p -> -(p+2)
  REQUIRE((f.s * f.t).act({Rat(1, 2)}) == RatVec{Rat(-5, 2)});

  auto b2 = build_root_system('B', 2);
  AffineElement other = identity_element(b2);
  REQUIRE_THROWS_AS(f.t * other, std::invalid_argument);

  // group law against the action, on a composite element
  AffineElement g = f.s1 * f.t * f.s0;
  Point p{Rat(1, 3)};
  REQUIRE(g.act(p) == f.s1.act(f.t.act(f.s0.act(p))));

  // translations must lie in the coweight lattice
  REQUIRE_THROWS_AS(translation_element(f.rs, {Rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("fundamental alcoves") {
  A1Fixture f;
  REQUIRE(f.C.interior() == RatVec{Rat(1, 2)});
  REQUIRE(f.C.floors() == IntVec{0});

  auto a2 = build_root_system('A', 2);
  Alcove c2 = fundamental_alcove(a2);
  for (int i = 0; i < a2->n_positive; ++i) {
    Rat p = a2->pairing(i, c2.interior());
    REQUIRE(p > 0);
    REQUIRE(p < 1);
  }

  auto prod = build_root_system({{'A', 1}, {'A', 1}});
  REQUIRE(fundamental_alcove(prod).interior() == RatVec{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("alcove from a facet chamber") {
  A1Fixture f;
  Facet origin{{Rat(0)}};
  auto ch = chambers(*f.rs, facet_subsystem(*f.rs, origin));
  REQUIRE(ch.size() == 2);
  for (const auto& c : ch) {
    Alcove A = alcove_from_facet_chamber(f.rs, origin, c);
    REQUIRE(adjacent_to_facet(A, origin));
    if (c.contains_positive(0))
      REQUIRE(A.floors() == IntVec{0});  // (0,1)
    else
      REQUIRE(A.floors() == IntVec{-1});  // (-1,0)
    REQUIRE(induced_chamber(*f.rs, origin, A) == c);
  }

  // facet in the interior of an alcove: R_F empty, the alcove is the one
  // containing the representative point
  Facet inner{{Rat(5, 2)}};
  auto ch2 = chambers(*f.rs, facet_subsystem(*f.rs, inner));
  REQUIRE(ch2.size() == 1);
  REQUIRE(alcove_from_facet_chamber(f.rs, inner, ch2[0]).floors() == IntVec{2});

  PositiveSubsystem bad;  // not a chamber of R_F
  REQUIRE_THROWS_AS(alcove_from_facet_chamber(f.rs, origin, bad), std::invalid_argument);
}

TEST_CASE("faces of the closed fundamental alcove") {
  auto a2 = build_root_system('A', 2);
  auto faces = fundamental_alcove_faces(*a2);
  REQUIRE(faces.size() == 7);  // 3 vertices, 3 edges, 1 interior
  REQUIRE(same_facet(*a2, faces.back().x, fundamental_alcove(a2).interior()));

  auto a3 = build_root_system('A', 3);
  REQUIRE(fundamental_alcove_faces(*a3).size() == 15);

  auto prod = build_root_system({{'A', 1}, {'A', 1}});
  REQUIRE(fundamental_alcove_faces(*prod).size() == 9);
}

TEST_CASE("length oracle") {
  A1Fixture f;
  REQUIRE(length(identity_element(f.rs), f.C) == 0);
  REQUIRE(length(f.t, f.C) == 2);
  REQUIRE(length(f.t * f.s, f.C) == 1);  // p -> 2 - p
}

TEST_CASE("per-root wall counts") {
  A1Fixture f;
  Facet origin{{Rat(0)}};
  // <alpha,lambda> = 2 and theta^{-1}(alpha) < 0: one wall fewer
  REQUIRE(wall_count_contribution(*f.rs, origin, f.C, f.s, 0, {Rat(2)}) == 1);
  // <alpha,lambda> = -2 and theta^{-1}(alpha) < 0: one wall more
  REQUIRE(wall_count_contribution(*f.rs, origin, f.C, f.s, 0, {Rat(-2)}) == 3);
  // <alpha,lambda> = 2 and theta^{-1}(alpha) > 0
  AffineElement id = identity_element(f.rs);
  REQUIRE(wall_count_contribution(*f.rs, origin, f.C, id, 0, {Rat(2)}) == 2);

  Facet inner{{Rat(1, 2)}};
  REQUIRE_THROWS_AS(wall_count_contribution(*f.rs, inner, f.C, id, 0, {Rat(2)}),
                    std::invalid_argument);
}

TEST_CASE("closed-form length") {
  A1Fixture f;
  Facet origin{{Rat(0)}};
  REQUIRE(length_formula(*f.rs, origin, f.C, {Rat(2)}, f.s) == 1);
  REQUIRE(length(f.t * f.s, f.C) == 1);

  // the classical special-point case with theta = id
  auto a2 = build_root_system('A', 2);
  Alcove c2 = fundamental_alcove(a2);
  Facet origin2{{Rat(0), Rat(0)}};
  Coweight rho{Rat(1), Rat(1)};
  REQUIRE(length_formula(*a2, origin2, c2, rho, identity_element(a2)) == 4);
  REQUIRE(length(translation_element(a2, rho), c2) == 4);

  // the other alcove at the origin: theta^{-1} flips the C-positive root -alpha
  Alcove cneg(f.rs, {Rat(-1, 2)});
  REQUIRE(length_formula(*f.rs, origin, cneg, {Rat(2)}, f.s) == 3);
  REQUIRE(length(f.t * f.s, cneg) == 3);

  REQUIRE_THROWS_AS(length_formula(*f.rs, Facet{{Rat(1, 4)}}, f.C, {Rat(2)}, f.s),
                    std::invalid_argument);
}

TEST_CASE("omega decomposition") {
  A1Fixture f;
  auto [w0, g0] = omega_decompose(identity_element(f.rs), f.C);
  REQUIRE(w0.is_identity());
  REQUIRE(g0.is_identity());

  auto [w1, g1] = omega_decompose(f.t, f.C);
  REQUIRE(w1 == f.t);
  REQUIRE(g1.is_identity());

  AffineElement tom = translation_element(f.rs, {Rat(1)});  // t_{omega^v}
  auto [w2, g2] = omega_decompose(tom, f.C);
  REQUIRE(w2 == f.s1);
  REQUIRE(g2.act({Rat(1, 4)}) == RatVec{Rat(3, 4)});  // p -> 1 - p
  REQUIRE((g2 * g2).is_identity());
  REQUIRE(length(tom, f.C) == length(w2, f.C));
}

TEST_CASE("reduced words") {
  A1Fixture f;
  REQUIRE(reduced_word(identity_element(f.rs), f.C).empty());

  auto word = reduced_word(f.t, f.C);
  REQUIRE(word.size() == 2);
  REQUIRE(word[0] == f.s1);
  REQUIRE(word[1] == f.s0);

  REQUIRE(reduced_word(f.t * f.s, f.C) == std::vector<AffineElement>{f.s1});

  // words compose to the affine Weyl part and have length l(w)
  auto a2 = build_root_system('A', 2);
  Alcove c2 = fundamental_alcove(a2);
  for (const auto& w : verify::length_ball(c2, 4)) {
    auto wd = reduced_word(w, c2);
    REQUIRE((Int)wd.size() == length(w, c2));
    AffineElement prod = identity_element(a2);
    for (const auto& g : wd) prod = prod * g;
    REQUIRE(prod == w);
  }
}

TEST_CASE("Bruhat order") {
  A1Fixture f;
  REQUIRE(bruhat_leq(f.t, f.t, f.C));
  REQUIRE(bruhat_leq(f.s0, f.s1 * f.s0, f.C));
  REQUIRE(!bruhat_leq(f.s1, f.s0, f.C));
  REQUIRE(bruhat_leq(f.t * f.s, f.t, f.C));
  // different stabilizer components are incomparable
  REQUIRE(!bruhat_leq(translation_element(f.rs, {Rat(1)}), f.t, f.C));
}

TEST_CASE("weak order") {
  A1Fixture f;
  for (const auto& w : verify::length_ball(f.C, 4))
    REQUIRE(weak_bruhat_leq(identity_element(f.rs), w, f.C));
  REQUIRE(weak_bruhat_leq(f.s0, f.s0 * f.s1, f.C));
  REQUIRE(!weak_bruhat_leq(f.s0, f.s1 * f.s0, f.C));
}

TEST_CASE("recursion, subword oracle and weak order agree on a ball") {
  for (auto rs : {build_root_system('A', 2), build_root_system('B', 2)}) {
    Alcove C = fundamental_alcove(rs);
    auto ball = verify::length_ball(C, 4);
    for (const auto& y : ball) {
      auto hits = verify::subword_reachable(C, reduced_word(y, C), ball);
      for (size_t j = 0; j < ball.size(); ++j) {
        bool rec = bruhat_leq(ball[j], y, C);
        REQUIRE(rec == hits[j]);
        if (weak_bruhat_leq(ball[j], y, C)) REQUIRE(rec);
      }
    }
  }
}

TEST_CASE("stabilizer of the fundamental alcove") {
  A1Fixture f;
  REQUIRE(omega_group(f.C).size() == 2);
  auto a2 = build_root_system('A', 2);
  REQUIRE(omega_group(fundamental_alcove(a2)).size() == 6);
  auto b2 = build_root_system('B', 2);
  REQUIRE(omega_group(fundamental_alcove(b2)).size() == 2);
  auto g2 = build_root_system('G', 2);
  REQUIRE(omega_group(fundamental_alcove(g2)).size() == 1);

  for (const auto& g : omega_group(f.C)) REQUIRE(length(g, f.C) == 0);
}

TEST_CASE("length is invariant under the stabilizer and inverse") {
  auto a2 = build_root_system('A', 2);
  Alcove C = fundamental_alcove(a2);
  auto omega = omega_group(C);
  for (const auto& w : verify::length_ball(C, 3))
    for (const auto& g : omega) {
      AffineElement eta = w * g;
      REQUIRE(length(eta, C) == length(w, C));
      REQUIRE(length(g * w, C) == length(w, C));
      REQUIRE(length(eta.inverse(), C) == length(eta, C));
    }
}

TEST_CASE("double coset representatives") {
  A1Fixture f;
  Facet origin{{Rat(0)}};

  REQUIRE(double_coset_min(identity_element(f.rs), origin, f.C).is_identity());

  AffineElement m = double_coset_min(f.t, origin, f.C);
  REQUIRE(length(m, f.C) == 1);
  REQUIRE(m == f.s1);
  // idempotent and constant on the double coset
  REQUIRE(double_coset_min(m, origin, f.C) == m);
  for (const auto& u : facet_reflection_group(f.rs, origin))
    for (const auto& v : facet_reflection_group(f.rs, origin))
      REQUIRE(double_coset_min(u * f.t * v, origin, f.C) == m);

  // a facet interior to an alcove has trivial reflection group
  Facet inner{{Rat(1, 2)}};
  REQUIRE(facet_reflection_group(f.rs, inner).size() == 1);
  REQUIRE(double_coset_min(f.t, inner, f.C) == f.t);
}

TEST_CASE("one-letter deletions stay below the element") {
  auto a2 = build_root_system('A', 2);
  Alcove C = fundamental_alcove(a2);
  AffineElement t = translation_element(a2, {Rat(1), Rat(1)});
  for (const auto& d : one_letter_deletions(t, C)) {
    REQUIRE(bruhat_leq(d, t, C));
    REQUIRE(length(d, C) < length(t, C));
  }
}
