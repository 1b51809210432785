#include <catch2/catch_amalgamated.hpp>

#include "alcove/alcove.hpp"

using namespace alcove;

TEST_CASE("rational parsing and formatting") {
  REQUIRE(parse_rational("3/4") == Rat(3, 4));
  REQUIRE(parse_rational("-2") == Rat(-2));
  REQUIRE(parse_rational("-6/4") == Rat(-3, 2));
  REQUIRE(to_string(Rat(-3, 2)) == "-3/2");
  REQUIRE(to_string(Rat(5)) == "5");
  REQUIRE(parse_rat_vec("1,-1/2,0") == RatVec{Rat(1), Rat(-1, 2), Rat(0)});
  REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_rational("x"), std::invalid_argument);

  REQUIRE(floor_rat(Rat(-1, 2)) == -1);
  REQUIRE(floor_rat(Rat(5, 2)) == 2);
  REQUIRE(floor_rat(Rat(3)) == 3);
  REQUIRE(ceil_rat(Rat(-1, 2)) == 0);
  REQUIRE(frac_distance(Rat(7, 3)) == Rat(1, 3));
}

TEST_CASE("root system serialization round trip") {
  for (auto rs : {build_root_system('A', 2), build_root_system('B', 2),
                  build_root_system({{'A', 1}, {'A', 1}})}) {
    json j = to_json(*rs);
    auto back = root_system_from_json(j);
    REQUIRE(back->label == rs->label);
    REQUIRE(to_json(*back) == j);
  }
  json tampered = to_json(*build_root_system('A', 2));
  tampered["roots"][0][0] = 7;
  REQUIRE_THROWS_AS(root_system_from_json(tampered), std::invalid_argument);
}

TEST_CASE("coweights as rational strings") {
  RatVec v{Rat(1), Rat(-1, 2)};
  REQUIRE(rat_vec_from_json(to_json(v)) == v);
}

TEST_CASE("element serialization round trip") {
  auto a2 = build_root_system('A', 2);
  std::vector<AffineElement> sample{
      identity_element(a2),
      translation_element(a2, {Rat(1), Rat(-2)}),
      linear_element(a2, diagram_flip(*a2)),
      wall_reflection(a2, a2->root_index({1, 1}), 1),
  };
  for (const auto& e : sample) {
    AffineElement back = element_from_json(a2, to_json(e));
    REQUIRE(back == e);
  }
}

TEST_CASE("named linear parts") {
  auto a2 = build_root_system('A', 2);
  REQUIRE(linear_from_json(*a2, json("id")).is_identity());
  REQUIRE(linear_from_json(*a2, json("s1")) == simple_reflection(*a2, 0));
  REQUIRE(linear_from_json(*a2, json("delta")) == diagram_flip(*a2));
  REQUIRE(linear_from_json(*a2, json("w0")) == longest_element(*a2));
  auto a1 = build_root_system('A', 1);
  REQUIRE(linear_from_json(*a1, json("s")) == simple_reflection(*a1, 0));
  REQUIRE_THROWS_AS(linear_from_json(*a2, json("s9")), std::invalid_argument);
  REQUIRE_THROWS_AS(linear_from_json(*a2, json("frobenius")), std::invalid_argument);

  // an arbitrary permutation of roots is rejected unless it is linear
  std::vector<int> bogus(a2->roots.size());
  for (size_t i = 0; i < bogus.size(); ++i) bogus[i] = (int)i;
  std::swap(bogus[0], bogus[1]);
  REQUIRE_THROWS_AS(linear_from_json(*a2, json(bogus)), std::invalid_argument);
}

TEST_CASE("admissible set exports") {
  auto a1 = build_root_system('A', 1);
  Alcove C = fundamental_alcove(a1);
  AdmissibleSet adm = admissible_set(a1, {Rat(2)}, C);

  json rows = admissible_rows_json(adm, C);
  REQUIRE(rows.size() == 5);
  size_t translations = 0;
  for (const auto& r : rows) translations += r.at("is_translation").get<bool>() ? 1 : 0;
  REQUIRE(translations == 2);

  std::string csv = admissible_rows_csv(adm, C);
  REQUIRE(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

  std::string dot = bruhat_dot(adm.elements, C);
  REQUIRE(dot.find("digraph") != std::string::npos);
  // Hasse diagram of the 5-element interval: e under s0,s1; each s under
  // both translations minus the equal-kappa constraint
  REQUIRE(std::count(dot.begin(), dot.end(), ';') >= 5);
}

TEST_CASE("good position report serialization") {
  auto rs = build_root_system('A', 1);
  Alcove C = fundamental_alcove(rs);
  Facet origin{{Rat(0)}};
  AffineElement s = linear_element(rs, simple_reflection(*rs, 0));
  GoodPositionReport rep = good_position_report(*rs, origin, {Rat(2)}, s, C);
  json j = to_json(rep, *rs);
  REQUIRE(j.at("len_t_lambda") == 2);
  REQUIRE(j.at("len_t_lambda_theta") == 1);
  REQUIRE(j.at("len_theta") == 1);
  REQUIRE(j.at("good_position_holds") == true);
  REQUIRE(j.at("length_additivity_holds") == true);
  // serialization is byte-stable
  REQUIRE(j.dump(2) == to_json(rep, *rs).dump(2));
}
