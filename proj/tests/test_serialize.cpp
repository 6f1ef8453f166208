#include "hookchar/characters.hpp"
#include "hookchar/error.hpp"
#include "hookchar/fixtures.hpp"
#include "hookchar/serialize.hpp"

#include <doctest.h>

#include <fstream>

using namespace hookchar;

TEST_CASE("JSON round trips") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      SchurExpansion f = hook_formula({n, 1, mu}).expansion;
      CHECK(expansion_from_json(Json::parse(to_json(f).dump())) == f);
      LaurentPoly p = specialize2(f) * LaurentPoly::monomial({-1, 2, 3}, -7);
      CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
      CHECK(partition_from_json(to_json(mu)) == mu);
      for (const auto& tau : enumerate_syt(mu)) CHECK(tableau_from_json(to_json(tau)) == tau);
    }
  for (int s = 0; s <= 4; ++s)
    for (const auto& g : enumerate_T(6, s)) CHECK(path_from_json(to_json(g)) == g);
  LaurentPoly huge = pow(LaurentPoly(1) + LaurentPoly::q(), 90);
  CHECK(poly_from_json(to_json(huge)) == huge);
}

TEST_CASE("expansion JSON layout") {
  SchurExpansion f = SchurExpansion::basis({2}) + SchurExpansion::basis({3});
  CHECK(to_json(f).dump() ==
        R"({"terms":[{"lambda":[3],"coeff":[{"q":0,"t":0,"z":0,"c":"1"}]},{"lambda":[2],"coeff":[{"q":0,"t":0,"z":0,"c":"1"}]}]})");
  CHECK(to_json(LatticePath(5, 3, "")).dump() == R"({"n":5,"s":3,"word":"eps"})");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_partition("3,x"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
  CHECK(parse_tableau("1,2,4/3") == StdTableau::from_rows({{1, 2, 4}, {3}}));
  CHECK_THROWS_AS(parse_tableau("1,2/4/3"), ParseError);
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"({"a":1})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"q":0,"t":0,"z":0,"c":"1x"}])")), ParseError);
  CHECK_THROWS_AS(expansion_from_json(Json::parse(R"({"terms":[{"lambda":[1,2],"coeff":[]}]})")), ParseError);
  CHECK_THROWS_AS(path_from_json(Json::parse(R"({"n":5,"s":0,"word":"N"})")), DomainError);
}

TEST_CASE("fixture checksum") {
  Fixture fx = load_fixture(default_fixture_path());
  Json doc = fixture_document(fx);
  CHECK(fixture_from_document(doc).pairings == fx.pairings);
  Json tampered = doc;
  tampered["payload"]["pairings"][1]["expansion"]["terms"][0]["coeff"][0]["c"] = "2";
  CHECK_THROWS_AS(fixture_from_document(tampered), ChecksumError);
  CHECK_THROWS_AS(fixture_from_document(Json::parse(R"({"payload":{}})")), ParseError);
  CHECK_THROWS_AS(load_fixture("/nonexistent/e44.json"), IoError);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
