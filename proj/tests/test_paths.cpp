#include "hookchar/error.hpp"
#include "hookchar/paths.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace hookchar;

namespace {

// Cells (x, y) of the staircase x + y <= n - 3 lying right of the path:
// rows below the start height, and in each crossed row every cell at or
// right of the crossing column.
int area_oracle(int n, int s, const std::string& word) {
  std::map<int, int> crossing;
  int x = 0, y = std::min(s, n - 2);
  for (char c : word) {
    if (c == 'E') {
      ++x;
    } else {
      crossing[y] = x;
      ++y;
    }
  }
  int a = 0;
  for (int cy = 0; cy <= n - 3; ++cy)
    for (int cx = 0; cx + cy <= n - 3; ++cx) {
      if (cy < s)
        ++a;
      else if (crossing.count(cy) && cx >= crossing[cy])
        ++a;
    }
  return a;
}

}  // namespace

TEST_CASE("sample path in T_{7,2}") {
  LatticePath g(7, 2, "NEN");
  CHECK(g.area() == 13);
  CHECK(g.ht() == 4);
  CHECK(g.word() == "NEN");
  CHECK(g.num_east() == 1);
  CHECK(g.num_north() == 2);
}

TEST_CASE("enumeration sizes, order and statistics") {
  for (int n = 2; n <= 12; ++n)
    for (int s = 0; s <= n; ++s) {
      auto all = enumerate_T(n, s);
      int len = std::max(0, n - 2 - s);
      CHECK(all.size() == (std::size_t{1} << len));
      std::set<std::string> words;
      for (const auto& g : all) {
        words.insert(g.word());
        CHECK(g.area() == area_oracle(n, s, g.word()));
        CHECK(g.length() == len);
      }
      CHECK(words.size() == all.size());
    }
  auto t4 = enumerate_T(4, 0);
  CHECK(t4.front().word() == "NN");
  CHECK(t4.back().word() == "EE");
  CHECK(enumerate_T(1, 0).empty());
}

TEST_CASE("start heights above n-2 clamp to the empty path") {
  LatticePath g(6, 9, "");
  CHECK(g.clamped());
  CHECK(g.s() == 4);
  CHECK(g.length() == 0);
  CHECK(to_string(g) == "eps");
  CHECK(LatticePath(6, 4, "eps").word().empty());
  CHECK(g.area() == 4 + 3 + 2 + 1);
  CHECK(g.ht() == 4);
}

TEST_CASE("invalid paths") {
  CHECK_THROWS_AS(LatticePath(1, 0, ""), DomainError);
  CHECK_THROWS_AS(LatticePath(5, -1, "NNNN"), DomainError);
  CHECK_THROWS_AS(LatticePath(5, 0, "NN"), DomainError);
  CHECK_THROWS_AS(LatticePath(5, 0, "NXN"), ParseError);
  LatticePath a(5, 0, "NNE"), b(6, 1, "NNE");
  CHECK_THROWS_AS((void)(a < b), GridMismatch);
  CHECK_THROWS_AS((void)(a == b), GridMismatch);
}

TEST_CASE("shifting the start height shifts the statistics") {
  LatticePath big(10, 1, "NNEENEE"), small(9, 3, "ENEE");
  CHECK(big.ht() == small.ht());
  CHECK(big.area() == small.area() + 3);
  LatticePath big2(10, 1, "EEENEEN"), small2(7, 2, "EEN");
  CHECK(big2.ht() == small2.ht());
  CHECK(big2.area() == small2.area() + 3);
}

TEST_CASE("generating functions") {
  LaurentPoly z = LaurentPoly::z();
  LaurentPoly q = LaurentPoly::q();
  CHECK(gf_T(4, 0) == (1 + q * z) * (1 + q * q * z));
  CHECK(gf_T(2, 0) == LaurentPoly(1));
  CHECK(gf_T(5, 3) == LaurentPoly::monomial({6, 0, 3}));
  for (int n = 3; n <= 9; ++n) {
    LaurentPoly sum;
    for (int j = 0; j <= n - 2; ++j) sum += hat_gf(n, j);
    LaurentPoly brute;
    for (const auto& g : enumerate_T(n, 0))
      for (int j = 0; j <= g.ht(); ++j) {
        LaurentPoly term = LaurentPoly::monomial({g.area() + j - g.ht(), 0, j});
        brute += (g.ht() - j) % 2 ? -term : term;
      }
    CHECK(sum == brute);
  }
}

TEST_CASE("path predicates") {
  auto starts_e = make_predicate("starts_with_east");
  auto h2 = make_predicate("height_eq", 2);
  auto ends = make_predicate("starts_north_ends_exact_norths", 1);
  auto pre = make_predicate("prefix", 0, "NE");
  auto suf = make_predicate("suffix", 0, "ENN");
  auto easts = make_predicate("at_least_k_easts", 2);
  LatticePath g(7, 0, "NEENN");
  CHECK_FALSE(starts_e(g));
  CHECK(pre(g));
  CHECK(suf(g));
  CHECK_FALSE(ends(g));
  CHECK(ends(LatticePath(7, 0, "NNEEN")));
  CHECK(easts(g));
  CHECK_FALSE(h2(g));
  CHECK(filter_paths(6, 0, {starts_e, h2}).size() == 3);
  CHECK_THROWS_AS(make_predicate("bogus"), DomainError);
}
