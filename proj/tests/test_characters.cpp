#include "hookchar/characters.hpp"
#include "hookchar/error.hpp"
#include "hookchar/fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hookchar;

namespace {

SchurExpansion s(const Partition& l) { return SchurExpansion::basis(l); }

SchurExpansion hf(const Partition& mu, int r = 1) { return hook_formula({mu.size(), r, mu}).expansion; }

bool contains(const DescentSet& d, int x) { return std::binary_search(d.begin(), d.end(), x); }

// Sum over k of (h_k - g_k) t^k, with h_k from hook tableaux and g_k from
// height slices of T_{n,0}.
LaurentPoly two_column_psi_oracle(int n) {
  LaurentPoly out;
  for (int k = 0; k <= n - 3; ++k) {
    LaurentPoly h, g;
    for (const auto& tau : enumerate_syt(make_hook(k + 1, n - k - 1))) {
      DescentStats d = descent_stats(tau);
      if (contains(d.set, 1) && contains(d.set, 2)) h += LaurentPoly::q(d.maj - d.des);
      if (contains(d.set, 1))
        for (int i = 2; i <= n - k - 2; ++i) h += LaurentPoly::q(d.maj - i);
    }
    for (const auto& gam : enumerate_T(n, 0))
      if (gam.ht() == n - k - 3) g += LaurentPoly::q(gam.area() + gam.ht() + 1);
    out += (h - g) * LaurentPoly::t(k);
  }
  return out;
}

}  // namespace

TEST_CASE("n = 4 values") {
  CHECK(hf({1, 1, 1, 1}) == s({6}) + s({4, 1}) + s({3, 1}) + s({1, 1, 1}));
  CHECK(hf({3, 1}) == s({1}) + s({2}) + s({3}));
  CHECK(hf({4}) == s({}));
  CHECK(hook_formula({4, 1, {1, 1, 1, 1}}).proven);
  CHECK(hook_formula({4, 1, {2, 1, 1}}).proven);
  CHECK_FALSE(hook_formula({4, 1, {2, 2}}).proven);
  CHECK_FALSE(hook_formula({4, 2, {1, 1, 1, 1}}).proven);
}

TEST_CASE("stored n = 4 pairings agree with the hook formula") {
  Fixture fx = load_fixture(std::string(HOOKCHAR_TEST_DATA) + "/e44.json");
  CHECK(fx.n == 4);
  CHECK(fx.pairings.size() == 5);
  for (const auto& [mu, expansion] : fx.pairings) CHECK(hf(mu) == expansion);
}

TEST_CASE("hook formula input checks") {
  CHECK_THROWS_AS(hook_formula({5, 1, {2, 2}}), DomainError);
  CHECK_THROWS_AS(hook_formula({1, 1, {1}}), DomainError);
  CHECK_THROWS_AS(hook_formula({3, 0, {2, 1}}), DomainError);
  LatticePath g(5, 0, "EEE");
  CHECK(path_hook(5, 1, g, 0) == Partition{1, 1, 1, 1});
  CHECK(path_hook(4, 1, LatticePath(4, 2, ""), 6) == Partition{});
  try {
    path_hook(5, 1, g, 3);
    FAIL("expected an arm error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("EEE") != std::string::npos);
  }
}

TEST_CASE("alternant formula is the column case") {
  for (int n = 2; n <= 8; ++n) {
    Partition column = conjugate(Partition{n});
    CHECK(alternant_formula(n, 1) == hf(column));
    CHECK(alternant_formula(n, 2) == hf(column, 2));
  }
  CHECK(alternant_formula(3, 1) == s({3}) + s({1, 1}));
}

TEST_CASE("higher r shifts every arm by (r-1)C(n,2)") {
  for (int n = 3; n <= 6; ++n) {
    SchurExpansion f = hf(conjugate(Partition{n}), 3);
    for (const auto& [l, c] : f.terms()) CHECK(l[0] >= 2 * static_cast<int>(binom(n, 2)));
  }
}

TEST_CASE("one-part shadows of the alternant formula") {
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r <= 2; ++r) {
      SchurExpansion A = alternant_formula(n, r);
      for (int j = 0; j <= n - 1; ++j) {
        LaurentPoly shadow = psi(restrict(e_perp(j, A), ShapeClass::one_part()));
        CHECK(shadow == f_one_part(n, r, j));
      }
    }
}

TEST_CASE("two-row formulas") {
  for (int n = 3; n <= 7; ++n) {
    Partition column = conjugate(Partition{n});
    CHECK(gl2_delta_en(n, n - 1) == gl2_nabla_hooks(n, 1, column));
    for (int a = n; a >= 1; --a) {
      Partition mu = make_hook(a, n - a);
      CHECK(restrict(hf(mu), ShapeClass::two_rows()) == gl2_nabla_hooks(n, 1, mu));
    }
  }
  CHECK_THROWS_AS(gl2_nabla_hooks(4, 1, {2, 2}), DomainError);
  CHECK_THROWS_AS(gl2_delta_en(4, 4), DomainError);
}

TEST_CASE("t = 0 oracle") {
  CHECK(hrs_t0(1, 0) == s({1}));
  CHECK_THROWS_AS(hrs_t0(10, 0), LimitError);
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      LaurentPoly lhs = specialize2(hf(mu)).at_zero(Var::T);
      CHECK(lhs == hrs_t0(n, 0).coefficient(mu));
    }
}

TEST_CASE("two-column formulas") {
  CHECK(two_column_formula(5, TwoColumnForm::Path) == s({6, 2}) + s({4, 2}));
  for (int n = 5; n <= 8; ++n) {
    SchurExpansion path = two_column_formula(n, TwoColumnForm::Path);
    CHECK(two_column_formula(n, TwoColumnForm::Lifted) == path);
    CHECK(psi(path) == two_column_psi_oracle(n));
    CHECK(lift_next_column(alternant_formula(n, 1) + path, 1) == psi(path));
  }
  CHECK(two_column_formula(4, TwoColumnForm::Path).is_zero());
  CHECK(lift_next_column(alternant_formula(6, 1), 1).is_zero());
}

TEST_CASE("alternating identities") {
  for (int n = 3; n <= 8; ++n)
    for (AltVariant v : {AltVariant::AltPos, AltVariant::Nulle, AltVariant::Somme, AltVariant::SommeAirHt})
      CHECK(alternating_identity_check(n, 0, v));
  GFamily bad = [](int j, int k) { return binom(j + k + 1, 2) + k; };
  CHECK_THROWS_AS(alternating_identity_check(6, bad, AltVariant::Nulle), DomainError);
  GFamily drifting = [](int j, int k) { return binom(j + k + 1, 2) + j * j; };
  CHECK_THROWS_AS(alternating_identity_check(6, drifting, AltVariant::Somme), DomainError);
  for (AltVariant v : {AltVariant::AltPos, AltVariant::Nulle, AltVariant::Somme, AltVariant::SommeAirHt})
    CHECK(parse_alt_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_alt_variant("pos"), DomainError);
}
