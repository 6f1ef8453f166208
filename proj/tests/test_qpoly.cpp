#include "hookchar/error.hpp"
#include "hookchar/qpoly.hpp"

#include <doctest.h>

#include <random>

using namespace hookchar;

namespace {

// [n k]_q as the inversion generating function of 0/1 words with k ones.
LaurentPoly inversion_oracle(int n, int k) {
  LaurentPoly out;
  for (unsigned w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) != k) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (((w >> i) & 1u) && !((w >> j) & 1u)) ++inv;
    out += LaurentPoly::q(inv);
  }
  return out;
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-3, 4), coef(-5, 5), len(0, 4);
  LaurentPoly p;
  for (int i = len(rng); i > 0; --i) p.add_term({exp(rng), exp(rng), exp(rng)}, coef(rng));
  return p;
}

}  // namespace

TEST_CASE("gaussian binomial matches inversion counts") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(gauss_binomial(n, k) == inversion_oracle(n, k));
  CHECK(gauss_binomial(4, -1).is_zero());
  CHECK(gauss_binomial(4, 5).is_zero());
}

TEST_CASE("gaussian binomial at q=1 is the ordinary binomial") {
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) CHECK(gauss_binomial(n, k).at_one(Var::Q) == LaurentPoly(binom(n, k)));
}

TEST_CASE("q-integers, factorials and pochhammer") {
  CHECK(q_int(3) == 1 + LaurentPoly::q() + LaurentPoly::q(2));
  CHECK(q_int(0).is_zero());
  CHECK(q_factorial(3) == q_int(2) * q_int(3));
  LaurentPoly z = LaurentPoly::z();
  LaurentPoly prod = 1;
  for (int i = 1; i <= 5; ++i) prod *= 1 + z * LaurentPoly::q(i);
  CHECK(q_pochhammer(z, 5) == prod);
  CHECK(q_pochhammer(z, 0) == LaurentPoly(1));
  CHECK(q_pochhammer(z, 2, PochhammerForm::Falling) == (1 - z) * (1 - z * LaurentPoly::q()));
}

TEST_CASE("rendering") {
  LaurentPoly q = LaurentPoly::q();
  LaurentPoly z = LaurentPoly::z();
  CHECK(to_string(1 + q * z + LaurentPoly::q(2) * z) == "1 + q*z + q^2*z");
  CHECK(to_string(-q) == "-q");
  CHECK(to_string(LaurentPoly::q(3) * Integer(2)) == "2*q^3");
  CHECK(to_string(LaurentPoly::q(-2)) == "q^-2");
  CHECK(to_string(LaurentPoly()) == "0");
  CHECK(to_string(q - 1) == "-1 + q");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20190101);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    LaurentPoly sum = a + b;
    for (const auto& [m, coef] : sum.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("slices and specializations") {
  LaurentPoly p = LaurentPoly::monomial({2, 1, 0}, 3) + LaurentPoly::monomial({1, 0, 0}, -1) + LaurentPoly::t(2);
  CHECK(p.coefficient_of(Var::T, 1) == LaurentPoly::q(2) * Integer(3));
  CHECK(p.at_zero(Var::T) == -LaurentPoly::q());
  CHECK(p.at_one(Var::T) == LaurentPoly::q(2) * Integer(3) - LaurentPoly::q() + 1);
  CHECK_THROWS_AS(LaurentPoly::t(-1).at_zero(Var::T), DomainError);
  CHECK(p.has_var(Var::T));
  CHECK_FALSE(p.has_var(Var::Z));
  CHECK(p.max_q() == 2);
  CHECK(p.min_q() == 0);
  CHECK_FALSE(p.nonnegative());
}

TEST_CASE("substitution") {
  LaurentPoly g = gauss_binomial(4, 2);
  LaurentPoly inv = substitute(g, {{Var::Q, LaurentPoly::q(-1)}});
  CHECK(inv * LaurentPoly::q(4) == g);
  CHECK(rev_q(g) == g);
  CHECK(rev_q(1 + LaurentPoly::q() * Integer(2)) == LaurentPoly::q() + 2);
  LaurentPoly swapped = substitute(LaurentPoly::monomial({1, 2, 0}), {{Var::Q, LaurentPoly::t()}, {Var::T, LaurentPoly::q()}});
  CHECK(swapped == LaurentPoly::monomial({2, 1, 0}));
  CHECK_THROWS_AS(substitute(LaurentPoly::q(), {{Var::Q, 1 + LaurentPoly::t()}}), DomainError);
  CHECK_THROWS_AS(substitute(LaurentPoly::q(-1), {{Var::Q, LaurentPoly::t() * Integer(2)}}), DomainError);
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly p = pow(1 + LaurentPoly::q(), 80);
  CHECK(p.coefficient({40, 0, 0}) == Integer("107507208733336176461620"));
  CHECK(p.at_one(Var::Q) == LaurentPoly(pow(Integer(2), 80)));
}

TEST_CASE("binomial") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(0, 0) == 1);
}
