#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>

namespace hookchar {

using Integer = boost::multiprecision::cpp_int;

/// Exponent triple of a monomial q^q t^t z^z. Ordered lexicographically.
struct Monomial {
  int q = 0;
  int t = 0;
  int z = 0;
  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const { return {q + o.q, t + o.t, z + o.z}; }
};

enum class Var { Q, T, Z };

/// Sparse Laurent polynomial in q, t, z over the integers.
/// Invariant: no stored coefficient is zero.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(Monomial m, const Integer& c = 1);
  static LaurentPoly q(int e = 1) { return monomial({e, 0, 0}); }
  static LaurentPoly t(int e = 1) { return monomial({0, e, 0}); }
  static LaurentPoly z(int e = 1) { return monomial({0, 0, e}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_var(Var v) const;
  int max_q() const;
  int min_q() const;

  /// Adds c*m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Slice of terms with the given exponent of v, as a polynomial.
  LaurentPoly coefficient_of(Var v, int e) const;
  /// Result of setting v to 1 (q=1 specialization and friends).
  LaurentPoly at_one(Var v) const;
  /// Result of setting v to 0; rejects negative exponents of v.
  LaurentPoly at_zero(Var v) const;
  /// Whether every coefficient is >= 0.
  bool nonnegative() const;

 private:
  TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned e);

/// Simultaneous substitution. Each image must be a single term; a negative
/// power of an image requires its coefficient to be +1 or -1.
LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& rules);

/// p(1/q) * q^deg_q(p). Only q may occur, with nonnegative exponents.
LaurentPoly rev_q(const LaurentPoly& p);

LaurentPoly q_int(int n);
LaurentPoly q_factorial(int n);
/// [n k]_q; zero when k < 0 or k > n.
LaurentPoly gauss_binomial(int n, int k);

enum class PochhammerForm { Rising, Falling };

/// Rising: prod_{i=1}^{m} (1 + x q^i). Falling: prod_{i=0}^{m-1} (1 - x q^i).
LaurentPoly q_pochhammer(const LaurentPoly& x, int m, PochhammerForm form = PochhammerForm::Rising);

long long binom(long long n, long long k);

std::string to_string(const LaurentPoly& p);

}  // namespace hookchar
