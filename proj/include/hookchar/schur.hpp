#pragma once

#include "hookchar/qpoly.hpp"
#include "hookchar/shapes.hpp"

#include <functional>
#include <map>
#include <set>
#include <string>

namespace hookchar {

/// Finite sum of Schur symbols s_lambda with LaurentPoly coefficients.
/// Invariant: no stored coefficient is zero.
class SchurExpansion {
 public:
  using TermMap = std::map<Partition, LaurentPoly>;

  SchurExpansion() = default;
  static SchurExpansion basis(const Partition& lambda, const LaurentPoly& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const LaurentPoly& c);

  SchurExpansion& operator+=(const SchurExpansion& o);
  SchurExpansion& operator-=(const SchurExpansion& o);
  SchurExpansion& operator*=(const LaurentPoly& c);
  friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
  friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a -= b; }
  friend SchurExpansion operator*(SchurExpansion a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) { return a.terms_ == b.terms_; }

  /// Every coefficient has nonnegative integer coefficients.
  bool schur_positive() const;

 private:
  TermMap terms_;
};

/// Partitions mu with lambda/mu a vertical strip of size k.
std::vector<Partition> remove_vertical_strips(const Partition& lambda, int k);

SchurExpansion e_perp(int k, const SchurExpansion& f);
SchurExpansion omega(const SchurExpansion& f);

/// Shape class used by restrict.
class ShapeClass {
 public:
  static ShapeClass hooks();
  /// At most one part; includes the empty partition.
  static ShapeClass one_part();
  /// (a, b, 1^k) with a >= b; v(1) is the hooks.
  static ShapeClass v(int b);
  /// (a, 2, 1^k), same as v(2).
  static ShapeClass two_columns();
  /// At most two parts.
  static ShapeClass two_rows();
  static ShapeClass explicit_set(std::set<Partition> shapes);
  /// Named class: hooks, one_part, V<b>, two-column, two_rows.
  static ShapeClass named(const std::string& name);

  bool contains(const Partition& lambda) const { return pred_(lambda); }
  const std::string& name() const { return name_; }

 private:
  ShapeClass(std::string name, std::function<bool(const Partition&)> pred)
      : name_(std::move(name)), pred_(std::move(pred)) {}
  std::string name_;
  std::function<bool(const Partition&)> pred_;
};

SchurExpansion restrict(const SchurExpansion& f, const ShapeClass& v);

/// s_lambda -> q^{lambda_1} t^{l(lambda)-1}; the empty partition is the
/// one-part shape (0) and maps to 1.
LaurentPoly psi(const SchurExpansion& f);
/// Inverse of psi on hook-supported integer expansions.
SchurExpansion psi_inverse_hooks(const LaurentPoly& p);

/// Evaluation of every s_lambda at two variables (q, t).
LaurentPoly specialize2(const SchurExpansion& f);
/// s_lambda(q, t) for a single shape.
LaurentPoly specialize2(const Partition& lambda);

/// Brute-force sum over semistandard fillings with entries 1..m, m <= 3,
/// mapping x1, x2, x3 to q, t, z.
LaurentPoly ssyt_specialize_oracle(const Partition& lambda, int m);

std::string to_string(const SchurExpansion& f);

}  // namespace hookchar
