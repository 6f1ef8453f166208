#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hookchar {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the index of the unit s_0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0-based; zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);
/// lambda_2 <= 1. The empty partition counts as a hook.
bool is_hook(const Partition& lambda);
/// (a, 1^k); a >= 1.
Partition make_hook(int a, int k);
/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Position of a cell: row 0 is the bottom row (French convention).
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

using DescentSet = std::vector<int>;  // sorted, distinct

/// Standard Young tableau stored as an entry -> cell map.
class StdTableau {
 public:
  StdTableau() = default;
  /// Rows listed bottom to top; validates shape and standardness.
  static StdTableau from_rows(const std::vector<std::vector<int>>& rows);

  const Partition& shape() const { return shape_; }
  int n() const { return static_cast<int>(cells_.size()); }
  /// Cell of entry e, 1 <= e <= n.
  const Cell& cell(int e) const { return cells_[static_cast<std::size_t>(e - 1)]; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const StdTableau& o) const { return cells_ == o.cells_; }
  auto operator<=>(const StdTableau& o) const { return cells_ <=> o.cells_; }

 private:
  friend StdTableau conjugate_tableau(const StdTableau&);
  friend std::vector<StdTableau> enumerate_syt(const Partition&, int);
  StdTableau(Partition shape, std::vector<Cell> cells) : shape_(std::move(shape)), cells_(std::move(cells)) {}

  Partition shape_;
  std::vector<Cell> cells_;
};

struct DescentStats {
  DescentSet set;
  int des = 0;
  int maj = 0;
};

DescentStats descent_stats(const StdTableau& tau);
StdTableau conjugate_tableau(const StdTableau& tau);

inline constexpr int kDefaultSytBound = 12;

/// All SYT of the given shape, lexicographic in the bottom-row-first reading.
std::vector<StdTableau> enumerate_syt(const Partition& lambda, int bound = kDefaultSytBound);

/// Unique hook SYT of size n with descent set S, shape (n-|S|, 1^{|S|}).
StdTableau hook_tableau_from_descents(const DescentSet& S, int n);

/// Subsets of {1..n-1} of size d, each sorted, in lexicographic order.
std::vector<DescentSet> subsets_of_size(int n_minus_1, int d);

std::string to_string(const Partition& lambda);
std::string to_string(const StdTableau& tau);
std::string to_string(const DescentSet& s);

}  // namespace hookchar
