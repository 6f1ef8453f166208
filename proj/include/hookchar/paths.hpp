#pragma once

#include "hookchar/qpoly.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hookchar {

enum class Step : std::uint8_t { North, East };

/// North-east path in the (n-2)-staircase starting at (0, s).
/// Invariant: length = n - s - 2, with s clamped to n - 2 when larger.
class LatticePath {
 public:
  static constexpr int kMaxLength = 62;

  LatticePath() = default;
  /// Word over {N, E}; "" or "eps" is the empty word.
  LatticePath(int n, int s, std::string_view word);
  LatticePath(int n, int s, const std::vector<Step>& steps);

  int n() const { return n_; }
  int s() const { return s_; }
  /// True when the requested start height exceeded n - 2.
  bool clamped() const { return clamped_; }
  int length() const { return len_; }
  Step step(int i) const { return (bits_ >> i) & 1u ? Step::East : Step::North; }
  std::vector<Step> steps() const;
  std::string word() const;

  int num_east() const;
  int num_north() const { return len_ - num_east(); }
  int ht() const { return s_ + num_north(); }
  int area() const;

  /// Throws GridMismatch when the ambient (n, s) differ.
  bool operator==(const LatticePath& o) const;
  bool operator<(const LatticePath& o) const;

 private:
  void init(int n, int s, const std::vector<Step>& steps);
  void check_grid(const LatticePath& o) const;

  int n_ = 2;
  int s_ = 0;
  bool clamped_ = false;
  int len_ = 0;
  std::uint64_t bits_ = 0;  // bit i set iff step i is East
};

/// All paths of T_{n,s}; {eps} when s >= n - 2, empty when n < 2.
std::vector<LatticePath> enumerate_T(int n, int s);

/// Sum of q^area z^ht over T_{n,s}.
LaurentPoly gf_T(int n, int s);

/// Sum over paths of T_{n_plus_1,0} with ht >= j of (-qz)^{j-ht} q^area z^ht.
LaurentPoly hat_gf(int n_plus_1, int j);

struct PathPredicate {
  enum class Kind {
    HeightEq,
    AtLeastKEasts,
    StartsWithEast,
    StartsNorthEndsExactNorths,
    Prefix,
    Suffix,
  };
  Kind kind;
  int param = 0;
  std::string pattern;

  bool operator()(const LatticePath& g) const;
};

/// Builds a predicate from its name: height_eq, at_least_k_easts,
/// starts_with_east, starts_north_ends_exact_norths, prefix, suffix.
PathPredicate make_predicate(std::string_view name, int param = 0, std::string_view pattern = {});

/// Paths of T_{n,s} satisfying every predicate.
std::vector<LatticePath> filter_paths(int n, int s, const std::vector<PathPredicate>& preds);

std::string to_string(const LatticePath& g);

}  // namespace hookchar
