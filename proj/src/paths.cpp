#include "hookchar/paths.hpp"

#include "hookchar/error.hpp"

#include <bit>

namespace hookchar {

namespace {

std::vector<Step> parse_word(std::string_view word) {
  std::vector<Step> steps;
  if (word == "eps") return steps;
  for (char ch : word) {
    if (ch == 'N')
      steps.push_back(Step::North);
    else if (ch == 'E')
      steps.push_back(Step::East);
    else
      throw ParseError("path word may only contain N and E, got '" + std::string(1, ch) + "'");
  }
  return steps;
}

}  // namespace

LatticePath::LatticePath(int n, int s, std::string_view word) { init(n, s, parse_word(word)); }

LatticePath::LatticePath(int n, int s, const std::vector<Step>& steps) { init(n, s, steps); }

void LatticePath::init(int n, int s, const std::vector<Step>& steps) {
  if (n < 2) throw DomainError("T_{n,s} is empty for n < 2");
  if (s < 0) throw DomainError("start height must be nonnegative");
  if (n - 2 > kMaxLength) throw LimitError("path length exceeds " + std::to_string(kMaxLength));
  n_ = n;
  clamped_ = s > n - 2;
  s_ = clamped_ ? n - 2 : s;
  len_ = n - s_ - 2;
  if (static_cast<int>(steps.size()) != len_)
    throw DomainError("path in T_{" + std::to_string(n) + "," + std::to_string(s) + "} must have length " +
                      std::to_string(len_) + ", got " + std::to_string(steps.size()));
  bits_ = 0;
  for (int i = 0; i < len_; ++i)
    if (steps[static_cast<std::size_t>(i)] == Step::East) bits_ |= std::uint64_t{1} << i;
}

std::vector<Step> LatticePath::steps() const {
  std::vector<Step> out;
  for (int i = 0; i < len_; ++i) out.push_back(step(i));
  return out;
}

std::string LatticePath::word() const {
  std::string w;
  for (int i = 0; i < len_; ++i) w += step(i) == Step::East ? 'E' : 'N';
  return w;
}

int LatticePath::num_east() const { return std::popcount(bits_); }

int LatticePath::area() const {
  int a = 0;
  for (int j = 0; j < s_; ++j) a += n_ - 2 - j;
  int x = 0;
  int y = s_;
  for (int i = 0; i < len_; ++i) {
    if (step(i) == Step::East) {
      ++x;
    } else {
      a += n_ - 2 - y - x;
      ++y;
    }
  }
  return a;
}

void LatticePath::check_grid(const LatticePath& o) const {
  if (n_ != o.n_ || s_ != o.s_)
    throw GridMismatch("comparing paths of T_{" + std::to_string(n_) + "," + std::to_string(s_) + "} and T_{" +
                       std::to_string(o.n_) + "," + std::to_string(o.s_) + "}");
}

bool LatticePath::operator==(const LatticePath& o) const {
  check_grid(o);
  return bits_ == o.bits_;
}

bool LatticePath::operator<(const LatticePath& o) const {
  check_grid(o);
  return word() < o.word();
}

std::vector<LatticePath> enumerate_T(int n, int s) {
  std::vector<LatticePath> out;
  if (n < 2) return out;
  int len = std::max(0, n - std::min(s, n - 2) - 2);
  if (len > LatticePath::kMaxLength) throw LimitError("enumerate_T: grid too large");
  std::vector<Step> steps(static_cast<std::size_t>(len));
  // Lexicographic in the word, N < E.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    for (int i = 0; i < len; ++i)
      steps[static_cast<std::size_t>(i)] = (mask >> (len - 1 - i)) & 1u ? Step::East : Step::North;
    out.emplace_back(n, s, steps);
  }
  return out;
}

LaurentPoly gf_T(int n, int s) {
  LaurentPoly r;
  for (const auto& g : enumerate_T(n, s)) r.add_term({g.area(), 0, g.ht()}, 1);
  return r;
}

LaurentPoly hat_gf(int n_plus_1, int j) {
  if (j < 0) throw DomainError("hat_gf: j must be nonnegative");
  LaurentPoly r;
  for (const auto& g : enumerate_T(n_plus_1, 0)) {
    int h = g.ht();
    if (h < j) continue;
    int e = j - h;
    Integer sign = (e % 2 == 0) ? 1 : -1;
    r.add_term({g.area() + e, 0, h + e}, sign);
  }
  return r;
}

bool PathPredicate::operator()(const LatticePath& g) const {
  switch (kind) {
    case Kind::HeightEq:
      return g.ht() == param;
    case Kind::AtLeastKEasts:
      return g.num_east() >= param;
    case Kind::StartsWithEast:
      return g.length() > 0 && g.step(0) == Step::East;
    case Kind::StartsNorthEndsExactNorths: {
      if (g.length() == 0 || g.step(0) != Step::North) return false;
      int tail = 0;
      while (tail < g.length() && g.step(g.length() - 1 - tail) == Step::North) ++tail;
      return tail == param;
    }
    case Kind::Prefix:
      return g.word().starts_with(pattern);
    case Kind::Suffix:
      return g.word().ends_with(pattern);
  }
  return false;
}

PathPredicate make_predicate(std::string_view name, int param, std::string_view pattern) {
  using K = PathPredicate::Kind;
  auto with = [&](K k) { return PathPredicate{k, param, std::string(pattern)}; };
  if (name == "height_eq") return with(K::HeightEq);
  if (name == "at_least_k_easts") return with(K::AtLeastKEasts);
  if (name == "starts_with_east") return with(K::StartsWithEast);
  if (name == "starts_north_ends_exact_norths") return with(K::StartsNorthEndsExactNorths);
  if (name == "prefix" || name == "suffix") {
    parse_word(pattern);
    return with(name == "prefix" ? K::Prefix : K::Suffix);
  }
  throw DomainError("unknown path predicate '" + std::string(name) + "'");
}

std::vector<LatticePath> filter_paths(int n, int s, const std::vector<PathPredicate>& preds) {
  std::vector<LatticePath> out;
  for (auto& g : enumerate_T(n, s)) {
    bool keep = true;
    for (const auto& p : preds) keep = keep && p(g);
    if (keep) out.push_back(std::move(g));
  }
  return out;
}

std::string to_string(const LatticePath& g) { return g.length() == 0 ? "eps" : g.word(); }

}  // namespace hookchar
