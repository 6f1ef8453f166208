#include "hookchar/pierimaps.hpp"

#include "hookchar/characters.hpp"
#include "hookchar/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookchar {

namespace {

bool has(const DescentSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

int min_or(const DescentSet& s, int fallback) { return s.empty() ? fallback : s.front(); }

DescentSet without(const DescentSet& s, int x) {
  DescentSet out;
  for (int v : s)
    if (v != x) out.push_back(v);
  return out;
}

// Inserts with set semantics; a repeat is a construction bug.
void insert_distinct(DescentSet& s, int x) {
  if (has(s, x)) throw std::logic_error("descent " + std::to_string(x) + " produced twice");
  s.insert(std::upper_bound(s.begin(), s.end(), x), x);
}

DescentSet complement(const DescentSet& s, int n) {
  DescentSet out;
  for (int i = 1; i <= n - 1; ++i)
    if (!has(s, i)) out.push_back(i);
  return out;
}

std::vector<Step> repeat(Step st, int m) { return std::vector<Step>(static_cast<std::size_t>(std::max(m, 0)), st); }

void append(std::vector<Step>& a, const std::vector<Step>& b) { a.insert(a.end(), b.begin(), b.end()); }

void require_hook_shape(const StdTableau& tau, int k, const char* what) {
  int n = tau.n();
  if (tau.shape() != make_hook(k + 1, n - k - 1))
    throw DomainError(std::string(what) + ": tableau shape must be (" + std::to_string(k + 1) + ",1^" +
                      std::to_string(n - k - 1) + "), got " + to_string(tau.shape()));
}

// Path in T_{n,0} from the counts of east steps before each north step.
LatticePath path_from_north_positions(int n, const std::vector<int>& ni) {
  std::vector<Step> steps;
  int prev = 0;
  for (int c : ni) {
    if (c < prev) throw DomainError("descent set does not come from a path");
    append(steps, repeat(Step::East, c - prev));
    steps.push_back(Step::North);
    prev = c;
  }
  int rest = n - 2 - static_cast<int>(steps.size());
  if (rest < 0) throw DomainError("descent set does not come from a path");
  append(steps, repeat(Step::East, rest));
  return LatticePath(n, 0, steps);
}

}  // namespace

bool TaggedPath::operator<(const TaggedPath& o) const {
  if (tableau != o.tableau) return tableau < o.tableau;
  return path < o.path;
}

TaggedPath make_tagged(const DescentSet& conj_descents, const LatticePath& path) {
  int n = path.n();
  int k = static_cast<int>(conj_descents.size());
  if (path.s() != std::min(k, n - 2))
    throw DomainError("tagged path must live in T_{n," + std::to_string(k) + "}, got start " +
                      std::to_string(path.s()));
  StdTableau conj = hook_tableau_from_descents(conj_descents, n);
  return TaggedPath{conjugate_tableau(conj), path};
}

Partition tagged_hook(const TaggedPath& x) { return path_hook(x.n(), 1, x.path, x.conj_stats().maj); }

PathStats path_stats(const LatticePath& g) {
  PathStats st;
  int north = 0;
  int east = 0;
  bool seen_north = false;
  for (Step s : g.steps()) {
    if (s == Step::East) {
      st.p.push_back(north);
      ++east;
      if (!seen_north) ++st.h;
    } else {
      st.n_steps.push_back(east);
      ++north;
      seen_north = true;
    }
  }
  return st;
}

int leading_norths(const LatticePath& g) {
  int j = 0;
  while (j < g.length() && g.step(j) == Step::North) ++j;
  return j;
}

int leading_easts(const LatticePath& g) {
  int r = 0;
  while (r < g.length() && g.step(r) == Step::East) ++r;
  return r;
}

TaggedPath e_plus_map(int k, const LatticePath& g) {
  int n = g.n();
  if (g.s() != 0) throw DomainError("e_plus_map acts on T_{n,0}");
  if (k < 0 || k > n - 2) throw DomainError("e_plus_map needs 0 <= k <= n-2");
  if (g.num_east() < k)
    throw DomainError("e_plus_map: path " + to_string(g) + " has fewer than " + std::to_string(k) + " east steps");
  PathStats st = path_stats(g);
  DescentSet des;
  for (int i = 1; i <= k; ++i) insert_distinct(des, n - i - st.p[static_cast<std::size_t>(i - 1)]);
  std::vector<Step> rest;
  int dropped = 0;
  for (Step s : g.steps()) {
    if (s == Step::East && dropped < k) {
      ++dropped;
      continue;
    }
    rest.push_back(s);
  }
  return make_tagged(des, LatticePath(n, k, rest));
}

TaggedPath e_minus_map(int k, const LatticePath& g) {
  int n = g.n();
  if (g.s() != 0) throw DomainError("e_minus_map acts on T_{n,0}");
  if (k < 1 || k > n - 2) throw DomainError("e_minus_map needs 1 <= k <= n-2");
  if (g.num_east() < k - 1)
    throw DomainError("e_minus_map: path " + to_string(g) + " has fewer than " + std::to_string(k - 1) +
                      " east steps");
  if (g.num_north() == 0) throw DomainError("e_minus_map is not defined on E^{n-2}");
  PathStats st = path_stats(g);
  DescentSet des;
  for (int i = 1; i <= k - 1; ++i) insert_distinct(des, n - i - st.p[static_cast<std::size_t>(i - 1)]);
  insert_distinct(des, std::max(1, st.h - k + 2));
  std::vector<Step> rest;
  int dropped = 0;
  bool north_dropped = false;
  for (Step s : g.steps()) {
    if (s == Step::East && dropped < k - 1) {
      ++dropped;
      continue;
    }
    if (s == Step::North && !north_dropped) {
      north_dropped = true;
      continue;
    }
    rest.push_back(s);
  }
  return make_tagged(des, LatticePath(n, k, rest));
}

PieriSets build_sets(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2) throw DomainError("build_sets needs 0 <= k <= n-2");
  PieriSets sets;
  std::vector<int> top;  // {n-k+1, ..., n-1}
  for (int x = n - k + 1; x <= n - 1; ++x) top.push_back(x);
  for (const DescentSet& dc : subsets_of_size(n - 1, k)) {
    int d = min_or(dc, n);
    int d2 = min_or(without(dc, 1), n);
    bool one = has(dc, 1);
    bool top_in = std::includes(dc.begin(), dc.end(), top.begin(), top.end());
    for (const auto& g : enumerate_T(n, k)) {
      TaggedPath x = make_tagged(dc, g);
      int j = leading_norths(g);
      int r = leading_easts(g);
      bool n_then_e = j < g.length();
      bool plus = j >= n - k - d;
      bool in_v = one ? j >= std::max(0, n - k - d2) : (top_in && r + 1 >= d);
      if (plus) {
        sets.tplus.push_back(x);
      } else {
        sets.tminus.push_back(x);
        (in_v ? sets.v : sets.w).push_back(x);
      }
      bool w1 = !one && r >= 1 && 1 < r + 1 && r + 1 < d && d < n - k;
      bool w2 = !one && !top_in && r >= 1 && r + 1 >= d;
      bool w3 = one && n_then_e && j < n - k - d2;
      bool w4 = !one && n_then_e && 0 < j && j < n - k - d;
      if (w1 || w2 || w3 || w4) sets.w_display.push_back(x);
    }
  }
  for (auto* s : {&sets.tplus, &sets.tminus, &sets.v, &sets.w, &sets.w_display}) std::sort(s->begin(), s->end());
  return sets;
}

SchurExpansion sum_hooks(const std::vector<TaggedPath>& xs) {
  SchurExpansion f;
  for (const auto& x : xs) f.add(tagged_hook(x), 1);
  return f;
}

SchurExpansion perp_via_paths(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2) throw DomainError("perp_via_paths needs 0 <= k <= n-2");
  SchurExpansion f;
  for (const auto& g : enumerate_T(n, 0)) {
    if (g.num_east() >= k) f.add(tagged_hook(e_plus_map(k, g)), 1);
    if (k >= 1 && g.num_east() >= k - 1 && g.num_north() > 0) f.add(tagged_hook(e_minus_map(k, g)), 1);
  }
  return f;
}

namespace {

void add_if_valid(SchurExpansion& f, int arm, int legs) {
  if (arm >= 1 && legs >= 0) f.add(make_hook(arm, legs), 1);
}

SchurExpansion reindexed(int n, int k, DifferenceReading reading) {
  SchurExpansion f;
  std::vector<int> top;
  for (int x = n - k + 1; x <= n - 1; ++x) top.push_back(x);
  auto shape1 = [&](int maj, int r) {
    for (const auto& g : enumerate_T(n - r, k + 1))
      add_if_valid(f, g.area() + g.ht() + 1 - maj + k * r, n - 2 - g.ht());
  };
  auto shape2 = [&](int maj, int j) {
    for (const auto& g : enumerate_T(n - 1, j + k))
      add_if_valid(f, g.area() + g.ht() + 1 - maj + j + k, n - 2 - g.ht());
  };
  for (const DescentSet& dc : subsets_of_size(n - 1, k)) {
    DescentSet des = complement(dc, n);
    int maj = 0;
    for (int x : dc) maj += x;
    int d = min_or(dc, n);
    int d2 = min_or(without(dc, 1), n);
    bool cond = reading == DifferenceReading::AsPrinted ? has(des, 1) : has(dc, 1);
    bool top_in = std::includes(dc.begin(), dc.end(), top.begin(), top.end());
    if (cond && d < n - k) {
      for (int r = 1; r <= d - 2; ++r) shape1(maj, r);
      for (int j = 1; j <= n - k - 1 - d; ++j) shape2(maj, j);
    }
    if (cond && !top_in)
      for (int r = d - 1; r <= n - k - 2; ++r)
        if (r >= 1) shape1(maj, r);
    if (!cond)
      for (int j = 0; j <= n - k - 1 - d2; ++j) shape2(maj, j);
  }
  return f;
}

}  // namespace

SchurExpansion difference_k1_display(int n) {
  SchurExpansion f;
  for (int m = 2; m <= n - 2; ++m) {
    for (int r = 1; r <= m - 2; ++r)
      for (const auto& g : enumerate_T(n - r, 2)) add_if_valid(f, g.area() + g.ht() + 1 - m + r, n - 2 - g.ht());
    for (int j = 1; j <= n - 2 - m; ++j)
      for (const auto& g : enumerate_T(n - 1, j + 1))
        add_if_valid(f, g.area() + g.ht() + 2 - m + j, n - 2 - g.ht());
  }
  return f;
}

SchurExpansion difference_W(int n, int k, DifferenceForm form, DifferenceReading reading) {
  if (n < 3 || k < 1 || k > n - 2) throw DomainError("difference_W needs 1 <= k <= n-2");
  if (form == DifferenceForm::Direct) return sum_hooks(build_sets(n, k).w);
  return reindexed(n, k, reading);
}

DifferenceReport difference_W_report(int n, int k) {
  if (n < 3 || k < 1 || k > n - 2) throw DomainError("difference_W needs 1 <= k <= n-2");
  DifferenceReport rep;
  rep.n = n;
  rep.k = k;
  PieriSets sets = build_sets(n, k);
  rep.direct = sum_hooks(sets.w);
  rep.tminus_minus_v = sum_hooks(sets.tminus) - sum_hooks(sets.v);
  rep.as_printed = reindexed(n, k, DifferenceReading::AsPrinted);
  rep.conjugate = reindexed(n, k, DifferenceReading::Conjugate);
  if (k == 1) rep.k1_display = difference_k1_display(n);
  return rep;
}

StdTableau phi_map(int k, const LatticePath& g) {
  int n = g.n();
  int h = n - k - 3;
  if (g.s() != 0 || h < 0 || g.ht() != h || g.length() == 0 || g.step(0) != Step::East)
    throw DomainError("phi_map: path must start with E in T_{n,0} and have height n-k-3");
  PathStats st = path_stats(g);
  DescentSet des{1, 2};
  for (int i = 1; i <= h; ++i) insert_distinct(des, n - i - st.n_steps[static_cast<std::size_t>(i - 1)] + 1);
  return hook_tableau_from_descents(des, n);
}

LatticePath phi_inverse(int k, const StdTableau& tau) {
  int n = tau.n();
  require_hook_shape(tau, k, "phi_inverse");
  DescentSet des = descent_stats(tau).set;
  if (!has(des, 1) || !has(des, 2)) throw DomainError("phi_inverse: descent set must contain 1 and 2");
  DescentSet rest = without(without(des, 1), 2);
  std::vector<int> ni;
  for (int i = 1; i <= static_cast<int>(rest.size()); ++i) ni.push_back(n + 1 - i - rest[rest.size() - static_cast<std::size_t>(i)]);
  LatticePath g = path_from_north_positions(n, ni);
  if (g.length() == 0 || g.step(0) != Step::East) throw DomainError("phi_inverse: tableau is not in the image");
  return g;
}

StdTableau omega_map(int k, int j, const LatticePath& g) {
  int n = g.n();
  int h = n - k - 3;
  bool ok = g.s() == 0 && h >= 0 && g.ht() == h && j >= 0 && j <= h &&
            make_predicate("starts_north_ends_exact_norths", j)(g);
  if (!ok) throw DomainError("omega_map: path must start with N, end with exactly j norths and have height n-k-3");
  PathStats st = path_stats(g);
  DescentSet des;
  for (int i = 1; i <= h; ++i) insert_distinct(des, n - i - st.n_steps[static_cast<std::size_t>(i - 1)]);
  insert_distinct(des, 1);
  insert_distinct(des, j + 2);
  return hook_tableau_from_descents(des, n);
}

LatticePath omega_inverse(int k, int j, const StdTableau& tau) {
  int n = tau.n();
  require_hook_shape(tau, k, "omega_inverse");
  DescentSet des = descent_stats(tau).set;
  for (int x = 1; x <= j + 2; ++x)
    if (!has(des, x)) throw DomainError("omega_inverse: descent set must contain 1..j+2");
  if (!has(des, n - 1)) throw DomainError("omega_inverse: descent set must contain n-1");
  DescentSet rest = without(without(des, 1), j + 2);
  std::vector<int> ni;
  for (int i = 1; i <= static_cast<int>(rest.size()); ++i) ni.push_back(n - i - rest[rest.size() - static_cast<std::size_t>(i)]);
  LatticePath g = path_from_north_positions(n, ni);
  if (!make_predicate("starts_north_ends_exact_norths", j)(g))
    throw DomainError("omega_inverse: tableau is not in the image");
  return g;
}

LatticePath beta_map(int d, const StdTableau& tau) {
  int n = tau.n();
  require_hook_shape(tau, d, "beta_map");
  DescentSet r = descent_stats(tau).set;
  if (!has(r, 1)) throw DomainError("beta_map: 1 must be a descent");
  std::vector<Step> steps = repeat(Step::East, n - 1 - r.back());
  for (std::size_t i = r.size() - 1; i >= 1; --i) {
    steps.push_back(Step::North);
    append(steps, repeat(Step::East, r[i] - r[i - 1] - 1));
  }
  return LatticePath(n, 0, steps);
}

StdTableau beta_inverse(int d, const LatticePath& g) {
  int n = g.n();
  if (g.s() != 0 || g.ht() != n - d - 2) throw DomainError("beta_inverse: path must have height n-d-2 in T_{n,0}");
  // Blocks of east steps between north steps, read back to front.
  std::vector<int> blocks{0};
  for (Step s : g.steps()) {
    if (s == Step::North)
      blocks.push_back(0);
    else
      blocks.back()++;
  }
  DescentSet r{1};
  for (std::size_t i = blocks.size() - 1; i >= 1; --i) r.push_back(r.back() + blocks[i] + 1);
  if (r.back() != n - 1 - blocks[0]) throw std::logic_error("beta_inverse: block lengths do not add up");
  return hook_tableau_from_descents(r, n);
}

}  // namespace hookchar
