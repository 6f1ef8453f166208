#include "hookchar/characters.hpp"

#include "hookchar/error.hpp"

#include <algorithm>

namespace hookchar {

namespace {

int c2(int n) { return static_cast<int>(binom(n, 2)); }

void require_partition_of(const Partition& mu, int n) {
  if (mu.size() != n)
    throw DomainError("partition " + to_string(mu) + " is not a partition of " + std::to_string(n));
}

// Arm 0 with no legs is the unit; otherwise the arm must be positive.
Partition hook_or_unit(int a, int k) {
  if (a == 0 && k == 0) return {};
  return make_hook(a, k);
}

bool contains(const DescentSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

bool hook_formula_proven(const HookFormulaInput& in) {
  if (in.r != 1) return false;
  int n = in.n;
  const Partition& mu = in.mu;
  if (mu == Partition{n} || mu == conjugate(Partition{n})) return true;
  if (n >= 2 && mu == Partition({n - 1, 1})) return true;
  if (n >= 3 && mu == Partition({n - 2, 1, 1})) return true;
  return false;
}

Partition path_hook(int n, int r, const LatticePath& g, int maj_conj) {
  int arm = (r - 1) * c2(n) + g.area() + g.ht() - maj_conj + 1;
  int legs = n - 2 - g.ht();
  if (arm == 0 && legs == 0) return {};
  if (arm < 1)
    throw DomainError("hook arm " + std::to_string(arm) + " < 1 for path " + to_string(g) + " in T_{" +
                      std::to_string(g.n()) + "," + std::to_string(g.s()) + "}");
  return make_hook(arm, legs);
}

HookFormulaResult hook_formula(const HookFormulaInput& in) {
  if (in.n < 2) throw DomainError("hook_formula needs n >= 2");
  if (in.r < 1) throw DomainError("hook_formula needs r >= 1");
  require_partition_of(in.mu, in.n);
  HookFormulaResult res;
  res.proven = hook_formula_proven(in);
  for (const auto& tau : enumerate_syt(in.mu)) {
    DescentStats dc = descent_stats(conjugate_tableau(tau));
    for (const auto& g : enumerate_T(in.n, dc.des)) {
      try {
        res.expansion.add(path_hook(in.n, in.r, g, dc.maj), 1);
      } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " with tableau " + to_string(tau));
      }
    }
  }
  return res;
}

SchurExpansion alternant_formula(int n, int r) {
  if (n < 2) throw DomainError("alternant_formula needs n >= 2");
  if (r < 1) throw DomainError("alternant_formula needs r >= 1");
  SchurExpansion f;
  for (const auto& g : enumerate_T(n, 0))
    f.add(make_hook((r - 1) * c2(n) + g.area() + g.ht() + 1, n - 2 - g.ht()), 1);
  return f;
}

SchurExpansion gl2_nabla_hooks(int n, int r, const Partition& mu) {
  require_partition_of(mu, n);
  if (!is_hook(mu)) throw DomainError("gl2_nabla_hooks needs a hook, got " + to_string(mu));
  SchurExpansion f;
  for (const auto& tau : enumerate_syt(mu)) {
    DescentStats d = descent_stats(tau);
    int base = r * c2(n) - descent_stats(conjugate_tableau(tau)).maj;
    f.add(hook_or_unit(base, 0), 1);
    for (int i = 2; i <= d.des; ++i) f.add(make_hook(base - i, 1), 1);
  }
  return f;
}

SchurExpansion gl2_delta_en(int n, int k) {
  if (k < 0 || k > n - 1) throw DomainError("gl2_delta_en needs 0 <= k <= n-1");
  SchurExpansion f;
  for (const auto& tau : enumerate_syt(make_hook(n - k, k))) {
    int maj = descent_stats(tau).maj;
    f.add(hook_or_unit(maj, 0), 1);
    for (int i = 2; i <= k; ++i) f.add(make_hook(maj - i, 1), 1);
  }
  return f;
}

SchurExpansion gl2_delta_mu(int n, int k, const Partition& mu) {
  require_partition_of(mu, n);
  if (k < 0 || k > n - 1) throw DomainError("gl2_delta_mu needs 0 <= k <= n-1");
  bool last = k == n - 1;
  SchurExpansion f;
  for (const auto& tau : enumerate_syt(mu)) {
    DescentStats dc = descent_stats(conjugate_tableau(tau));
    for (const auto& g : enumerate_T(n, dc.des)) {
      int h = g.ht();
      bool second = last ? h == k - 2 : (h == k - 2 || h == k - 1);
      bool third = last ? h == k - 1 : (h == k - 1 || h == k);
      if (second) {
        int a = k - 1 + g.area() - dc.maj;
        if (a >= 1) f.add(make_hook(a, 1), 1);
      }
      if (third) {
        int a = k + g.area() - dc.maj;
        if (a >= 0) f.add(hook_or_unit(a, 0), 1);
      }
    }
  }
  return f;
}

SchurExpansion hrs_t0(int n, int k) {
  if (n < 1) throw DomainError("hrs_t0 needs n >= 1");
  if (n > kHrsBound) throw LimitError("hrs_t0 is limited to n <= " + std::to_string(kHrsBound));
  if (k < 0 || k > n - 1) throw DomainError("hrs_t0 needs 0 <= k <= n-1");
  SchurExpansion f;
  for (const auto& lambda : partitions_of(n)) {
    for (const auto& tau : enumerate_syt(lambda)) {
      DescentStats d = descent_stats(tau);
      DescentStats dc = descent_stats(conjugate_tableau(tau));
      LaurentPoly c = gauss_binomial(d.des, k);
      if (c.is_zero()) continue;
      f.add(lambda, c * LaurentPoly::q(k * dc.des + c2(n - k) - dc.maj));
    }
  }
  return f;
}

LaurentPoly f_one_part(int n, int r, int j) {
  if (j < 0 || j > n - 1) return {};
  LaurentPoly inv = substitute(gauss_binomial(n - 1, j), {{Var::Q, LaurentPoly::q(-1)}});
  return inv * LaurentPoly::q(r * c2(n) - c2(j + 1));
}

LaurentPoly lift_hooks(const std::vector<LaurentPoly>& f) {
  LaurentPoly out;
  int J = static_cast<int>(f.size()) - 1;
  for (int j = 0; j <= J; ++j) {
    for (int k = 0; k <= j; ++k) {
      LaurentPoly term = f[static_cast<std::size_t>(j - k)] * LaurentPoly::monomial({-k, j, 0});
      if (k % 2)
        out -= term;
      else
        out += term;
    }
  }
  return out;
}

LaurentPoly lift_next_column(const SchurExpansion& G, int b) {
  if (b < 1) throw DomainError("lift_next_column needs b >= 1");
  SchurExpansion rest = G - restrict(G, ShapeClass::v(b));
  int N = 0;
  for (const auto& [l, c] : G.terms()) N = std::max(N, l.size());
  std::vector<LaurentPoly> f(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) {
    SchurExpansion ei = e_perp(i, rest);
    for (const auto& [l, c] : ei.terms())
      if (l.length() == 2 && l[1] == b) f[static_cast<std::size_t>(i)] += c * LaurentPoly::q(l[0]);
  }
  LaurentPoly out;
  for (int j = 1; j <= N; ++j) {
    for (int k = 0; k <= j; ++k) {
      LaurentPoly term = f[static_cast<std::size_t>(j - k)] * LaurentPoly::monomial({-k, j, 0});
      if (k % 2)
        out -= term;
      else
        out += term;
    }
  }
  return out;
}

GFamily offset_family(int c, AltVariant v) {
  if (v == AltVariant::SommeAirHt) return [c](int j, int k) { return binom(j + k + 1, 2) + c; };
  return [c](int j, int k) { return binom(j + k + 1, 2) - j + c; };
}

namespace {

// sum_{k=0}^{n-j-1} (-1)^k [n-1 j+k]_q q^{-k+g(j,k)}
LaurentPoly alternating_sum(int n, int j, const GFamily& g) {
  LaurentPoly s;
  for (int k = 0; k <= n - j - 1; ++k) {
    LaurentPoly term = gauss_binomial(n - 1, j + k) * LaurentPoly::q(static_cast<int>(-k + g(j, k)));
    if (k % 2)
      s -= term;
    else
      s += term;
  }
  return s;
}

void check_differences(int n, const GFamily& g) {
  for (int j = 0; j <= n - 1; ++j)
    for (int k = 1; k <= n - 1 - j; ++k)
      if (g(j, k) - g(j, k - 1) != j + k)
        throw DomainError("offset family violates g(j,k) - g(j,k-1) = j + k at j=" + std::to_string(j) +
                          ", k=" + std::to_string(k));
}

long long constant_base(int n, const GFamily& g, int shift) {
  // g(j,0) - C(j + shift, 2) must not depend on j.
  long long base = g(1, 0) - binom(1 + shift, 2);
  for (int j = 2; j <= n - 1; ++j)
    if (g(j, 0) - binom(j + shift, 2) != base)
      throw DomainError("offset family has a base offset that depends on j");
  return base;
}

}  // namespace

bool alternating_identity_check(int n, const GFamily& g, AltVariant v) {
  if (n < 2) throw DomainError("alternating identities need n >= 2");
  check_differences(n, g);
  switch (v) {
    case AltVariant::AltPos:
      for (int j = 1; j <= n - 1; ++j)
        if (alternating_sum(n, j, g) != gauss_binomial(n - 2, j - 1) * LaurentPoly::q(static_cast<int>(g(j, 0))))
          return false;
      return true;
    case AltVariant::Nulle:
      return alternating_sum(n, 0, g).is_zero();
    case AltVariant::Somme:
    case AltVariant::SommeAirHt: {
      bool air = v == AltVariant::SommeAirHt;
      long long base = constant_base(n, g, air ? 1 : 0);
      LaurentPoly lhs;
      for (int j = 1; j <= n - 1; ++j) lhs += alternating_sum(n, j, g) * LaurentPoly::z(j - 1);
      LaurentPoly T = gf_T(n, 0);
      if (air) {
        T = substitute(T, {{Var::Z, LaurentPoly::monomial({1, 0, 1})}});
        base += 1;
      }
      return lhs == T * LaurentPoly::q(static_cast<int>(base));
    }
  }
  return false;
}

bool alternating_identity_check(int n, int c, AltVariant v) {
  return alternating_identity_check(n, offset_family(c, v), v);
}

AltVariant parse_alt_variant(const std::string& name) {
  if (name == "alt-pos") return AltVariant::AltPos;
  if (name == "nulle") return AltVariant::Nulle;
  if (name == "somme") return AltVariant::Somme;
  if (name == "somme-air-ht") return AltVariant::SommeAirHt;
  throw DomainError("unknown alternating variant '" + name + "'");
}

std::string to_string(AltVariant v) {
  switch (v) {
    case AltVariant::AltPos:
      return "alt-pos";
    case AltVariant::Nulle:
      return "nulle";
    case AltVariant::Somme:
      return "somme";
    case AltVariant::SommeAirHt:
      return "somme-air-ht";
  }
  return "?";
}

SchurExpansion two_column_formula(int n, TwoColumnForm form) {
  if (n < 2) throw DomainError("two_column_formula needs n >= 2");
  SchurExpansion f;
  auto shape = [](int a, int legs) {
    std::vector<int> p{a, 2};
    p.insert(p.end(), static_cast<std::size_t>(legs), 1);
    return Partition(std::move(p));
  };
  if (form == TwoColumnForm::Lifted) {
    for (int k = 1; k <= n - 4; ++k) {
      for (const auto& tau : enumerate_syt(make_hook(k + 1, n - k - 1))) {
        DescentStats d = descent_stats(tau);
        if (!contains(d.set, 1)) continue;
        for (int i = 2; i <= n - k - 2; ++i) {
          bool all = contains(d.set, n - 1);
          for (int x = 1; x <= i && all; ++x) all = contains(d.set, x);
          if (!all) f.add(shape(d.maj - i, k - 1), 1);
        }
      }
    }
    return f;
  }
  for (int i = 2; i <= n - 3; ++i) {
    for (const auto& g : enumerate_T(n, 0)) {
      int h = g.ht();
      if (h < i || h > n - 3) continue;
      std::string w = g.word();
      bool excluded = w.size() >= static_cast<std::size_t>(i) && w.front() == 'N' &&
                      w.compare(w.size() - static_cast<std::size_t>(i - 1), std::string::npos,
                                std::string(static_cast<std::size_t>(i - 1), 'N')) == 0;
      if (!excluded) f.add(shape(g.area() + h + 1 - i, n - 3 - h), 1);
    }
  }
  return f;
}

}  // namespace hookchar
