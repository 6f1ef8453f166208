#pragma once

#include "hookchar/paths.hpp"
#include "hookchar/qpoly.hpp"
#include "hookchar/schur.hpp"
#include "hookchar/shapes.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hookchar {

struct HookFormulaInput {
  int n = 0;
  int r = 1;
  Partition mu;
};

struct HookFormulaResult {
  SchurExpansion expansion;
  /// r = 1 and mu is one of (n), (n-1,1), (n-2,1,1), (1^n).
  bool proven = false;
};

bool hook_formula_proven(const HookFormulaInput& in);

/// Hook ((r-1)C(n,2) + area + ht - maj_conj + 1, 1^{n-2-ht}) attached to a
/// path of T_{n,s}. Arm 0 without legs is the empty partition; any other
/// arm below 1 throws DomainError.
Partition path_hook(int n, int r, const LatticePath& g, int maj_conj);

/// Sum over tau in SYT(mu) and gamma in T_{n,des(tau')} of s_hook(gamma).
HookFormulaResult hook_formula(const HookFormulaInput& in);

/// Sum over gamma in T_{n,0} of s_{((r-1)C(n,2)+area+ht+1, 1^{n-2-ht})}.
SchurExpansion alternant_formula(int n, int r);

/// Two-row expansion of the hook part for a hook mu.
SchurExpansion gl2_nabla_hooks(int n, int r, const Partition& mu);
SchurExpansion gl2_delta_en(int n, int k);
/// Two-row image of e_{n-k-1}^perp applied to the hook part for shape mu.
SchurExpansion gl2_delta_mu(int n, int k, const Partition& mu);

inline constexpr int kHrsBound = 9;
/// Sum over all SYT tau of size n of
/// q^{k des(tau') + C(n-k,2) - maj(tau')} [des(tau) k]_q s_shape(tau).
SchurExpansion hrs_t0(int n, int k);

/// q^{r C(n,2) - C(j+1,2)} [n-1 j]_{1/q}; zero for j outside 0..n-1.
LaurentPoly f_one_part(int n, int r, int j);

/// sum_{j=0}^{J} sum_{k=0}^{j} (-1)^k f_{j-k} q^{-k} t^j, J = f.size() - 1.
LaurentPoly lift_hooks(const std::vector<LaurentPoly>& f);

/// Alternating lift of the V_{b+1} part of G from its two-row shadows.
/// f_i is psi of the (a,b) terms of e_i^perp applied to G with its V_b part
/// removed, divided by t.
LaurentPoly lift_next_column(const SchurExpansion& G, int b);

enum class AltVariant { AltPos, Nulle, Somme, SommeAirHt };

/// g(j, k) offsets of the alternating identities.
using GFamily = std::function<long long(int j, int k)>;

/// C(j+k+1,2) + c for SommeAirHt; C(j+k+1,2) - j + c otherwise.
GFamily offset_family(int c, AltVariant v);

/// Checks one alternating identity at size n. Rejects (DomainError) families
/// with g(j,k) - g(j,k-1) != j + k, and for the summed variants families whose
/// base offset is not constant in j.
bool alternating_identity_check(int n, const GFamily& g, AltVariant v);
bool alternating_identity_check(int n, int c, AltVariant v);

AltVariant parse_alt_variant(const std::string& name);
std::string to_string(AltVariant v);

enum class TwoColumnForm { Lifted, Path };

/// Shapes (a, 2, 1^k) of the e_n pairing, in either form.
SchurExpansion two_column_formula(int n, TwoColumnForm form);

}  // namespace hookchar
