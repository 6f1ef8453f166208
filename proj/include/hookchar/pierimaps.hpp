#pragma once

#include "hookchar/paths.hpp"
#include "hookchar/schur.hpp"
#include "hookchar/shapes.hpp"

#include <string>
#include <vector>

namespace hookchar {

/// Hook tableau tau of shape (k+1, 1^{n-k-1}) paired with a path of
/// T_{n,des(tau')}.
struct TaggedPath {
  StdTableau tableau;
  LatticePath path;

  int n() const { return path.n(); }
  /// Descent statistics of the conjugate tableau.
  DescentStats conj_stats() const { return descent_stats(conjugate_tableau(tableau)); }

  bool operator==(const TaggedPath& o) const { return tableau == o.tableau && path == o.path; }
  bool operator<(const TaggedPath& o) const;
};

/// Builds the pair from Des(tau'); the path must live in T_{n,|Des(tau')|}.
TaggedPath make_tagged(const DescentSet& conj_descents, const LatticePath& path);

/// (area + ht + 1 - maj(tau'), 1^{n-2-ht}).
Partition tagged_hook(const TaggedPath& x);

struct PathStats {
  std::vector<int> p;        // north steps before each east step
  int h = 0;                 // east steps before the first north step
  std::vector<int> n_steps;  // east steps before each north step
};

PathStats path_stats(const LatticePath& g);

/// Leading north steps; leading east steps.
int leading_norths(const LatticePath& g);
int leading_easts(const LatticePath& g);

/// Drops the first k east steps of g in T_{n,0}; Des(tau') = {n-i-p_i}.
TaggedPath e_plus_map(int k, const LatticePath& g);
/// Drops the first k-1 east steps and the first north step of g in T_{n,0};
/// Des(tau') = {n-i-p_i : i < k} + {max(1, h-k+2)}.
TaggedPath e_minus_map(int k, const LatticePath& g);

struct PieriSets {
  std::vector<TaggedPath> tplus;
  std::vector<TaggedPath> tminus;
  std::vector<TaggedPath> v;
  /// Tminus \ V.
  std::vector<TaggedPath> w;
  /// W rebuilt from its four-part union description.
  std::vector<TaggedPath> w_display;
};

PieriSets build_sets(int n, int k);

SchurExpansion sum_hooks(const std::vector<TaggedPath>& xs);

/// sum over gamma in T_{n,0} of s_hook(e_plus) + s_hook(e_minus), with
/// out-of-domain images contributing zero.
SchurExpansion perp_via_paths(int n, int k);

enum class DifferenceForm { Direct, Reindexed };
/// Whether the tableau conditions of the reindexed sums are read on Des(tau)
/// as printed or on Des(tau').
enum class DifferenceReading { AsPrinted, Conjugate };

/// Direct: sum over W of s_hook. Reindexed: three-part reindexed sum over
/// smaller grids, read as printed.
SchurExpansion difference_W(int n, int k, DifferenceForm form,
                            DifferenceReading reading = DifferenceReading::AsPrinted);
/// The k = 1 closed display indexed by m = min Des(tau').
SchurExpansion difference_k1_display(int n);

struct DifferenceReport {
  int n = 0;
  int k = 0;
  SchurExpansion direct;
  SchurExpansion tminus_minus_v;
  SchurExpansion as_printed;
  SchurExpansion conjugate;
  SchurExpansion k1_display;  // only for k = 1
  bool direct_ok() const { return direct == tminus_minus_v; }
  bool as_printed_agrees() const { return as_printed == direct; }
  bool conjugate_agrees() const { return conjugate == direct; }
  bool k1_display_agrees() const { return k == 1 && k1_display == direct; }
};

DifferenceReport difference_W_report(int n, int k);

/// Phi_k on paths of T_{n,0} starting with E of height n-k-3.
StdTableau phi_map(int k, const LatticePath& g);
LatticePath phi_inverse(int k, const StdTableau& tau);

/// Omega_k^j on paths of T_{n,0} of height n-k-3 starting with N and ending
/// with exactly j north steps.
StdTableau omega_map(int k, int j, const LatticePath& g);
LatticePath omega_inverse(int k, int j, const StdTableau& tau);

/// beta_d on SYT(d+1, 1^{n-d-1}) with 1 in Des(tau), into height n-d-2.
LatticePath beta_map(int d, const StdTableau& tau);
StdTableau beta_inverse(int d, const LatticePath& g);

}  // namespace hookchar
