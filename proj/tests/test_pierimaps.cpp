#include "hookchar/characters.hpp"
#include "hookchar/error.hpp"
#include "hookchar/pierimaps.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hookchar;

TEST_CASE("plus and minus images of a sample path") {
  LatticePath g(10, 0, "NENEENEE");
  TaggedPath plus = e_plus_map(2, g);
  CHECK(plus.conj_stats().set == DescentSet{6, 8});
  CHECK(plus.path == LatticePath(10, 2, "NNENEE"));
  TaggedPath minus = e_minus_map(2, g);
  CHECK(minus.conj_stats().set == DescentSet{1, 8});
  CHECK(minus.path == LatticePath(10, 2, "NEENEE"));
  int a = g.area() + g.ht();
  CHECK(tagged_hook(plus) == make_hook(a + 1, 10 - 2 - g.ht() - 2));
  CHECK(tagged_hook(minus) == make_hook(a, 10 - 1 - g.ht() - 2));
}

TEST_CASE("path statistics") {
  LatticePath g(10, 0, "EENENNEE");
  PathStats st = path_stats(g);
  CHECK(st.p == std::vector<int>{0, 0, 1, 3, 3});
  CHECK(st.h == 2);
  CHECK(st.n_steps == std::vector<int>{2, 3, 3});
  CHECK(leading_easts(g) == 2);
  CHECK(leading_norths(g) == 0);
  CHECK(leading_norths(LatticePath(10, 0, "NNNEEEEE")) == 3);
}

TEST_CASE("tagged paths need the matching grid") {
  CHECK_THROWS_AS(make_tagged({2}, LatticePath(6, 0, "NNNN")), DomainError);
  TaggedPath x = make_tagged({2}, LatticePath(6, 1, "NNE"));
  CHECK(x.tableau.shape() == Partition{2, 1, 1, 1, 1});
  CHECK(x.n() == 6);
}

TEST_CASE("Pieri sums over paths") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      SchurExpansion ep = e_perp(k, alternant_formula(n, 1));
      CHECK(perp_via_paths(n, k) == ep);
      PieriSets sets = build_sets(n, k);
      CHECK(sum_hooks(sets.tplus) + sum_hooks(sets.tminus) - sum_hooks(sets.w) == ep);
      CHECK(sets.w == sets.w_display);
      if (k == 0) CHECK(sets.v.empty());
    }
  CHECK(build_sets(9, 7).w.empty());
}

TEST_CASE("difference identity at k = 1") {
  for (int n = 3; n <= 7; ++n) {
    DifferenceReport rep = difference_W_report(n, 1);
    CHECK(rep.direct_ok());
    CHECK(rep.direct == difference_W(n, 1, DifferenceForm::Direct));
  }
}

TEST_CASE("Phi example") {
  StdTableau tau = phi_map(1, LatticePath(7, 0, "ENNEN"));
  CHECK(descent_stats(tau).set == DescentSet{1, 2, 3, 5, 6});
  CHECK(tau.shape() == Partition{2, 1, 1, 1, 1, 1});
  CHECK(phi_inverse(1, tau) == LatticePath(7, 0, "ENNEN"));
  CHECK_THROWS_AS(phi_map(1, LatticePath(7, 0, "NENEN")), DomainError);
}

TEST_CASE("Omega example") {
  LatticePath g(7, 0, "NNEEN");
  StdTableau tau = omega_map(1, 1, g);
  DescentStats d = descent_stats(tau);
  CHECK(d.set == DescentSet{1, 2, 3, 5, 6});
  CHECK(g.area() + g.ht() + 1 == d.maj - 3);
  CHECK(omega_inverse(1, 1, tau) == g);
  CHECK_THROWS_AS(omega_map(1, 0, g), DomainError);
}

TEST_CASE("beta example") {
  StdTableau tau = hook_tableau_from_descents({1, 2, 4, 5}, 7);
  CHECK(tau.shape() == Partition{3, 1, 1, 1, 1});
  LatticePath g = beta_map(2, tau);
  CHECK(g == LatticePath(7, 0, "ENNEN"));
  CHECK(descent_stats(tau).maj == g.area() + g.ht() + 1);
  CHECK(beta_inverse(2, g) == tau);
  CHECK_THROWS_AS(beta_map(2, hook_tableau_from_descents({2, 3, 4, 5}, 7)), DomainError);
}
