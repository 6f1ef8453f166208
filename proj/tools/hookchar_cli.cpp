#include "hookchar/hookchar.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  hc_status status;
};

void check(hc_status st) {
  if (st != HC_OK) throw Failure{st};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Expansion = std::unique_ptr<hc_expansion, Deleter<hc_expansion, hc_expansion_free>>;
using Poly = std::unique_ptr<hc_poly, Deleter<hc_poly, hc_poly_free>>;
using Report = std::unique_ptr<hc_report, Deleter<hc_report, hc_report_free>>;

std::string take(char* s) {
  std::string out(s);
  hc_string_free(s);
  return out;
}

std::string render(const hc_expansion* f, bool json) {
  char* s = nullptr;
  check(hc_expansion_render(f, json, &s));
  return take(s);
}

std::string render(const hc_poly* p, bool json) {
  char* s = nullptr;
  check(hc_poly_render(p, json, &s));
  return take(s);
}

void print_block(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

struct ExpandArgs {
  std::string mu;
  int n = 0;
  int r = 1;
  std::string restrict_to;
  int specialize = 0;
};

int cmd_expand(const ExpandArgs& a, bool json) {
  if (a.specialize != 0 && a.specialize != 2) {
    std::cerr << "error: --specialize accepts only 2\n";
    return 2;
  }
  hc_expansion* raw = nullptr;
  int proven = 0;
  check(hc_hook_formula(a.mu.c_str(), a.n, a.r, &raw, &proven));
  Expansion f(raw);
  if (!a.restrict_to.empty()) {
    check(hc_expansion_restrict(f.get(), a.restrict_to.c_str(), &raw));
    f.reset(raw);
  }
  std::string status = proven ? "proven" : "conjectural";
  std::optional<Poly> spec;
  if (a.specialize == 2) {
    hc_poly* p = nullptr;
    check(hc_expansion_specialize2(f.get(), &p));
    spec.emplace(p);
  }
  if (json) {
    Json out = {{"mu", a.mu}, {"r", a.r}, {"status", status}};
    if (!a.restrict_to.empty()) out["restrict"] = a.restrict_to;
    if (spec)
      out["specialize2"] = Json::parse(render(spec->get(), true));
    else
      out["expansion"] = Json::parse(render(f.get(), true));
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << "# mu=" << a.mu << " r=" << a.r;
  if (!a.restrict_to.empty()) std::cout << " restrict=" << a.restrict_to;
  std::cout << ": " << status << '\n';
  std::cout << (spec ? render(spec->get(), false) : render(f.get(), false)) << '\n';
  return 0;
}

int cmd_gf(int n, int s, std::optional<int> hat, bool json) {
  hc_poly* raw = nullptr;
  check(hat ? hc_hat_gf(n, *hat, &raw) : hc_gf_T(n, s, &raw));
  Poly p(raw);
  std::cout << render(p.get(), json) << '\n';
  return 0;
}

int cmd_two_column(int n, const std::string& form, bool json) {
  hc_expansion* raw = nullptr;
  check(hc_two_column_formula(n, form == "lifted", &raw));
  Expansion f(raw);
  std::cout << render(f.get(), json) << '\n';
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, bool timing, bool json) {
  hc_report* raw = nullptr;
  check(hc_verify(suite.c_str(), max_n, &raw));
  Report rep(raw);
  char* s = nullptr;
  check(hc_report_render(rep.get(), json, timing, &s));
  print_block(take(s));
  return hc_report_failed(rep.get()) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hook and two-column components of rectangular diagonal characters"};
  app.require_subcommand(1);
  bool json = false;
  int max_n = 8;
  app.add_flag("--json", json, "Emit JSON instead of text")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--max-n", max_n, "Largest n for verification suites")->check(CLI::Range(2, 64));
  app.fallthrough();

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Schur expansion of the hook part paired with s_mu");
  expand->add_option("--mu", ex.mu, "Partition a,b,c")->required();
  expand->add_option("--n", ex.n, "Size of mu (inferred when omitted)");
  expand->add_option("--r", ex.r, "Rectangle parameter")->check(CLI::PositiveNumber);
  expand->add_option("--restrict", ex.restrict_to, "hooks, one_part, V1, V2, two-column, two_rows");
  expand->add_option("--specialize", ex.specialize, "Specialize to two variables (only 2)");

  int pn = 0, ps = 0, pr = 1, pmaj = 0;
  auto* paths = app.add_subcommand("paths", "Paths of T_{n,s} with area, height and hook");
  paths->add_option("--n", pn)->required();
  paths->add_option("--s", ps);
  paths->add_option("--r", pr)->check(CLI::PositiveNumber);
  paths->add_option("--maj", pmaj, "maj of the conjugate tableau");

  int gn = 0, gs = 0;
  std::optional<int> ghat;
  auto* gf = app.add_subcommand("gf", "Generating function of T_{n,s}, or its signed hat variant");
  gf->add_option("--n", gn)->required();
  gf->add_option("--s", gs);
  gf->add_option("--hat", ghat, "Print the signed height-j series of T_{n,0}");

  int kn = 0, kk = 0;
  std::optional<std::string> kpath;
  auto* pieri = app.add_subcommand("pieri", "Plus and minus images of paths under e_k^perp");
  pieri->add_option("--n", kn)->required();
  pieri->add_option("--k", kk)->required();
  pieri->add_option("--path", kpath, "One path word over N,E in T_{n,0}");

  int tn = 0;
  std::string tform = "path";
  auto* two = app.add_subcommand("two-column", "Two-column component (a,2,1^k)");
  two->add_option("--n", tn)->required();
  two->add_option("--form", tform)->check(CLI::IsMember({"lifted", "path"}));

  std::string suite = "all";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run identity suites up to --max-n");
  verify->add_option("--suite", suite);
  verify->add_flag("--timing", timing, "Include wall time per instance");

  std::optional<std::string> fx_file;
  auto* fixtures = app.add_subcommand("fixtures", "Print the stored n=4 pairings");
  fixtures->add_option("--file", fx_file, "Fixture file (defaults to the bundled one)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return cmd_expand(ex, json);
    if (*paths) {
      char* s = nullptr;
      check(hc_paths_table(pn, ps, pr, pmaj, json, &s));
      print_block(take(s));
      return 0;
    }
    if (*gf) return cmd_gf(gn, gs, ghat, json);
    if (*pieri) {
      char* s = nullptr;
      check(hc_pieri_table(kn, kk, kpath ? kpath->c_str() : nullptr, json, &s));
      print_block(take(s));
      return 0;
    }
    if (*two) return cmd_two_column(tn, tform, json);
    if (*verify) return cmd_verify(suite, max_n, timing, json);
    if (*fixtures) {
      char* s = nullptr;
      check(hc_fixtures(fx_file ? fx_file->c_str() : nullptr, json, &s));
      print_block(take(s));
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << hc_last_error() << '\n';
    return 2;
  }
  return 0;
}
