#include "hookchar/hookchar.h"

#include "hookchar/characters.hpp"
#include "hookchar/error.hpp"
#include "hookchar/fixtures.hpp"
#include "hookchar/pierimaps.hpp"
#include "hookchar/serialize.hpp"
#include "hookchar/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct hc_expansion {
  hookchar::SchurExpansion value;
};
struct hc_poly {
  hookchar::LaurentPoly value;
};
struct hc_report {
  std::vector<hookchar::VerifyReport> reports;
};

namespace {

using namespace hookchar;

thread_local std::string g_last_error;

template <typename F>
hc_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return HC_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return HC_ERR_PARSE;
  } catch (const ChecksumError& e) {
    g_last_error = e.what();
    return HC_ERR_CHECKSUM;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return HC_ERR_IO;
  } catch (const LimitError& e) {
    g_last_error = e.what();
    return HC_ERR_LIMIT;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return HC_ERR_DOMAIN;
  } catch (const GridMismatch& e) {
    g_last_error = e.what();
    return HC_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HC_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string hook_text(const Partition& l) { return to_string(SchurExpansion::basis(l)); }

std::string paths_table(int n, int s, int r, int maj, bool json) {
  Json rows = Json::array();
  std::ostringstream os;
  os << "word\tarea\tht\thook\n";
  for (const auto& g : enumerate_T(n, s)) {
    std::string hook;
    Json jhook;
    try {
      Partition l = path_hook(n, r, g, maj);
      hook = hook_text(l);
      jhook = to_json(l);
    } catch (const DomainError&) {
      hook = "invalid";
    }
    os << to_string(g) << '\t' << g.area() << '\t' << g.ht() << '\t' << hook << '\n';
    rows.push_back({{"word", to_string(g)}, {"area", g.area()}, {"ht", g.ht()}, {"hook", jhook}});
  }
  if (json) return Json({{"n", n}, {"s", s}, {"r", r}, {"maj", maj}, {"paths", rows}}).dump(2);
  return os.str();
}

Json image_json(const TaggedPath& x, const Partition& law) {
  Partition got = tagged_hook(x);
  return {{"conj_descents", x.conj_stats().set},
          {"path", to_string(x.path)},
          {"hook", to_json(got)},
          {"law", to_json(law)},
          {"law_holds", got == law}};
}

std::string image_text(const Json& j) {
  std::ostringstream os;
  std::vector<int> d = j.at("conj_descents").get<std::vector<int>>();
  Partition hook(j.at("hook").get<std::vector<int>>());
  Partition law(j.at("law").get<std::vector<int>>());
  os << "Des(tau')=" << to_string(DescentSet(d)) << " path=" << j.at("path").get<std::string>()
     << " hook=" << hook_text(hook) << " law=" << hook_text(law) << (j.at("law_holds").get<bool>() ? " ok" : " MISMATCH");
  return os.str();
}

Json pieri_row(int n, int k, const LatticePath& g) {
  Json row = {{"gamma", to_string(g)}, {"area", g.area()}, {"ht", g.ht()}, {"plus", nullptr}, {"minus", nullptr}};
  int a = g.area() + g.ht();
  if (g.num_east() >= k) row["plus"] = image_json(e_plus_map(k, g), make_hook(a + 1, n - 2 - g.ht() - k));
  if (k >= 1 && g.num_east() >= k - 1 && g.num_north() > 0)
    row["minus"] = image_json(e_minus_map(k, g), make_hook(a, n - 1 - g.ht() - k));
  return row;
}

std::string pieri_table(int n, int k, const char* word, bool json) {
  require(n >= 2, "pieri needs n >= 2");
  require(k >= 0 && k <= n - 2, "pieri needs 0 <= k <= n-2");
  std::vector<LatticePath> paths;
  if (word)
    paths.emplace_back(n, 0, std::string_view(word));
  else
    paths = enumerate_T(n, 0);
  Json rows = Json::array();
  for (const auto& g : paths) rows.push_back(pieri_row(n, k, g));
  if (json) return Json({{"n", n}, {"k", k}, {"rows", rows}}).dump(2);
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "gamma=" << row.at("gamma").get<std::string>() << " area=" << row.at("area") << " ht=" << row.at("ht") << '\n';
    os << "  plus:  " << (row.at("plus").is_null() ? std::string("none") : image_text(row.at("plus"))) << '\n';
    os << "  minus: " << (row.at("minus").is_null() ? std::string("none") : image_text(row.at("minus"))) << '\n';
  }
  return os.str();
}

std::string fixtures_text(const char* path, bool json) {
  Fixture fx = load_fixture(path ? path : default_fixture_path());
  Json rows = Json::array();
  std::ostringstream os;
  for (auto it = fx.pairings.rbegin(); it != fx.pairings.rend(); ++it) {
    const auto& [mu, stored] = *it;
    bool agrees = hook_formula({fx.n, 1, mu}).expansion == stored;
    os << "mu=" << to_string(mu) << ": " << to_string(stored) << (agrees ? "" : "  [hook_formula differs]") << '\n';
    rows.push_back({{"mu", to_json(mu)}, {"expansion", to_json(stored)}, {"hook_formula_agrees", agrees}});
  }
  if (json) return Json({{"n", fx.n}, {"pairings", rows}}).dump(2);
  return os.str();
}

}  // namespace

extern "C" {

const char* hc_last_error(void) { return g_last_error.c_str(); }

const char* hc_version(void) { return "0.1.0"; }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_hook_formula(const char* mu, int n, int r, hc_expansion** out, int* proven) {
  return guard([&] {
    require(mu && out, "hc_hook_formula: NULL argument");
    Partition p = parse_partition(mu);
    HookFormulaInput in{n > 0 ? n : p.size(), r, p};
    if (in.n != p.size()) throw DomainError("n=" + std::to_string(in.n) + " does not match |mu|=" + std::to_string(p.size()));
    HookFormulaResult res = hook_formula(in);
    *out = new hc_expansion{std::move(res.expansion)};
    if (proven) *proven = res.proven ? 1 : 0;
  });
}

hc_status hc_alternant_formula(int n, int r, hc_expansion** out) {
  return guard([&] {
    require(out, "hc_alternant_formula: NULL argument");
    *out = new hc_expansion{alternant_formula(n, r)};
  });
}

hc_status hc_two_column_formula(int n, int lifted, hc_expansion** out) {
  return guard([&] {
    require(out, "hc_two_column_formula: NULL argument");
    *out = new hc_expansion{two_column_formula(n, lifted ? TwoColumnForm::Lifted : TwoColumnForm::Path)};
  });
}

hc_status hc_expansion_restrict(const hc_expansion* f, const char* shape_class, hc_expansion** out) {
  return guard([&] {
    require(f && shape_class && out, "hc_expansion_restrict: NULL argument");
    *out = new hc_expansion{restrict(f->value, ShapeClass::named(shape_class))};
  });
}

hc_status hc_expansion_e_perp(const hc_expansion* f, int k, hc_expansion** out) {
  return guard([&] {
    require(f && out, "hc_expansion_e_perp: NULL argument");
    *out = new hc_expansion{e_perp(k, f->value)};
  });
}

hc_status hc_expansion_specialize2(const hc_expansion* f, hc_poly** out) {
  return guard([&] {
    require(f && out, "hc_expansion_specialize2: NULL argument");
    *out = new hc_poly{specialize2(f->value)};
  });
}

hc_status hc_expansion_render(const hc_expansion* f, int json, char** out) {
  return guard([&] {
    require(f && out, "hc_expansion_render: NULL argument");
    *out = dup_string(json ? to_json(f->value).dump() : to_string(f->value));
  });
}

int hc_expansion_equal(const hc_expansion* a, const hc_expansion* b) {
  if (!a || !b) return -1;
  return a->value == b->value ? 1 : 0;
}

size_t hc_expansion_size(const hc_expansion* f) { return f ? f->value.size() : 0; }

void hc_expansion_free(hc_expansion* f) { delete f; }

hc_status hc_gf_T(int n, int s, hc_poly** out) {
  return guard([&] {
    require(out, "hc_gf_T: NULL argument");
    *out = new hc_poly{gf_T(n, s)};
  });
}

hc_status hc_hat_gf(int n_plus_1, int j, hc_poly** out) {
  return guard([&] {
    require(out, "hc_hat_gf: NULL argument");
    *out = new hc_poly{hat_gf(n_plus_1, j)};
  });
}

hc_status hc_poly_render(const hc_poly* p, int json, char** out) {
  return guard([&] {
    require(p && out, "hc_poly_render: NULL argument");
    *out = dup_string(json ? to_json(p->value).dump() : to_string(p->value));
  });
}

void hc_poly_free(hc_poly* p) { delete p; }

hc_status hc_paths_table(int n, int s, int r, int maj, int json, char** out) {
  return guard([&] {
    require(out, "hc_paths_table: NULL argument");
    *out = dup_string(paths_table(n, s, r, maj, json != 0));
  });
}

hc_status hc_pieri_table(int n, int k, const char* path, int json, char** out) {
  return guard([&] {
    require(out, "hc_pieri_table: NULL argument");
    *out = dup_string(pieri_table(n, k, path, json != 0));
  });
}

hc_status hc_verify(const char* suite, int max_n, hc_report** out) {
  return guard([&] {
    require(suite && out, "hc_verify: NULL argument");
    *out = new hc_report{run_suite(suite, max_n)};
  });
}

int hc_report_failed(const hc_report* rep) { return rep && any_failed(rep->reports) ? 1 : 0; }

size_t hc_report_count(const hc_report* rep) { return rep ? rep->reports.size() : 0; }

hc_status hc_report_render(const hc_report* rep, int json, int timing, char** out) {
  return guard([&] {
    require(rep && out, "hc_report_render: NULL argument");
    *out = dup_string(json ? render_json(rep->reports, timing != 0).dump(2) : render_text(rep->reports, timing != 0));
  });
}

void hc_report_free(hc_report* rep) { delete rep; }

hc_status hc_fixtures(const char* path, int json, char** out) {
  return guard([&] {
    require(out, "hc_fixtures: NULL argument");
    *out = dup_string(fixtures_text(path, json != 0));
  });
}

}  // extern "C"
