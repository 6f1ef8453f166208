#include "hookchar/schur.hpp"

#include "hookchar/error.hpp"

#include <sstream>

namespace hookchar {

SchurExpansion SchurExpansion::basis(const Partition& lambda, const LaurentPoly& c) {
  SchurExpansion f;
  f.add(lambda, c);
  return f;
}

LaurentPoly SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void SchurExpansion::add(const Partition& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& o) {
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

SchurExpansion& SchurExpansion::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap next;
  for (const auto& [l, v] : terms_) {
    LaurentPoly p = v * c;
    if (!p.is_zero()) next.emplace(l, std::move(p));
  }
  terms_ = std::move(next);
  return *this;
}

bool SchurExpansion::schur_positive() const {
  for (const auto& [l, c] : terms_)
    if (!c.nonnegative()) return false;
  return true;
}

std::vector<Partition> remove_vertical_strips(const Partition& lambda, int k) {
  std::vector<Partition> out;
  int len = lambda.length();
  if (k < 0 || k > len) return out;
  std::vector<int> mu(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == len) {
      if (left != 0) return;
      std::vector<int> parts;
      for (int p : mu)
        if (p > 0) parts.push_back(p);
      out.emplace_back(std::move(parts));
      return;
    }
    if (len - i < left) return;
    for (int d = 0; d <= 1 && d <= left; ++d) {
      int v = lambda[static_cast<std::size_t>(i)] - d;
      if (i > 0 && mu[static_cast<std::size_t>(i - 1)] < v) continue;
      mu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - d);
    }
  };
  rec(rec, 0, k);
  return out;
}

SchurExpansion e_perp(int k, const SchurExpansion& f) {
  if (k < 0) throw DomainError("e_perp: k must be nonnegative");
  SchurExpansion r;
  for (const auto& [l, c] : f.terms())
    for (const auto& mu : remove_vertical_strips(l, k)) r.add(mu, c);
  return r;
}

SchurExpansion omega(const SchurExpansion& f) {
  SchurExpansion r;
  for (const auto& [l, c] : f.terms()) r.add(conjugate(l), c);
  return r;
}

ShapeClass ShapeClass::hooks() {
  return {"hooks", [](const Partition& l) { return is_hook(l); }};
}

ShapeClass ShapeClass::one_part() {
  return {"one_part", [](const Partition& l) { return l.length() <= 1; }};
}

ShapeClass ShapeClass::v(int b) {
  if (b < 1) throw DomainError("V_b needs b >= 1");
  // (a,1,1^k) together with the one-part shapes is exactly the hooks.
  if (b == 1) return {"V1", [](const Partition& l) { return is_hook(l); }};
  return {"V" + std::to_string(b), [b](const Partition& l) {
            if (l.length() < 2 || l[1] != b) return false;
            for (int i = 2; i < l.length(); ++i)
              if (l[static_cast<std::size_t>(i)] != 1) return false;
            return true;
          }};
}

ShapeClass ShapeClass::two_columns() {
  ShapeClass c = v(2);
  c.name_ = "two-column";
  return c;
}

ShapeClass ShapeClass::two_rows() {
  return {"two_rows", [](const Partition& l) { return l.length() <= 2; }};
}

ShapeClass ShapeClass::explicit_set(std::set<Partition> shapes) {
  return {"explicit", [s = std::move(shapes)](const Partition& l) { return s.count(l) > 0; }};
}

ShapeClass ShapeClass::named(const std::string& name) {
  if (name == "hooks") return hooks();
  if (name == "one_part") return one_part();
  if (name == "two-column" || name == "two_columns") return two_columns();
  if (name == "two_rows") return two_rows();
  if (name.size() >= 2 && name[0] == 'V') {
    std::size_t used = 0;
    int b = 0;
    try {
      b = std::stoi(name.substr(1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == name.size() - 1 && b >= 1) return v(b);
  }
  throw DomainError("unknown shape class '" + name + "'");
}

SchurExpansion restrict(const SchurExpansion& f, const ShapeClass& v) {
  SchurExpansion r;
  for (const auto& [l, c] : f.terms())
    if (v.contains(l)) r.add(l, c);
  return r;
}

LaurentPoly psi(const SchurExpansion& f) {
  LaurentPoly r;
  for (const auto& [l, c] : f.terms()) {
    int len = std::max(l.length(), 1);
    r += c * LaurentPoly::monomial({l[0], len - 1, 0});
  }
  return r;
}

SchurExpansion psi_inverse_hooks(const LaurentPoly& p) {
  SchurExpansion r;
  for (const auto& [m, c] : p.terms()) {
    if (m.z != 0) throw DomainError("psi_inverse_hooks: z may not occur");
    if (m.q == 0 && m.t == 0) {
      r.add(Partition{}, LaurentPoly(c));
      continue;
    }
    if (m.q < 1) throw DomainError("psi_inverse_hooks: monomial q^" + std::to_string(m.q) + " has arm < 1");
    if (m.t < 0) throw DomainError("psi_inverse_hooks: negative t exponent");
    r.add(make_hook(m.q, m.t), LaurentPoly(c));
  }
  return r;
}

LaurentPoly specialize2(const Partition& lambda) {
  if (lambda.length() > 2) return {};
  int a = lambda[0];
  int b = lambda[1];
  LaurentPoly h;
  for (int i = 0; i <= a - b; ++i) h.add_term({i + b, a - i, 0}, 1);
  return h;
}

LaurentPoly specialize2(const SchurExpansion& f) {
  LaurentPoly r;
  for (const auto& [l, c] : f.terms())
    if (l.length() <= 2) r += c * specialize2(l);
  return r;
}

LaurentPoly ssyt_specialize_oracle(const Partition& lambda, int m) {
  if (m < 1) throw DomainError("ssyt oracle needs m >= 1");
  if (m > 3 || lambda.size() > 10) throw LimitError("ssyt oracle is limited to m <= 3 and |lambda| <= 10");
  std::vector<Cell> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.push_back({r, c});
  std::vector<std::vector<int>> grid;
  for (int len : lambda.parts()) grid.emplace_back(static_cast<std::size_t>(len), 0);
  LaurentPoly out;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      int e[3] = {0, 0, 0};
      for (const auto& row : grid)
        for (int v : row) e[v - 1]++;
      out.add_term({e[0], e[1], e[2]}, 1);
      return;
    }
    auto [r, c] = cells[idx];
    auto ur = static_cast<std::size_t>(r);
    auto uc = static_cast<std::size_t>(c);
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[ur][uc - 1]);
    if (r > 0) lo = std::max(lo, grid[ur - 1][uc] + 1);
    for (int v = lo; v <= m; ++v) {
      grid[ur][uc] = v;
      self(self, idx + 1);
    }
    grid[ur][uc] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

bool is_constant(const LaurentPoly& c) { return c.is_monomial() && c.terms().begin()->first == Monomial{}; }

}  // namespace

std::string to_string(const SchurExpansion& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [l, c] = *it;
    std::string sym = l.empty() ? "" : "s[" + to_string(l) + "]";
    std::string coeff;
    bool negative = false;
    if (is_constant(c)) {
      Integer v = c.terms().begin()->second;
      negative = v < 0;
      if (negative) v = -v;
      if (v != 1 || l.empty()) coeff = v.str();
    } else {
      coeff = "(" + to_string(c) + ")";
    }
    if (lead)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    lead = false;
    os << coeff;
    if (!coeff.empty() && !sym.empty()) os << ' ';
    os << sym;
  }
  return os.str();
}

}  // namespace hookchar
