#include "hookchar/qpoly.hpp"

#include "hookchar/error.hpp"

#include <mutex>
#include <sstream>
#include <utility>
#include <vector>

namespace hookchar {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::monomial(Monomial m, const Integer& c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::has_var(Var v) const {
  for (const auto& [m, c] : terms_) {
    int e = v == Var::Q ? m.q : v == Var::T ? m.t : m.z;
    if (e != 0) return true;
  }
  return false;
}

int LaurentPoly::max_q() const {
  if (terms_.empty()) throw DomainError("max_q of the zero polynomial");
  int best = terms_.begin()->first.q;
  for (const auto& [m, c] : terms_) best = std::max(best, m.q);
  return best;
}

int LaurentPoly::min_q() const {
  if (terms_.empty()) throw DomainError("min_q of the zero polynomial");
  int best = terms_.begin()->first.q;
  for (const auto& [m, c] : terms_) best = std::min(best, m.q);
  return best;
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

static int exponent(const Monomial& m, Var v) { return v == Var::Q ? m.q : v == Var::T ? m.t : m.z; }

static void set_exponent(Monomial& m, Var v, int e) {
  (v == Var::Q ? m.q : v == Var::T ? m.t : m.z) = e;
}

LaurentPoly LaurentPoly::coefficient_of(Var v, int e) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    if (exponent(m, v) != e) continue;
    Monomial k = m;
    set_exponent(k, v, 0);
    r.add_term(k, c);
  }
  return r;
}

LaurentPoly LaurentPoly::at_one(Var v) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial k = m;
    set_exponent(k, v, 0);
    r.add_term(k, c);
  }
  return r;
}

LaurentPoly LaurentPoly::at_zero(Var v) const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) {
    int e = exponent(m, v);
    if (e < 0) throw DomainError("cannot set a variable with negative exponent to zero");
    if (e == 0) r.add_term(m, c);
  }
  return r;
}

bool LaurentPoly::nonnegative() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

LaurentPoly pow(const LaurentPoly& p, unsigned e) {
  LaurentPoly result = 1;
  LaurentPoly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

namespace {

// Power of a single-term image; negative powers need a unit coefficient.
LaurentPoly image_power(const LaurentPoly& img, int e) {
  const auto& [m, c] = *img.terms().begin();
  if (e >= 0) return pow(img, static_cast<unsigned>(e));
  if (c != 1 && c != -1)
    throw DomainError("substitution image needs coefficient +-1 for a negative power");
  int k = -e;
  Integer sign = (c == -1 && (k % 2 == 1)) ? Integer(-1) : Integer(1);
  return LaurentPoly::monomial({-m.q * k, -m.t * k, -m.z * k}, sign);
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const std::map<Var, LaurentPoly>& rules) {
  for (const auto& [v, img] : rules)
    if (!img.is_monomial()) throw DomainError("substitution rule image must be a single monomial");
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::monomial({}, c);
    Monomial kept = m;
    for (const auto& [v, img] : rules) {
      int e = exponent(m, v);
      set_exponent(kept, v, 0);
      if (e != 0) term *= image_power(img, e);
    }
    term *= LaurentPoly::monomial(kept);
    r += term;
  }
  return r;
}

LaurentPoly rev_q(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  if (p.has_var(Var::T) || p.has_var(Var::Z)) throw DomainError("rev_q: only q may occur");
  if (p.min_q() < 0) throw DomainError("rev_q: negative q exponent");
  int d = p.max_q();
  LaurentPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term({d - m.q, 0, 0}, c);
  return r;
}

LaurentPoly q_int(int n) {
  if (n < 0) throw DomainError("q_int: n must be nonnegative");
  LaurentPoly r;
  for (int i = 0; i < n; ++i) r.add_term({i, 0, 0}, 1);
  return r;
}

LaurentPoly q_factorial(int n) {
  if (n < 0) throw DomainError("q_factorial: n must be nonnegative");
  LaurentPoly r = 1;
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

LaurentPoly gauss_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0 || k == n) return 1;
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
  }
  // [n k] = [n-1 k-1] + q^k [n-1 k]
  LaurentPoly r = gauss_binomial(n - 1, k - 1) + LaurentPoly::q(k) * gauss_binomial(n - 1, k);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::pair{n, k}, r);
  return r;
}

LaurentPoly q_pochhammer(const LaurentPoly& x, int m, PochhammerForm form) {
  if (m < 0) throw DomainError("q_pochhammer: m must be nonnegative");
  if (!x.is_monomial()) throw DomainError("q_pochhammer: argument must be a single monomial");
  LaurentPoly r = 1;
  for (int i = 0; i < m; ++i) {
    if (form == PochhammerForm::Rising)
      r *= LaurentPoly(1) + x * LaurentPoly::q(i + 1);
    else
      r *= LaurentPoly(1) - x * LaurentPoly::q(i);
  }
  return r;
}

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void render_var(std::ostringstream& os, bool& first, char name, int e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [m, c] : p.terms()) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (lead)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    lead = false;
    bool unit = m == Monomial{};
    bool first = true;
    if (a != 1 || unit) {
      os << a;
      first = false;
    }
    render_var(os, first, 'q', m.q);
    render_var(os, first, 't', m.t);
    render_var(os, first, 'z', m.z);
  }
  return os.str();
}

}  // namespace hookchar
