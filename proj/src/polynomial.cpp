#include "grapoly/polynomial.hpp"

#include <algorithm>

namespace grapoly {

namespace {
const Integer kZero = 0;
}

UnivariatePoly::UnivariatePoly(Integer constant) {
  if (constant != 0) terms_[0] = std::move(constant);
}

UnivariatePoly UnivariatePoly::variable() { return monomial(1, 1); }

UnivariatePoly UnivariatePoly::monomial(int exponent, Integer coeff) {
  UnivariatePoly p;
  if (coeff != 0) p.terms_[exponent] = std::move(coeff);
  return p;
}

const Integer& UnivariatePoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? kZero : it->second;
}

std::vector<Integer> UnivariatePoly::coefficients() const {
  std::vector<Integer> c;
  if (terms_.empty()) return c;
  c.assign(static_cast<size_t>(degree()) + 1, Integer(0));
  for (const auto& [e, v] : terms_) c[static_cast<size_t>(e)] = v;
  return c;
}

void UnivariatePoly::add_term(int exponent, const Integer& c) {
  if (c == 0) return;
  Integer& slot = terms_[exponent];
  slot += c;
  if (slot == 0) terms_.erase(exponent);
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& o) {
  *this = *this * o;
  return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

UnivariatePoly UnivariatePoly::pow(unsigned e) const {
  UnivariatePoly r(Integer(1));
  UnivariatePoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

UnivariatePoly UnivariatePoly::stretch(int m) const {
  if (m < 1) throw InputError("stretch requires m >= 1");
  UnivariatePoly r;
  for (const auto& [e, c] : terms_) r.terms_[e * m] = c;
  return r;
}

UnivariatePoly UnivariatePoly::derivative() const {
  UnivariatePoly r;
  for (const auto& [e, c] : terms_)
    if (e > 0) r.terms_[e - 1] = c * e;
  return r;
}

Rational UnivariatePoly::eval(const Rational& x) const {
  // Horner over the dense range between stored exponents.
  Rational acc = 0;
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0) acc *= rat_pow(x, prev - it->first);
    acc += Rational(it->second);
    prev = it->first;
  }
  if (prev > 0) acc *= rat_pow(x, prev);
  return acc;
}

Complex UnivariatePoly::eval(const Complex& x) const {
  Complex acc = 0;
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0)
      for (int i = it->first; i < prev; ++i) acc *= x;
    acc += Complex(it->second.get_d(), 0.0);
    prev = it->first;
  }
  for (int i = 0; i < prev; ++i) acc *= x;
  return acc;
}

double UnivariatePoly::eval(double x) const { return eval(Complex(x, 0.0)).real(); }

UnivariatePoly divide_exact(const UnivariatePoly& p, const UnivariatePoly& d) {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  UnivariatePoly r = p;
  UnivariatePoly q;
  const int dd = d.degree();
  const Integer& lead = d.coeff(dd);
  while (!r.is_zero() && r.degree() >= dd) {
    const int k = r.degree() - dd;
    const Integer& rl = r.coeff(r.degree());
    if (!divides(lead, rl))
      throw DivisibilityError("exact polynomial division has a remainder");
    Integer qc = rl / lead;
    q.add_term(k, qc);
    r -= d * UnivariatePoly::monomial(k, qc);
  }
  if (!r.is_zero()) throw DivisibilityError("exact polynomial division has a remainder");
  return q;
}

BivariatePoly::BivariatePoly(Integer constant) {
  if (constant != 0) terms_[{0, 0}] = std::move(constant);
}

BivariatePoly BivariatePoly::first_variable() { return monomial(1, 0, 1); }
BivariatePoly BivariatePoly::second_variable() { return monomial(0, 1, 1); }

BivariatePoly BivariatePoly::monomial(int deg1, int deg2, Integer coeff) {
  BivariatePoly p;
  if (coeff != 0) p.terms_[{deg1, deg2}] = std::move(coeff);
  return p;
}

BivariatePoly BivariatePoly::from_first(const UnivariatePoly& p) {
  BivariatePoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{e, 0}] = c;
  return r;
}

BivariatePoly BivariatePoly::from_second(const UnivariatePoly& p) {
  BivariatePoly r;
  for (const auto& [e, c] : p.terms()) r.terms_[{0, e}] = c;
  return r;
}

const Integer& BivariatePoly::coeff(int deg1, int deg2) const {
  auto it = terms_.find({deg1, deg2});
  return it == terms_.end() ? kZero : it->second;
}

int BivariatePoly::degree_first() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BivariatePoly::degree_second() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

void BivariatePoly::add_term(int deg1, int deg2, const Integer& c) {
  if (c == 0) return;
  Integer& slot = terms_[{deg1, deg2}];
  slot += c;
  if (slot == 0) terms_.erase({deg1, deg2});
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
  *this = *this * o;
  return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned e) const {
  BivariatePoly r(Integer(1));
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

UnivariatePoly BivariatePoly::substitute_second(const Integer& value) const {
  UnivariatePoly r;
  for (const auto& [k, c] : terms_)
    r.add_term(k.first, c * int_pow(value, static_cast<unsigned long>(k.second)));
  return r;
}

UnivariatePoly BivariatePoly::substitute_second_squared(const Integer& value) const {
  UnivariatePoly r;
  for (const auto& [k, c] : terms_) {
    if (k.second % 2 != 0)
      throw InputError("substitute_second_squared: polynomial has odd exponents in variable 2");
    r.add_term(k.first, c * int_pow(value, static_cast<unsigned long>(k.second / 2)));
  }
  return r;
}

bool BivariatePoly::even_in_second() const {
  for (const auto& [k, c] : terms_)
    if (k.second % 2 != 0) return false;
  return true;
}

Rational BivariatePoly::eval(const Rational& x1, const Rational& x2) const {
  Rational acc = 0;
  for (const auto& [k, c] : terms_)
    acc += Rational(c) * rat_pow(x1, k.first) * rat_pow(x2, k.second);
  return acc;
}

Complex BivariatePoly::eval(const Complex& x1, const Complex& x2) const {
  Complex acc = 0;
  for (const auto& [k, c] : terms_)
    acc += c.get_d() * std::pow(x1, k.first) * std::pow(x2, k.second);
  return acc;
}

UnivariatePoly f_poly(int n) {
  if (n < 0) throw InputError("f_poly requires n >= 0");
  return f_family(n).back();
}

std::vector<UnivariatePoly> f_family(int n) {
  if (n < 0) throw InputError("f_family requires n >= 0");
  std::vector<UnivariatePoly> f;
  f.reserve(static_cast<size_t>(n) + 1);
  f.push_back(UnivariatePoly(Integer(1)));
  if (n >= 1) f.push_back(UnivariatePoly());
  const UnivariatePoly x = UnivariatePoly::variable();
  for (int k = 2; k <= n; ++k) f.push_back(x * f[k - 1] + f[k - 2]);
  return f;
}

std::pair<Integer, Integer> f_eval_2i(int n) {
  if (n < 0) throw InputError("f_eval_2i requires n >= 0");
  const Integer v = Integer(1) - n;
  switch (n % 4) {
    case 0: return {v, 0};
    case 1: return {0, v};
    case 2: return {-v, 0};
    default: return {0, -v};
  }
}

}  // namespace grapoly
