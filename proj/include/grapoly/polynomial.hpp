#ifndef GRAPOLY_POLYNOMIAL_HPP
#define GRAPOLY_POLYNOMIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "grapoly/bigint.hpp"
#include "grapoly/errors.hpp"

namespace grapoly {

// Sparse exact polynomial in one variable over arbitrary-precision integers.
// Canonical form: no zero coefficients stored, so operator== is structural
// equality of values.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(Integer constant);

  static UnivariatePoly variable();
  static UnivariatePoly monomial(int exponent, Integer coeff);

  bool is_zero() const { return terms_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  const Integer& coeff(int exponent) const;
  const std::map<int, Integer>& terms() const { return terms_; }
  // Dense coefficient list c_0..c_degree; empty for the zero polynomial.
  std::vector<Integer> coefficients() const;

  void add_term(int exponent, const Integer& c);

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const Integer& c);
  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(UnivariatePoly a, const Integer& c) { return a *= c; }
  UnivariatePoly operator-() const;
  bool operator==(const UnivariatePoly& o) const { return terms_ == o.terms_; }

  UnivariatePoly pow(unsigned e) const;
  // Substitute x -> x^m (m >= 1).
  UnivariatePoly stretch(int m) const;
  UnivariatePoly derivative() const;

  Rational eval(const Rational& x) const;
  Complex eval(const Complex& x) const;
  double eval(double x) const;

 private:
  std::map<int, Integer> terms_;
};

// Exact division: returns q with p = q*d, throws DivisibilityError if the
// division leaves a remainder (or requires non-integer coefficients).
UnivariatePoly divide_exact(const UnivariatePoly& p, const UnivariatePoly& d);

// Sparse exact polynomial in two variables. The variables are anonymous
// here; callers attach names ("beta"/"gamma", "x"/"y") at serialization.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(Integer constant);

  static BivariatePoly first_variable();
  static BivariatePoly second_variable();
  static BivariatePoly monomial(int deg1, int deg2, Integer coeff);
  // Lift a univariate polynomial into variable 1 (resp. variable 2).
  static BivariatePoly from_first(const UnivariatePoly& p);
  static BivariatePoly from_second(const UnivariatePoly& p);

  bool is_zero() const { return terms_.empty(); }
  const Integer& coeff(int deg1, int deg2) const;
  const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }
  int degree_first() const;
  int degree_second() const;

  void add_term(int deg1, int deg2, const Integer& c);

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  BivariatePoly& operator*=(const BivariatePoly& o);
  BivariatePoly& operator*=(const Integer& c);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(BivariatePoly a, const Integer& c) { return a *= c; }
  BivariatePoly operator-() const;
  bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

  BivariatePoly pow(unsigned e) const;

  // Substitute a constant for variable 2, leaving a univariate in variable 1.
  UnivariatePoly substitute_second(const Integer& value) const;
  // Substitute value for the SQUARE of variable 2; requires all exponents of
  // variable 2 to be even (throws InputError otherwise).
  UnivariatePoly substitute_second_squared(const Integer& value) const;
  bool even_in_second() const;

  Rational eval(const Rational& x1, const Rational& x2) const;
  Complex eval(const Complex& x1, const Complex& x2) const;

 private:
  std::map<std::pair<int, int>, Integer> terms_;
};

// The generator family f_0 = 1, f_1 = 0, f_{n+1}(x) = x f_n(x) + f_{n-1}(x).
UnivariatePoly f_poly(int n);
// All of f_0..f_n at once (index by subscript).
std::vector<UnivariatePoly> f_family(int n);
// f_n at x = 2i as an exact Gaussian integer (re, im): i^n * (1 - n).
std::pair<Integer, Integer> f_eval_2i(int n);

}  // namespace grapoly

#endif
