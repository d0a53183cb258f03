#include <doctest.h>

#include <complex>
#include <random>

#include "grapoly/json_io.hpp"
#include "grapoly/polynomial.hpp"

using namespace grapoly;

namespace {

UnivariatePoly from_coeffs(std::initializer_list<long> cs) {
  UnivariatePoly p;
  int e = 0;
  for (long c : cs) p.add_term(e++, Integer(c));
  return p;
}

}  // namespace

TEST_CASE("generator family base values") {
  CHECK(f_poly(0) == UnivariatePoly(Integer(1)));
  CHECK(f_poly(1).is_zero());
  CHECK(f_poly(2) == UnivariatePoly(Integer(1)));
  CHECK(f_poly(3) == UnivariatePoly::variable());
  CHECK(f_poly(4) == from_coeffs({1, 0, 1}));     // x^2 + 1
  CHECK(f_poly(5) == from_coeffs({0, 2, 0, 1}));  // x^3 + 2x
}

TEST_CASE("product identity f_{n+m-2} = f_n f_m + f_{n-1} f_{m-1}") {
  const std::vector<UnivariatePoly> f = f_family(24);
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m)
      CHECK(f[n + m - 2] == f[n] * f[m] + f[n - 1] * f[m - 1]);
}

TEST_CASE("link to Chebyshev second kind: f_{n+2}(2iz) = i^n U_n(z)") {
  const std::vector<UnivariatePoly> f = f_family(12);
  std::vector<UnivariatePoly> u(11);
  u[0] = UnivariatePoly(Integer(1));
  u[1] = UnivariatePoly::monomial(1, 2);
  for (int n = 2; n <= 10; ++n) u[n] = UnivariatePoly::monomial(1, 2) * u[n - 1] - u[n - 2];

  std::mt19937_64 rng(7);
  for (int sample = 0; sample < 20; ++sample) {
    const double z = 2.0 * static_cast<double>(rng() >> 11) / 9007199254740992.0 - 1.0;
    for (int n = 0; n <= 10; ++n) {
      const Complex i_pow_n = std::pow(Complex(0, 1), n);
      const Complex lhs = f[n + 2].eval(Complex(0, 2 * z));
      const Complex rhs = i_pow_n * u[n].eval(Complex(z, 0));
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("parity: f_n(0) is 1 for even n, 0 for odd n") {
  for (int n = 0; n <= 16; ++n)
    CHECK(f_poly(n).eval(Rational(0)) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("closed form via xi - 1/xi at rational points") {
  std::mt19937_64 rng(11);
  for (int sample = 0; sample < 20; ++sample) {
    const long num = static_cast<long>(rng() % 17) - 8;
    const long den = 1 + static_cast<long>(rng() % 7);
    if (num == 0) continue;
    const Rational xi(num, den);
    const Rational gamma = xi - 1 / xi;
    for (int n = 0; n <= 12; ++n) {
      const Rational lhs = f_poly(n).eval(gamma) * (xi + 1 / xi);
      const Rational rhs = rat_pow(xi, n - 1) - rat_pow(-xi, 1 - n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("even-index coefficient formula") {
  for (int k = 1; k <= 8; ++k) {
    UnivariatePoly expected;
    for (int l = 0; l <= k - 1; ++l)
      expected.add_term(2 * l, binomial(static_cast<unsigned long>(k + l - 1),
                                        static_cast<unsigned long>(2 * l)));
    CHECK(f_poly(2 * k) == expected);
  }
}

TEST_CASE("exact Gaussian value at 2i") {
  CHECK(f_eval_2i(0) == std::pair<Integer, Integer>{1, 0});
  CHECK(f_eval_2i(1) == std::pair<Integer, Integer>{0, 0});
  CHECK(f_eval_2i(2) == std::pair<Integer, Integer>{1, 0});
  CHECK(f_eval_2i(3) == std::pair<Integer, Integer>{0, 2});
  // Cross-check against the recursion evaluated numerically.
  for (int n = 0; n <= 14; ++n) {
    const auto [re, im] = f_eval_2i(n);
    const Complex direct = f_poly(n).eval(Complex(0, 2));
    CHECK(std::abs(direct - Complex(re.get_d(), im.get_d())) < 1e-9);
  }
}

TEST_CASE("exact division") {
  const UnivariatePoly one(Integer(1));
  const UnivariatePoly beta = UnivariatePoly::variable();
  const UnivariatePoly one_minus = one - beta;

  SUBCASE("(1 - beta^2) / (1 - beta) = 1 + beta") {
    UnivariatePoly p(Integer(1));
    p.add_term(2, -1);
    CHECK(divide_exact(p, one_minus) == one + beta);
  }
  SUBCASE("division by one is the identity") {
    const UnivariatePoly p = from_coeffs({3, -2, 0, 7});
    CHECK(divide_exact(p, one) == p);
  }
  SUBCASE("remainder raises") {
    UnivariatePoly p(Integer(1));
    p.add_term(2, 1);  // beta^2 + 1
    CHECK_THROWS_AS(divide_exact(p, one + beta), DivisibilityError);
  }
  SUBCASE("division by zero raises") {
    CHECK_THROWS_AS(divide_exact(one, UnivariatePoly()), InputError);
  }
}

TEST_CASE("theta of K4 specialized at 2i divides by (1-beta)^2") {
  // 1 + 4b^3 + 3b^4 + 6b^5 g^2 + b^6 g^4
  BivariatePoly theta(Integer(1));
  theta.add_term(3, 0, 4);
  theta.add_term(4, 0, 3);
  theta.add_term(5, 2, 6);
  theta.add_term(6, 4, 1);
  const UnivariatePoly at_2i = theta.substitute_second_squared(Integer(-4));
  const UnivariatePoly one_minus = UnivariatePoly(Integer(1)) - UnivariatePoly::variable();
  CHECK(divide_exact(at_2i, one_minus.pow(2)) == from_coeffs({1, 2, 3, 8, 16}));
}

TEST_CASE("bivariate substitution and parity helpers") {
  BivariatePoly p(Integer(2));
  p.add_term(1, 2, 3);
  p.add_term(0, 4, -1);
  CHECK(p.even_in_second());
  UnivariatePoly at0 = p.substitute_second(0);
  CHECK(at0 == UnivariatePoly(Integer(2)));
  BivariatePoly odd = p;
  odd.add_term(2, 1, 5);
  CHECK(!odd.even_in_second());
  CHECK_THROWS_AS(odd.substitute_second_squared(Integer(-4)), InputError);
}

TEST_CASE("rational and complex evaluation agree") {
  const UnivariatePoly p = from_coeffs({1, -3, 0, 2});
  const Rational exact = p.eval(Rational(3, 2));
  const Complex approx = p.eval(Complex(1.5, 0.0));
  CHECK(std::abs(exact.get_d() - approx.real()) < 1e-12);
}

TEST_CASE("JSON serialization uses decimal strings and sorted exponents") {
  UnivariatePoly p;
  p.add_term(0, Integer(1));
  p.add_term(5, Integer("123456789012345678901234567890"));
  const nlohmann::json j = polynomial_to_json(p, "beta");
  CHECK(j["vars"] == nlohmann::json::array({"beta"}));
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["beta"] == 0);
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][1]["beta"] == 5);
  CHECK(j["terms"][1]["coeff"] == "123456789012345678901234567890");

  BivariatePoly q;
  q.add_term(2, 4, Integer(-6));
  const nlohmann::json jq = polynomial_to_json(q, "beta", "gamma");
  CHECK(jq["terms"][0]["beta"] == 2);
  CHECK(jq["terms"][0]["gamma"] == 4);
  CHECK(jq["terms"][0]["coeff"] == "-6");
}
