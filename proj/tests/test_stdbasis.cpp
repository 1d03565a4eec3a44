#include <algorithm>
#include <random>

#include "doctest.h"

#include "brieskorn/errors.hpp"
#include "brieskorn/parse.hpp"
#include "brieskorn/stdbasis.hpp"
#include "support/support.hpp"

using namespace brieskorn;

namespace {

std::vector<SparsePoly> polys(const std::vector<std::string>& texts, const OrderingSpec& ord) {
  std::vector<SparsePoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t, ord));
  return out;
}

// g_k == sum_i f_i U[i][k]
bool transform_holds(const std::vector<SparsePoly>& f, const StandardBasisResult& sb) {
  for (std::size_t k = 0; k < sb.size(); ++k) {
    SparsePoly sum;
    for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * sb.U[i][k];
    if (sum != sb.g[k]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("T255 standard basis with transformation") {
  auto ord = OrderingSpec::uniform({"x", "y"});
  SparsePoly f = parse_poly("x^5+x^2*y^2+y^5", ord);
  auto df = jacobian(f, 2);
  CHECK(df == polys({"2*x*y^2+5*x^4", "2*x^2*y+5*y^4"}, ord));
  auto sb = standard_basis_with_transform(df, ord);
  CHECK(sb.g == polys({"2*x^2*y+5*y^4", "2*x*y^2+5*x^4", "5*x^5-5*y^5", "10*y^6+25*x^3*y^4"}, ord));
  REQUIRE(sb.U.size() == 2);
  CHECK(sb.U[0] == polys({"0", "1", "x", "-2*x*y"}, ord));
  CHECK(sb.U[1] == polys({"1", "0", "-y", "2*y^2+5*x^3"}, ord));
  CHECK(transform_holds(df, sb));
  CHECK(sb.staircase == std::vector<Monomial>{parse_monomial("x^2*y", {"x", "y"}),
                                              parse_monomial("x*y^2", {"x", "y"}),
                                              parse_monomial("x^5", {"x", "y"}),
                                              parse_monomial("y^6", {"x", "y"})});

  auto milnor = monomial_basis(sb, ord);
  CHECK(milnor.mu == 11);
  std::vector<std::string> names;
  for (const auto& m : milnor.m) names.push_back(to_string(m, ord));
  CHECK(names == std::vector<std::string>{"y^5", "y^4", "x^4", "y^3", "x^3", "y^2", "x*y", "x^2",
                                          "y", "x", "1"});
}

TEST_CASE("weak normal form division identity") {
  auto ord = OrderingSpec::uniform({"x", "y"});
  auto sb = standard_basis_with_transform(jacobian(parse_poly("x^5+x^2*y^2+y^5", ord), 2), ord);
  SparsePoly p = parse_poly("x^3*y^2 + x^2*y + 3*x^6 - y^2", ord);
  auto div = weak_normal_form(p, sb, ord, Rational(-30));
  SparsePoly sum = div.remainder + div.unreduced;
  for (std::size_t k = 0; k < sb.size(); ++k) sum += sb.g[k] * div.quotients[k];
  CHECK(sum == p);
  for (const auto& [m, c] : div.remainder) {
    for (const auto& lead : sb.staircase) CHECK_FALSE(divides(lead.x, m.x));
  }
  for (const auto& [m, c] : div.unreduced) CHECK(ord.x_degree(m.x) < -30);
}

TEST_CASE("Morse and A_k Milnor numbers") {
  auto ord = OrderingSpec::uniform({"x", "y"});
  CHECK(milnor_number(parse_poly("x^2+y^2", ord), ord) == 1);
  for (int k = 1; k <= 6; ++k) {
    CHECK(milnor_number(parse_poly("x^" + std::to_string(k + 1) + "+y^2", ord), ord) == std::size_t(k));
  }
}

TEST_CASE("Brieskorn-Pham and T_pqr Milnor numbers against closed forms") {
  auto ord = OrderingSpec::uniform({"x", "y", "z"});
  for (int a = 2; a <= 5; ++a) {
    for (int b = a; b <= 6; ++b) {
      const std::string text = "x^" + std::to_string(a) + "+y^" + std::to_string(b) + "+z^3";
      CHECK(milnor_number(parse_poly(text, ord), ord) == std::size_t((a - 1) * (b - 1) * 2));
    }
  }
  // x^p + y^q + z^r + xyz with 1/p + 1/q + 1/r < 1 has mu = p + q + r - 1.
  CHECK(milnor_number(parse_poly("x^3+y^4+z^5+x*y*z", ord), ord) == 11);
  CHECK(milnor_number(parse_poly("x^4+y^4+z^4+x*y*z", ord), ord) == 11);
  CHECK(milnor_number(parse_poly("x^3+y^3+z^7+x*y*z", ord), ord) == 12);
}

TEST_CASE("semi-quasihomogeneous perturbations keep mu: property") {
  // f = x^a + y^b + terms of weighted degree > 1 has mu = (a-1)(b-1).
  std::mt19937_64 rng(17);
  auto ord = OrderingSpec::uniform({"x", "y"});
  auto rev = OrderingSpec::uniform({"x", "y"}, TieBreak::RevLex);
  auto swapped = OrderingSpec::uniform({"y", "x"});
  for (int k = 0; k < 120; ++k) {
    std::uniform_int_distribution<int> exps(2, 7);
    const int a = exps(rng), b = exps(rng);
    SparsePoly f = parse_poly("x^" + std::to_string(a) + "+y^" + std::to_string(b), ord);
    std::uniform_int_distribution<std::uint32_t> e(0, 8);
    for (int t = 0; t < 3; ++t) {
      Exponents x{e(rng), e(rng)};
      if (x[0] * b + x[1] * a > std::uint32_t(a * b)) f.add_term(Monomial({}, x), testing::random_rational(rng));
    }
    const std::size_t mu = std::size_t((a - 1) * (b - 1));
    CHECK(milnor_number(f, ord) == mu);
    CHECK(milnor_number(f, rev) == mu);
    SparsePoly g;
    for (const auto& [m, c] : f) g.add_term(Monomial({}, Exponents{m.x[1], m.x[0]}), c);
    CHECK(milnor_number(g, swapped) == mu);

    auto df = jacobian(f, 2);
    auto sb = standard_basis_with_transform(df, ord);
    CHECK(transform_holds(df, sb));
  }
}

TEST_CASE("standard basis leads generate the leading ideal: property") {
  // Every element of the ideal, here random combinations, has a lead
  // divisible by some staircase lead.
  std::mt19937_64 rng(23);
  auto ord = OrderingSpec::uniform({"x", "y"});
  auto df = jacobian(parse_poly("x^4+x^2*y^3+y^7", ord), 2);
  auto sb = standard_basis_with_transform(df, ord);
  CHECK(transform_holds(df, sb));
  for (int k = 0; k < 300; ++k) {
    SparsePoly p = df[0] * testing::random_poly(rng, 2, 3, 5, 0) +
                   df[1] * testing::random_poly(rng, 2, 3, 5, 0);
    if (p.is_zero()) continue;
    Monomial lead = leading_data(p, ord).lexp;
    CHECK(std::any_of(sb.staircase.begin(), sb.staircase.end(),
                      [&](const Monomial& s) { return divides(s.x, lead.x); }));
  }
}

TEST_CASE("input validation") {
  auto ord = OrderingSpec::uniform({"x", "y"});
  CHECK_THROWS_AS(require_critical_point(parse_poly("x+y^2", ord)), NotACriticalPoint);
  CHECK_THROWS_AS(require_critical_point(parse_poly("1+x^2", ord)), NotACriticalPoint);
  CHECK_THROWS_AS(require_critical_point(SparsePoly()), NotACriticalPoint);
  CHECK_THROWS_AS(milnor_number(parse_poly("x^2*y^2", ord), ord), NonIsolatedSingularity);
  CHECK_THROWS_AS(milnor_number(parse_poly("x^2", ord), ord), NonIsolatedSingularity);
  std::vector<SparsePoly> zero{SparsePoly()};
  CHECK_THROWS_AS(standard_basis_with_transform(zero, ord), Error);
}
