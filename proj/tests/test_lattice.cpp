#include <cstdlib>

#include "doctest.h"

#include "brieskorn/errors.hpp"
#include "brieskorn/lattice.hpp"
#include "brieskorn/parse.hpp"
#include "support/support.hpp"

using namespace brieskorn;

namespace {

std::vector<Monomial> order_of(const std::vector<std::string>& names,
                               const std::vector<std::string>& vars) {
  std::vector<Monomial> out;
  for (const auto& n : names) out.emplace_back(Exponents(1, 0), parse_monomial(n, vars).x);
  return out;
}

SparsePoly s_poly(const std::vector<Rational>& coeffs) {
  SparsePoly out;
  for (std::uint32_t k = 0; k < coeffs.size(); ++k) out.add_term(Monomial(Exponents{k}, Exponents{}), coeffs[k]);
  return out;
}

}  // namespace

TEST_CASE("T255 matrix in the printed basis order") {
  auto fam = testing::family_of("x^5+x^2*y^2+y^5", {"x", "y"});
  auto order = order_of({"y^5", "y^4", "y^3", "y^2", "x*y", "y", "x^4", "x^3", "x^2", "x", "1"},
                        {"x", "y"});
  LatticeMatrix a = lattice_matrix(fam, 2, order);
  auto [a0, a1] = saito_truncation(a);

  RationalMatrix e0(11, 11), e1(11, 11);
  e0(0, 10) = Rational(-1, 2);
  const Rational diag[] = {Rational(3, 2),  Rational(13, 10), Rational(11, 10), Rational(9, 10),
                           Rational(1),     Rational(7, 10),  Rational(13, 10), Rational(11, 10),
                           Rational(9, 10), Rational(7, 10),  Rational(1, 2)};
  for (std::size_t i = 0; i < 11; ++i) e1(i, i) = diag[i];
  e1(0, 4) = Rational(-25, 4);
  e1(1, 9) = Rational(-75, 16);
  e1(2, 8) = Rational(-1, 4);
  e1(6, 5) = Rational(-75, 16);
  e1(7, 3) = Rational(-1, 4);
  CHECK(a0 == e0);
  CHECK(a1 == e1);
  CHECK(format_entry(a(0, 10)) == "-1/2");
  CHECK(format_entry(a(10, 10)) == "0+1/2*s");
  CHECK(format_entry(a(0, 4)) == "0-25/4*s");
}

TEST_CASE("permutation round trip and thread independence") {
  auto fam = testing::family_of("x^4+x^2*y^3+y^7", {"x", "y"});
  LatticeMatrix seq = lattice_matrix(fam, 4, std::nullopt, 1);
  LatticeMatrix par = lattice_matrix(fam, 4, std::nullopt, 4);
  CHECK(seq == par);
  std::vector<Monomial> reversed(seq.basis.rbegin(), seq.basis.rend());
  LatticeMatrix p = permute(seq, reversed);
  CHECK(p(0, 0) == seq(seq.size() - 1, seq.size() - 1));
  CHECK(permute(p, seq.basis) == seq);
  std::vector<Monomial> dup(seq.basis.size(), seq.basis[0]);
  CHECK_THROWS_AS(permute(seq, dup), Error);
}

TEST_CASE("Morse function: A = s") {
  auto fam = testing::family_of("x^2+y^2", {"x", "y"});
  for (std::uint64_t n : {1u, 2u, 3u, 6u}) {
    LatticeMatrix a = lattice_matrix(fam, n);
    REQUIRE(a.size() == 1);
    CHECK(a(0, 0) == truncate(s_poly({0, 1}), n));
  }
}

TEST_CASE("quasi-homogeneous Euler law") {
  for (int k = 1; k <= 6; ++k) {
    auto fam = testing::family_of("x^" + std::to_string(k + 1) + "+y^2", {"x", "y"});
    auto expected = testing::euler_matrix(fam, {Rational(1, k + 1), Rational(1, 2)}, 4);
    CHECK(lattice_matrix(fam, 4) == expected);
  }
  auto cubic = testing::family_of("x^3+y^3", {"x", "y"});
  CHECK(lattice_matrix(cubic, 4) == testing::euler_matrix(cubic, {Rational(1, 3), Rational(1, 3)}, 4));
  // Basis 1, x, y, xy has entries 2/3, 1, 1, 4/3 in some order.
  std::vector<Rational> diag;
  auto a = lattice_matrix(cubic, 2);
  for (std::size_t i = 0; i < a.size(); ++i) diag.push_back(s_coefficients(a(i, i), 2)[1]);
  std::sort(diag.begin(), diag.end());
  CHECK(diag == std::vector<Rational>{Rational(2, 3), 1, 1, Rational(4, 3)});

  auto e7 = testing::family_of("x^3+y^4", {"x", "y"});
  CHECK(lattice_matrix(e7, 5) == testing::euler_matrix(e7, {Rational(1, 3), Rational(1, 4)}, 5));
  auto three = testing::family_of("x^2+y^3+z^4", {"x", "y", "z"});
  CHECK(lattice_matrix(three, 3) ==
        testing::euler_matrix(three, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}, 3));
}

TEST_CASE("entry formatting and coefficients") {
  CHECK(format_entry(SparsePoly()) == "0");
  CHECK(format_entry(s_poly({Rational(-1, 2)})) == "-1/2");
  CHECK(format_entry(s_poly({0, Rational(1, 2)})) == "0+1/2*s");
  CHECK(format_entry(s_poly({3, 0, Rational(-2, 7)})) == "3-2/7*s^2");
  CHECK(s_coefficients(s_poly({1, 2, 3}), 2) == std::vector<Rational>{1, 2});
}

TEST_CASE("saito truncation needs two orders") {
  auto fam = testing::family_of("x^2+y^2", {"x", "y"});
  CHECK_THROWS_AS(saito_truncation(lattice_matrix(fam, 1)), Error);
}

TEST_CASE("basis coordinates reject terms outside the span") {
  auto fam = testing::family_of("x^3+y^3", {"x", "y"});
  CHECK_THROWS_AS(basis_coordinates(parse_poly("x^2", fam.ord), fam.milnor.m), Error);
  auto col = basis_coordinates(parse_poly("3*x*y + s*x*y + 2*s", fam.ord), fam.milnor.m);
  CHECK(col.back() == s_poly({0, 2}));
}

TEST_CASE("Brieskorn families are free") {
  for (const char* f : {"x^5+x^2*y^2+y^5", "x^3+y^4", "x^4+x^2*y^3+y^7", "x^3*y+x^2*y^3+y^8"}) {
    auto fam = testing::family_of(f, {"x", "y"});
    CHECK(relations(fam, -4).empty());
  }
  CHECK_THROWS_AS(relations(testing::family_of("x^2+y^2", {"x", "y"}), 0), Error);
}

TEST_CASE("a family with torsion has a relation") {
  // f = (x, x), D = (d, 0) in one variable: the second generator gives
  // F_2(1) - F_1(1) = s, so s * 1 vanishes in H.
  auto ord = OrderingSpec::uniform({"x"});
  SparsePoly x = parse_poly("x", ord);
  DiffOpMatrix D;
  D.rows.push_back({DiffOp::partial(0, 1, 1), DiffOp()});
  auto fam = build_general_family({x, x}, D, ord);
  CHECK(fam.mu() == 1);
  CHECK(fam.ord.s_weights() == std::vector<Rational>{-2});
  CHECK(fam.n_k(-2) == -2);
  CHECK(relations(fam, -1).empty());
  auto rel = relations(fam, -2);
  REQUIRE(rel.size() >= 1);
  for (const auto& r : rel) {
    CHECK(r.size() == 1);
    CHECK(r.begin()->first.s_order() == 1);
    CHECK(r.begin()->first.x_total_degree() == 0);
  }
}
