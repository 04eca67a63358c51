#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "psu/covering_map.hpp"
#include "psu/gcd_spectrum.hpp"

using psu::CstarMap;
using psu::ExteriorMonomial;
using psu::FreeClass;
using psu::Int;
using psu::Natural;

TEST_CASE("monomial index sets are validated") {
  CHECK_THROWS_AS(ExteriorMonomial(12, {1}), std::domain_error);
  CHECK_THROWS_AS(ExteriorMonomial(12, {13}), std::domain_error);
  CHECK_THROWS_AS(ExteriorMonomial(12, {3, 3}), std::domain_error);
  CHECK_THROWS_AS(ExteriorMonomial(12, {5, 3}), std::domain_error);
  CHECK(ExteriorMonomial(12, {2, 3}).degree() == 3 + 5);
  CHECK(ExteriorMonomial::unit(12).degree() == 0);
  // top degree: sum of 2r-1 for r = 2..n is n^2 - 1
  for (std::uint64_t n = 2; n <= 40; ++n)
    CHECK(ExteriorMonomial::full_set(n).degree() == n * n - 1);
}

TEST_CASE("cstar on monomials") {
  const auto map12 = CstarMap::for_n(12);
  CHECK(psu::cstar_monomial(map12, ExteriorMonomial::unit(12)).coefficient ==
        Natural(1));
  const auto im = psu::cstar_monomial(map12, ExteriorMonomial(12, {2, 3}));
  CHECK(im.coefficient == Natural(6));
  CHECK(im.monomial == ExteriorMonomial(12, {2, 3}));
  CHECK(psu::cstar_monomial(map12, ExteriorMonomial::full_set(12))
            .coefficient == Natural(12));
}

TEST_CASE("cstar on classes") {
  const auto map12 = CstarMap::for_n(12);
  FreeClass zero(12);
  CHECK(psu::cstar_class(map12, zero).is_zero());

  FreeClass x(12);
  x.add_term(ExteriorMonomial(12, {2}), Int(1));   // zeta_3
  x.add_term(ExteriorMonomial(12, {3}), Int(-1));  // -zeta_5
  const auto image = psu::cstar_class(map12, x);
  REQUIRE(image.terms().size() == 2);
  CHECK(image.terms().at(ExteriorMonomial(12, {2})) == Int(2));
  CHECK(image.terms().at(ExteriorMonomial(12, {3})) == Int(-3));

  FreeClass scalar(12);
  scalar.add_term(ExteriorMonomial::unit(12), Int(5));
  const auto scalar_image = psu::cstar_class(map12, scalar);
  CHECK(scalar_image.terms().at(ExteriorMonomial::unit(12)) == Int(5));
}

TEST_CASE("class arithmetic drops cancelled terms") {
  FreeClass x(6);
  x.add_term(ExteriorMonomial(6, {2, 4}), Int(3));
  x.add_term(ExteriorMonomial(6, {2, 4}), Int(-3));
  CHECK(x.is_zero());
  x.add_term(ExteriorMonomial(6, {3}), Int(0));
  CHECK(x.is_zero());
  CHECK_THROWS_AS(x.add_term(ExteriorMonomial(7, {3}), Int(1)),
                  std::invalid_argument);
}

TEST_CASE("cstar is multiplicative across disjoint monomials") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 2 + rng() % 39;
    const auto map = CstarMap::for_n(n);
    std::vector<std::uint64_t> left, right;
    for (std::uint64_t r = 2; r <= n; ++r) {
      switch (rng() % 3) {
        case 0: left.push_back(r); break;
        case 1: right.push_back(r); break;
        default: break;
      }
    }
    const ExteriorMonomial I(n, left), J(n, right);
    REQUIRE(I.disjoint_from(J));
    std::vector<std::uint64_t> both = left;
    both.insert(both.end(), right.begin(), right.end());
    std::sort(both.begin(), both.end());
    const ExteriorMonomial IJ(n, both);
    CHECK(psu::cstar_monomial(map, IJ).coefficient ==
          psu::cstar_monomial(map, I).coefficient *
              psu::cstar_monomial(map, J).coefficient);
  }
}

TEST_CASE("top degree multiplier is the covering degree") {
  CHECK(psu::top_degree_multiplier(12) == Natural(12));
  CHECK(psu::top_degree_multiplier(2) == Natural(2));
  CHECK(psu::top_degree_multiplier(7) == Natural(7));
  for (std::uint64_t n = 2; n <= 300; ++n)
    CHECK(psu::top_degree_multiplier(n) == Natural(n));
}

TEST_CASE("multipliers from either a-table route coincide") {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    const CstarMap closed = CstarMap::for_n(n);
    const CstarMap via_def(psu::ank_from_bnk(psu::bnk_bruteforce(n)));
    for (std::uint64_t r = 2; r <= n; ++r)
      CHECK(closed.multiplier(r) == via_def.multiplier(r));
  }
}

TEST_CASE("free rank") {
  CHECK(psu::free_rank(2) == Natural(2));
  CHECK(psu::free_rank(4) == Natural(8));
  CHECK(psu::free_rank(12) == Natural(2048));
  for (std::uint64_t n = 2; n <= 64; ++n)
    CHECK(psu::free_rank(n) == Natural(2).pow(n - 1));
}

TEST_CASE("poincare polynomial worked examples") {
  using psu::PoincareVariant;
  const auto su2 = psu::poincare_polynomial(2, PoincareVariant::SU);
  REQUIRE(su2.size() == 4);
  CHECK(su2[0] == Natural(1));
  CHECK(su2[1] == Natural(0));
  CHECK(su2[2] == Natural(0));
  CHECK(su2[3] == Natural(1));

  const auto su3 = psu::poincare_polynomial(3, PoincareVariant::SU);
  REQUIRE(su3.size() == 9);
  for (std::uint64_t d = 0; d <= 8; ++d)
    CHECK(su3[d] == Natural(d == 0 || d == 3 || d == 5 || d == 8 ? 1 : 0));

  const auto u3 = psu::poincare_polynomial(3, PoincareVariant::U);
  REQUIRE(u3.size() == 10);
  for (std::uint64_t d = 0; d <= 9; ++d) {
    const bool hit = d == 0 || d == 1 || d == 3 || d == 4 || d == 5 ||
                     d == 6 || d == 8 || d == 9;
    CHECK(u3[d] == Natural(hit ? 1 : 0));
  }
}

TEST_CASE("poincare polynomial: degree and rank bookkeeping") {
  using psu::PoincareVariant;
  for (std::uint64_t n = 2; n <= 40; ++n) {
    const auto su = psu::poincare_polynomial(n, PoincareVariant::SU);
    CHECK(su.size() == n * n);  // top degree n^2 - 1
    CHECK(su.back() == Natural(1));
    Natural total = 0;
    for (const auto& c : su) total += c;
    CHECK(total == psu::free_rank(n));

    const auto u = psu::poincare_polynomial(n, PoincareVariant::U);
    CHECK(u.size() == n * n + 1);
    Natural u_total = 0;
    for (const auto& c : u) u_total += c;
    CHECK(u_total == Natural(2).pow(n));
  }
}
