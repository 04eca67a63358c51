#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "psu/valuation.hpp"

using psu::Natural;

namespace {

// Addition-only Pascal triangle row, independent of the multiplicative route.
std::vector<Natural> pascal_row(std::uint64_t n) {
  std::vector<Natural> row{Natural(1)};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<Natural> next(i + 1, Natural(1));
    for (std::uint64_t k = 1; k < i; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return row;
}

// Valuation by repeated division, independent of mpz_remove.
std::uint64_t slow_ord(Natural m, const Natural& p) {
  std::uint64_t e = 0;
  while ((m % p).is_zero() && !m.is_zero()) {
    m = m.div_exact(p);
    ++e;
  }
  return e;
}

const std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                      23, 29, 31, 37, 41, 43, 47};

}  // namespace

TEST_CASE("Natural arithmetic stays in the naturals") {
  CHECK(Natural(7) - Natural(3) == Natural(4));
  CHECK_THROWS_AS(Natural(3) - Natural(7), std::domain_error);
  CHECK(Natural(12).div_exact(Natural(4)) == Natural(3));
  CHECK_THROWS_AS(Natural(12).div_exact(Natural(5)), std::domain_error);
  CHECK_THROWS_AS(Natural(12).div_exact(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(Natural(psu::Int(-1)), std::domain_error);
  CHECK(Natural(3).divides(Natural(12)));
  CHECK_FALSE(Natural(5).divides(Natural(12)));
  CHECK(Natural(0).divides(Natural(0)));
  CHECK(Natural(2).pow(10) == Natural(1024));
  CHECK(Natural("123456789012345678901234567890").str() ==
        "123456789012345678901234567890");
  CHECK_FALSE(Natural("123456789012345678901234567890").fits_u64());
  CHECK_THROWS_AS(Natural("123456789012345678901234567890").to_u64(),
                  std::domain_error);
}

TEST_CASE("Natural modulo and gcd") {
  CHECK(Natural(66) % Natural(12) == Natural(6));
  CHECK(psu::gcd(Natural(12), Natural(66)) == Natural(6));
  CHECK(psu::lcm(Natural(4), Natural(6)) == Natural(12));
  CHECK_THROWS_AS(Natural(5) % Natural(0), std::domain_error);
}

TEST_CASE("factorize worked examples") {
  const auto f12 = psu::factorize(Natural(12));
  REQUIRE(f12.entries().size() == 2);
  CHECK(f12.entries()[0] == psu::PrimePower{Natural(2), 2});
  CHECK(f12.entries()[1] == psu::PrimePower{Natural(3), 1});

  const auto f7 = psu::factorize(Natural(7));
  REQUIRE(f7.entries().size() == 1);
  CHECK(f7.entries()[0] == psu::PrimePower{Natural(7), 1});

  // 360: frozen from a separate trial-division pass
  const auto f360 = psu::factorize(Natural(360));
  REQUIRE(f360.entries().size() == 3);
  CHECK(f360.entries()[0] == psu::PrimePower{Natural(2), 3});
  CHECK(f360.entries()[1] == psu::PrimePower{Natural(3), 2});
  CHECK(f360.entries()[2] == psu::PrimePower{Natural(5), 1});
}

TEST_CASE("factorize domain errors") {
  CHECK_THROWS_AS(psu::factorize(Natural(0)), std::domain_error);
  CHECK_THROWS_AS(psu::factorize(Natural(1)), std::domain_error);
  CHECK_THROWS_AS(psu::factorize(Natural(100), 50), std::domain_error);
  CHECK_THROWS_AS(psu::factorize(Natural("123456789123456789123")),
                  std::domain_error);
}

TEST_CASE("factorize/reconstruct round trips") {
  for (std::uint64_t m = 2; m <= 2000; ++m)
    CHECK(psu::factorize(Natural(m)).reconstruct() == Natural(m));

  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<std::uint64_t> dist(2, 999'999'999);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t m = dist(rng);
    CHECK(psu::factorize(Natural(m)).reconstruct() == Natural(m));
  }

  // the other direction: factorization -> integer -> same factorization
  std::uniform_int_distribution<std::size_t> pick(0, 14);
  for (int i = 0; i < 200; ++i) {
    std::vector<psu::PrimePower> entries;
    std::uint64_t seen = 0;
    std::uint64_t product = 1;
    for (int j = 0; j < 3; ++j) {
      const std::uint64_t p = kSmallPrimes[pick(rng)];
      if (seen & (1ull << p)) continue;
      std::uint64_t e = 1 + rng() % 3;
      std::uint64_t pe = 1;
      for (std::uint64_t x = 0; x < e; ++x) pe *= p;
      // keep the reconstruction inside the factorize bound
      while (e > 1 && product > 900'000'000 / pe) {
        --e;
        pe /= p;
      }
      if (product > 900'000'000 / pe) continue;
      product *= pe;
      seen |= 1ull << p;
      entries.push_back({Natural(p), e});
    }
    if (entries.empty()) continue;
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.prime < b.prime; });
    const psu::Factorization f{entries};
    CHECK(psu::factorize(f.reconstruct()).entries() == entries);
  }
}

TEST_CASE("is_prime against a sieve") {
  std::vector<bool> composite(10'000, false);
  for (std::uint64_t p = 2; p < composite.size(); ++p)
    if (!composite[p])
      for (std::uint64_t q = p * p; q < composite.size(); q += p)
        composite[q] = true;
  for (std::uint64_t v = 0; v < composite.size(); ++v)
    CHECK(psu::is_prime(Natural(v)) == (v >= 2 && !composite[v]));
}

TEST_CASE("ord worked examples and errors") {
  CHECK(psu::ord(Natural(12), Natural(2)) == 2);
  CHECK(psu::ord(Natural(7), Natural(2)) == 0);
  CHECK(psu::ord(Natural(2).pow(30), Natural(2)) == 30);
  CHECK_THROWS_AS(psu::ord(Natural(0), Natural(2)), std::domain_error);
  CHECK_THROWS_AS(psu::ord(Natural(12), Natural(4)), std::domain_error);
}

TEST_CASE("ord shifts by one prime and ignores the others") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ull);
  for (int i = 0; i < 300; ++i) {
    const Natural m(dist(rng));
    const Natural p(kSmallPrimes[rng() % 15]);
    Natural q = p;
    while (q == p) q = Natural(kSmallPrimes[rng() % 15]);
    CHECK(psu::ord(m * p, p) == psu::ord(m, p) + 1);
    CHECK(psu::ord(m * q, p) == psu::ord(m, p));
  }
}

TEST_CASE("ord_gcd worked examples") {
  CHECK(psu::ord_gcd({Natural(12), Natural(66)}, Natural(2)) == 1);
  CHECK(psu::ord_gcd({Natural(8)}, Natural(2)) == 3);
  CHECK(psu::ord_gcd({Natural(3), Natural(5)}, Natural(2)) == 0);
  CHECK_THROWS_AS(psu::ord_gcd({}, Natural(2)), std::domain_error);
  CHECK_THROWS_AS(psu::ord_gcd({Natural(0)}, Natural(2)), std::domain_error);
}

TEST_CASE("legendre factorial order: examples and the summed-ord oracle") {
  CHECK(psu::legendre_factorial_order(Natural(10), Natural(2)) == 8);
  CHECK(psu::legendre_factorial_order(Natural(9), Natural(3)) == 4);
  CHECK(psu::legendre_factorial_order(Natural(0), Natural(5)) == 0);
  CHECK_THROWS_AS(psu::legendre_factorial_order(Natural(10), Natural(6)),
                  std::domain_error);

  // summed valuations, sampled (the full bound runs in the acceptance suite)
  for (std::uint64_t p : {2ull, 3ull, 5ull, 31ull, 97ull}) {
    std::uint64_t summed = 0;
    for (std::uint64_t i = 1; i <= 500; ++i) {
      summed += slow_ord(Natural(i), Natural(p));
      CHECK(psu::legendre_factorial_order(Natural(i), Natural(p)) == summed);
    }
  }
}

TEST_CASE("binomial examples against the Pascal-row oracle") {
  CHECK(psu::binomial(Natural(12), Natural(4)) == Natural(495));
  CHECK(psu::binomial(Natural(57), Natural(0)) == Natural(1));
  CHECK(psu::binomial(Natural(57), Natural(1)) == Natural(57));
  CHECK_THROWS_AS(psu::binomial(Natural(4), Natural(5)), std::domain_error);

  for (std::uint64_t m : {12ull, 8ull, 30ull, 61ull}) {
    const auto row = pascal_row(m);
    for (std::uint64_t k = 0; k <= m; ++k)
      CHECK(psu::binomial(Natural(m), Natural(k)) == row[k]);
  }
}

TEST_CASE("binomial handles the configured width comfortably") {
  const Natural big = psu::binomial(Natural(5000), Natural(2500));
  CHECK(big == psu::binomial(Natural(4999), Natural(2499)) +
                   psu::binomial(Natural(4999), Natural(2500)));
}

TEST_CASE("for_each_binomial matches binomial") {
  psu::for_each_binomial(40, [](std::uint64_t k, const psu::Int& c) {
    CHECK(Natural(c) == psu::binomial(Natural(40), Natural(k)));
  });
}

TEST_CASE("ord_binomial examples and direct-valuation oracle") {
  CHECK(psu::ord_binomial(Natural(12), Natural(2), Natural(2)) == 1);
  CHECK(psu::ord_binomial(Natural(8), Natural(4), Natural(2)) == 1);
  CHECK(psu::ord_binomial(Natural(19), Natural(0), Natural(3)) == 0);
  CHECK_THROWS_AS(psu::ord_binomial(Natural(3), Natural(5), Natural(2)),
                  std::domain_error);

  for (std::uint64_t m = 0; m <= 120; ++m)
    for (std::uint64_t k = 0; k <= m; ++k)
      for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull})
        CHECK(psu::ord_binomial(Natural(m), Natural(k), Natural(p)) ==
              slow_ord(psu::binomial(Natural(m), Natural(k)), Natural(p)));
}

TEST_CASE("floor inequality: worked examples") {
  using psu::Rational;
  auto v = psu::floor_inequality_holds(Rational(3, 2), Rational(5, 2),
                                       Natural(1), Natural(3));
  CHECK(v.holds);
  CHECK(v.strict);

  v = psu::floor_inequality_holds(Rational(2), Rational(2), Natural(1),
                                  Natural(3));
  CHECK(v.holds);
  CHECK_FALSE(v.strict);

  v = psu::floor_inequality_holds(Rational(7, 3), Rational(5, 3), Natural(2),
                                  Natural(2));
  CHECK(v.holds);
  CHECK(v.strict);

  CHECK_THROWS_AS(psu::floor_inequality_holds(Rational(1, 2), Rational(1, 2),
                                              Natural(1), Natural(3)),
                  std::domain_error);
  CHECK_THROWS_AS(psu::floor_inequality_holds(Rational(-1, 2), Rational(9, 2),
                                              Natural(1), Natural(3)),
                  std::domain_error);
}

TEST_CASE("floor inequality: randomized sweep") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::uint64_t> small(1, 10'000);
  std::uniform_int_distribution<std::uint64_t> dens(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t m = small(rng), nn = small(rng);
    const std::uint64_t den = dens(rng);
    // x uniform in (0, m+nn) with denominator den
    std::uniform_int_distribution<std::uint64_t> nums(1, (m + nn) * den - 1);
    psu::Rational x(nums(rng), den);
    x.canonicalize();
    psu::Rational y = psu::Rational(m + nn) - x;
    const auto verdict =
        psu::floor_inequality_holds(x, y, Natural(m), Natural(nn));
    CHECK(verdict.holds);
    if (x.get_den() != 1) CHECK(verdict.strict);
  }
}
