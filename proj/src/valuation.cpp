#include "psu/valuation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace psu {

Factorization::Factorization(std::vector<PrimePower> entries)
    : entries_(std::move(entries)) {
  const Natural* prev = nullptr;
  for (const auto& pp : entries_) {
    if (pp.exponent < 1)
      throw std::invalid_argument("Factorization: exponent < 1");
    if (prev && !(*prev < pp.prime))
      throw std::invalid_argument("Factorization: primes not increasing");
    if (!is_prime(pp.prime))
      throw std::invalid_argument("Factorization: composite entry " +
                                  pp.prime.str());
    prev = &pp.prime;
  }
}

Natural Factorization::reconstruct() const {
  Natural r = 1;
  for (const auto& pp : entries_) r *= pp.prime.pow(pp.exponent);
  return r;
}

bool Factorization::has_prime(const Natural& p) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const PrimePower& pp) { return pp.prime == p; });
}

bool is_prime(const Natural& p) {
  if (!p.fits_u64()) throw std::domain_error("is_prime: input too large");
  const std::uint64_t v = p.to_u64();
  if (v < 2) return false;
  if (v < 4) return true;
  if (v % 2 == 0 || v % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= v / d; d += 6) {
    if (v % d == 0 || v % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(const Natural& n, std::uint64_t bound) {
  if (n < Natural(2)) throw std::domain_error("factorize: n must be >= 2");
  if (!n.fits_u64() || n.to_u64() > bound)
    throw std::domain_error("factorize: " + n.str() +
                            " exceeds the trial-division bound");
  std::uint64_t m = n.to_u64();
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t d) {
    if (m % d != 0) return;
    std::uint64_t e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    out.push_back({Natural(d), e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= m / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (m > 1) out.push_back({Natural(m), 1});
  return Factorization(std::move(out));
}

std::uint64_t ord(const Natural& m, const Natural& p) {
  if (m.is_zero()) throw std::domain_error("ord: undefined for m = 0");
  if (!is_prime(p)) throw std::domain_error("ord: p must be prime");
  Int reduced;
  return mpz_remove(reduced.get_mpz_t(), m.mpz().get_mpz_t(),
                    p.mpz().get_mpz_t());
}

std::uint64_t ord_gcd(const std::vector<Natural>& ms, const Natural& p) {
  if (ms.empty()) throw std::domain_error("ord_gcd: empty list");
  Natural g = 0;
  std::uint64_t min_ord = 0;
  bool first = true;
  for (const auto& m : ms) {
    if (m.is_zero()) throw std::domain_error("ord_gcd: entries must be >= 1");
    const std::uint64_t o = ord(m, p);
    min_ord = first ? o : std::min(min_ord, o);
    first = false;
    g = gcd(g, m);
  }
  const std::uint64_t via_gcd = ord(g, p);
  if (via_gcd != min_ord)
    throw std::logic_error("ord_gcd: gcd route and min route disagree");
  return via_gcd;
}

std::uint64_t legendre_factorial_order(const Natural& n, const Natural& p) {
  if (!is_prime(p)) throw std::domain_error("legendre: p must be prime");
  std::uint64_t sum = 0;
  Natural q = p;
  while (q <= n) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), n.mpz().get_mpz_t(), q.mpz().get_mpz_t());
    if (!mpz_fits_ulong_p(fl.get_mpz_t()))
      throw std::domain_error("legendre: order exceeds 64 bits");
    sum += mpz_get_ui(fl.get_mpz_t());
    q *= p;
  }
  return sum;
}

Natural binomial(const Natural& n, const Natural& k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  // Symmetry keeps the loop at min(k, n-k) steps.
  Natural kk = k;
  if (n - k < kk) kk = n - k;
  const std::uint64_t steps = kk.to_u64();
  Int c = 1;
  Int top = n.mpz();
  for (std::uint64_t i = 1; i <= steps; ++i) {
    c *= top - static_cast<unsigned long>(i - 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i);
  }
  return Natural(std::move(c));
}

std::uint64_t ord_binomial(const Natural& n, const Natural& k,
                           const Natural& p) {
  if (k > n) throw std::domain_error("ord_binomial: k > n");
  const std::uint64_t whole = legendre_factorial_order(n, p);
  const std::uint64_t parts =
      legendre_factorial_order(k, p) + legendre_factorial_order(n - k, p);
  return whole - parts;
}

FloorVerdict floor_inequality_holds(const Rational& x, const Rational& y,
                                    const Natural& m, const Natural& n) {
  Rational xc = x, yc = y;
  xc.canonicalize();
  yc.canonicalize();
  if (sgn(xc) <= 0 || sgn(yc) <= 0)
    throw std::domain_error("floor_inequality: x, y must be positive");
  const Int rhs = m.mpz() + n.mpz();
  if (xc + yc != Rational(rhs))
    throw std::domain_error("floor_inequality: x + y != m + n");
  const Int lhs = floor_int(xc) + floor_int(yc);
  if (lhs > rhs) throw std::logic_error("floor_inequality: bound violated");
  return {true, lhs < rhs};
}

}  // namespace psu
