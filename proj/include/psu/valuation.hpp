#pragma once

#include <cstdint>
#include <vector>

#include "psu/natural.hpp"

namespace psu {

struct PrimePower {
  Natural prime;
  std::uint64_t exponent = 0;  // >= 1 in a valid factorization
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/*
 * n = p_1^{r_1} ... p_t^{r_t} with p_1 < p_2 < ... < p_t, every p_i prime and
 * every r_i >= 1. The constructor re-checks all of that.
 */
class Factorization {
 public:
  explicit Factorization(std::vector<PrimePower> entries);

  const std::vector<PrimePower>& entries() const { return entries_; }
  std::size_t prime_count() const { return entries_.size(); }

  // Product of the p_i^{r_i}.
  Natural reconstruct() const;

  bool has_prime(const Natural& p) const;

 private:
  std::vector<PrimePower> entries_;
};

// Deterministic trial division (2, 3, then 6k+-1 up to sqrt p).
bool is_prime(const Natural& p);

inline constexpr std::uint64_t kDefaultFactorizeBound = 1'000'000'000;

// Trial division by candidates up to sqrt(n). n >= 2; inputs above `bound`
// are rejected up front (the bound caps the scan, it is not a width limit).
Factorization factorize(const Natural& n,
                        std::uint64_t bound = kDefaultFactorizeBound);

// Largest a with p^a | m. Requires m >= 1 and p prime.
std::uint64_t ord(const Natural& m, const Natural& p);

// ord_p of the gcd of a nonempty list, computed both as ord(gcd(ms), p) and
// as min_i ord(ms[i], p); the two routes are compared before returning.
std::uint64_t ord_gcd(const std::vector<Natural>& ms, const Natural& p);

// ord_p(n!) = sum_{k >= 1} floor(n / p^k), summed while p^k <= n.
std::uint64_t legendre_factorial_order(const Natural& n, const Natural& p);

// Exact C(n, k) via C(n,i) = C(n,i-1) * (n-i+1) / i. Requires k <= n.
Natural binomial(const Natural& n, const Natural& k);

// ord_p(C(n,k)) = ord_p(n!) - ord_p(k!) - ord_p((n-k)!), all by Legendre.
std::uint64_t ord_binomial(const Natural& n, const Natural& k,
                           const Natural& p);

// Calls f(k, C(n,k)) for k = 1..n, sharing one incrementally updated value.
template <typename F>
void for_each_binomial(std::uint64_t n, F&& f) {
  Int c = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), n - k + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
    f(k, static_cast<const Int&>(c));
  }
}

struct FloorVerdict {
  bool holds;   // floor(x) + floor(y) <= m + n
  bool strict;  // the inequality is strict
  friend bool operator==(const FloorVerdict&, const FloorVerdict&) = default;
};

// Requires x, y > 0 exact rationals with x + y = m + n. Evaluates
// floor(x) + floor(y) <= m + n and its strictness; a violation of the
// (provable) inequality throws std::logic_error.
FloorVerdict floor_inequality_holds(const Rational& x, const Rational& y,
                                    const Natural& m, const Natural& n);

}  // namespace psu
