#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psu/natural.hpp"
#include "psu/valuation.hpp"

namespace psu {

/*
 * b_{n,k} for k = 1..n: the running gcd of the binomial row C(n,1..k).
 * Invariants checked on construction: b_1 = n, b_n = 1, and each entry
 * divides its predecessor.
 */
class BnkTable {
 public:
  BnkTable(std::uint64_t n, std::vector<Natural> b);

  std::uint64_t n() const { return n_; }
  const Natural& at(std::uint64_t k) const;  // 1 <= k <= n
  const std::vector<Natural>& values() const { return b_; }

  friend bool operator==(const BnkTable&, const BnkTable&) = default;

 private:
  std::uint64_t n_;
  std::vector<Natural> b_;
};

/*
 * a_{n,k} = b_{n,k-1} / b_{n,k} for k = 2..n. The constructor checks the
 * structural invariants (every entry >= 1, product = n); the deeper fact
 * that every entry is 1 or a prime factor of n is a *verified* property,
 * exercised by the verification driver and the tests, not assumed here.
 */
class AnkTable {
 public:
  AnkTable(std::uint64_t n, std::vector<Natural> a);

  std::uint64_t n() const { return n_; }
  const Natural& at(std::uint64_t k) const;  // 2 <= k <= n
  const std::vector<Natural>& values() const { return a_; }
  Natural product() const;

  friend bool operator==(const AnkTable&, const AnkTable&) = default;

 private:
  std::uint64_t n_;
  std::vector<Natural> a_;
};

/*
 * {2..n} split into Q_p blocks ({p, p^2, ..., p^r} for each p^r || n) and
 * the complement Q_0. Disjointness and coverage are checked on construction.
 */
class PrimePowerPartition {
 public:
  struct Block {
    Natural prime;
    std::vector<std::uint64_t> members;  // sorted: p, p^2, ..., p^r
    friend bool operator==(const Block&, const Block&) = default;
  };

  PrimePowerPartition(std::uint64_t n, std::vector<std::uint64_t> q0,
                      std::vector<Block> blocks);

  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& q0() const { return q0_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Prime of the block containing k, or nullopt for k in Q_0. 2 <= k <= n.
  std::optional<Natural> block_prime(std::uint64_t k) const;

  friend bool operator==(const PrimePowerPartition&,
                         const PrimePowerPartition&) = default;

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> q0_;
  std::vector<Block> blocks_;
};

// Running gcd over the actual binomial row. The definition, verbatim.
BnkTable bnk_bruteforce(std::uint64_t n);

// l(k) in the p-power filtration: r if k >= p^r, else the unique l with
// p^l <= k < p^{l+1}. Integer arithmetic only.
std::uint64_t power_level(std::uint64_t p, std::uint64_t r, std::uint64_t k);

// b_{n,k} = prod_i p_i^{r_i - l(i,k)}, from the factorization alone.
BnkTable bnk_closed_form(std::uint64_t n);

// Successive quotients of the divisibility chain. A non-exact division
// means the input table is broken and raises std::logic_error.
AnkTable ank_from_bnk(const BnkTable& t);

// a_{n,k} = p for k in Q_p(n), and 1 for k in Q_0(n).
AnkTable ank_closed_form(std::uint64_t n);

PrimePowerPartition partition(std::uint64_t n);

// Whether ord_p(p^s! (n-p^s)!) > ord_p(k! (n-k)!), evaluated by Legendre
// sums. Requires p^r || n with 1 <= s <= r and 1 <= k < p^s.
bool strict_inequality_check(std::uint64_t n, std::uint64_t p, std::uint64_t s,
                             std::uint64_t k);

// True when the open interval ((n - p^s)/p^j, n/p^j) contains no integer.
// Requires p prime, p^s | n, and j > s.
bool no_integer_in_interval_check(std::uint64_t n, std::uint64_t p,
                                  std::uint64_t s, std::uint64_t j);

}  // namespace psu
