#include "psu/gcd_spectrum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace psu {

namespace {

void require_n_at_least_2(std::uint64_t n, const char* who) {
  if (n < 2) throw std::domain_error(std::string(who) + ": n must be >= 2");
}

}  // namespace

BnkTable::BnkTable(std::uint64_t n, std::vector<Natural> b)
    : n_(n), b_(std::move(b)) {
  require_n_at_least_2(n_, "BnkTable");
  if (b_.size() != n_) throw std::invalid_argument("BnkTable: size != n");
  if (b_.front() != Natural(n_))
    throw std::invalid_argument("BnkTable: b_1 != n");
  if (b_.back() != Natural(1)) throw std::invalid_argument("BnkTable: b_n != 1");
  for (std::size_t i = 1; i < b_.size(); ++i) {
    if (!b_[i].divides(b_[i - 1]))
      throw std::invalid_argument("BnkTable: divisibility chain broken at k=" +
                                  std::to_string(i + 1));
  }
}

const Natural& BnkTable::at(std::uint64_t k) const {
  if (k < 1 || k > n_) throw std::domain_error("BnkTable: k out of range");
  return b_[k - 1];
}

AnkTable::AnkTable(std::uint64_t n, std::vector<Natural> a)
    : n_(n), a_(std::move(a)) {
  require_n_at_least_2(n_, "AnkTable");
  if (a_.size() != n_ - 1)
    throw std::invalid_argument("AnkTable: size != n - 1");
  for (const auto& v : a_)
    if (v.is_zero()) throw std::invalid_argument("AnkTable: entry < 1");
  if (product() != Natural(n_))
    throw std::invalid_argument("AnkTable: product != n");
}

const Natural& AnkTable::at(std::uint64_t k) const {
  if (k < 2 || k > n_) throw std::domain_error("AnkTable: k out of range");
  return a_[k - 2];
}

Natural AnkTable::product() const {
  Natural p = 1;
  for (const auto& v : a_) p *= v;
  return p;
}

PrimePowerPartition::PrimePowerPartition(std::uint64_t n,
                                         std::vector<std::uint64_t> q0,
                                         std::vector<Block> blocks)
    : n_(n), q0_(std::move(q0)), blocks_(std::move(blocks)) {
  require_n_at_least_2(n_, "PrimePowerPartition");
  std::vector<bool> seen(n_ + 1, false);
  auto mark = [&](std::uint64_t k) {
    if (k < 2 || k > n_)
      throw std::invalid_argument("PrimePowerPartition: member out of range");
    if (seen[k])
      throw std::invalid_argument("PrimePowerPartition: blocks overlap at " +
                                  std::to_string(k));
    seen[k] = true;
  };
  for (std::uint64_t k : q0_) mark(k);
  for (const auto& b : blocks_)
    for (std::uint64_t k : b.members) mark(k);
  for (std::uint64_t k = 2; k <= n_; ++k)
    if (!seen[k])
      throw std::invalid_argument("PrimePowerPartition: " + std::to_string(k) +
                                  " uncovered");
}

std::optional<Natural> PrimePowerPartition::block_prime(std::uint64_t k) const {
  if (k < 2 || k > n_)
    throw std::domain_error("PrimePowerPartition: k out of range");
  for (const auto& b : blocks_)
    if (std::binary_search(b.members.begin(), b.members.end(), k))
      return b.prime;
  return std::nullopt;
}

BnkTable bnk_bruteforce(std::uint64_t n) {
  require_n_at_least_2(n, "bnk_bruteforce");
  std::vector<Natural> b;
  b.reserve(n);
  Int g = 0;
  for_each_binomial(n, [&](std::uint64_t, const Int& c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    b.emplace_back(g);
  });
  return BnkTable(n, std::move(b));
}

std::uint64_t power_level(std::uint64_t p, std::uint64_t r, std::uint64_t k) {
  if (p < 2 || k < 1) throw std::domain_error("power_level: bad arguments");
  std::uint64_t l = 0;
  std::uint64_t q = 1;
  // q = p^l <= k throughout; stop once l hits r or p^{l+1} would exceed k.
  while (l < r && q <= k / p) {
    q *= p;
    ++l;
  }
  return l;
}

BnkTable bnk_closed_form(std::uint64_t n) {
  require_n_at_least_2(n, "bnk_closed_form");
  const Factorization fact = factorize(Natural(n));
  std::vector<Natural> b;
  b.reserve(n);
  for (std::uint64_t k = 1; k <= n; ++k) {
    Natural v = 1;
    for (const auto& pp : fact.entries()) {
      const std::uint64_t p = pp.prime.to_u64();
      const std::uint64_t l = power_level(p, pp.exponent, k);
      v *= pp.prime.pow(pp.exponent - l);
    }
    b.push_back(std::move(v));
  }
  return BnkTable(n, std::move(b));
}

AnkTable ank_from_bnk(const BnkTable& t) {
  std::vector<Natural> a;
  a.reserve(t.n() - 1);
  for (std::uint64_t k = 2; k <= t.n(); ++k) {
    if (!t.at(k).divides(t.at(k - 1)))
      throw std::logic_error("ank_from_bnk: chain quotient not integral at k=" +
                             std::to_string(k));
    a.push_back(t.at(k - 1).div_exact(t.at(k)));
  }
  return AnkTable(t.n(), std::move(a));
}

AnkTable ank_closed_form(std::uint64_t n) {
  require_n_at_least_2(n, "ank_closed_form");
  const PrimePowerPartition part = partition(n);
  std::vector<Natural> a;
  a.reserve(n - 1);
  for (std::uint64_t k = 2; k <= n; ++k) {
    const auto p = part.block_prime(k);
    a.push_back(p ? *p : Natural(1));
  }
  return AnkTable(n, std::move(a));
}

PrimePowerPartition partition(std::uint64_t n) {
  require_n_at_least_2(n, "partition");
  const Factorization fact = factorize(Natural(n));
  std::vector<PrimePowerPartition::Block> blocks;
  std::vector<bool> in_block(n + 1, false);
  for (const auto& pp : fact.entries()) {
    const std::uint64_t p = pp.prime.to_u64();
    PrimePowerPartition::Block b{pp.prime, {}};
    std::uint64_t q = 1;
    for (std::uint64_t e = 1; e <= pp.exponent; ++e) {
      q *= p;  // q = p^e <= p^r <= n, no overflow
      b.members.push_back(q);
      in_block[q] = true;
    }
    blocks.push_back(std::move(b));
  }
  std::vector<std::uint64_t> q0;
  for (std::uint64_t k = 2; k <= n; ++k)
    if (!in_block[k]) q0.push_back(k);
  return PrimePowerPartition(n, std::move(q0), std::move(blocks));
}

bool strict_inequality_check(std::uint64_t n, std::uint64_t p, std::uint64_t s,
                             std::uint64_t k) {
  require_n_at_least_2(n, "strict_inequality_check");
  const Natural np(n), pp(p);
  if (!is_prime(pp) || n % p != 0)
    throw std::domain_error("strict_inequality_check: p must divide n");
  const std::uint64_t r = ord(np, pp);
  if (s < 1 || s > r)
    throw std::domain_error("strict_inequality_check: need 1 <= s <= r");
  const Natural ps = pp.pow(s);
  const std::uint64_t ps_u = ps.to_u64();
  if (k < 1 || k >= ps_u)
    throw std::domain_error("strict_inequality_check: need 1 <= k < p^s");
  const std::uint64_t lhs = legendre_factorial_order(ps, pp) +
                            legendre_factorial_order(Natural(n - ps_u), pp);
  const std::uint64_t rhs = legendre_factorial_order(Natural(k), pp) +
                            legendre_factorial_order(Natural(n - k), pp);
  return lhs > rhs;
}

bool no_integer_in_interval_check(std::uint64_t n, std::uint64_t p,
                                  std::uint64_t s, std::uint64_t j) {
  require_n_at_least_2(n, "no_integer_in_interval_check");
  const Natural np(n), pp(p);
  if (!is_prime(pp))
    throw std::domain_error("no_integer_in_interval_check: p must be prime");
  const Natural ps = pp.pow(s);
  if (!ps.divides(np))
    throw std::domain_error("no_integer_in_interval_check: p^s must divide n");
  if (j <= s)
    throw std::domain_error("no_integer_in_interval_check: need j > s");
  // m in ((n-p^s)/q, n/q) for integer m iff floor((n-p^s)/q) + 1 <= floor((n-1)/q).
  const Natural q = pp.pow(j);
  Int lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), (np - ps).mpz().get_mpz_t(), q.mpz().get_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), Int(np.mpz() - 1).get_mpz_t(),
             q.mpz().get_mpz_t());
  const bool contains = lo + 1 <= hi;
  return !contains;
}

}  // namespace psu
