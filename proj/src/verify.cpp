#include "psu/verify.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "psu/covering_map.hpp"
#include "psu/gcd_spectrum.hpp"
#include "psu/torsion_ring.hpp"
#include "psu/valuation.hpp"

namespace psu {

namespace {

const std::vector<std::string> kCheckNames = {
    "bnk_quadrangle",  "ank_integrality", "ank_closed_match",
    "ank_entry_form",  "ank_product",     "crt_degreewise",
    "top_multiplier",  "strict_inequality"};

std::int64_t as_i64(const Natural& v) {
  return static_cast<std::int64_t>(v.to_u64());
}

struct NOutcome {
  std::vector<std::pair<std::string, bool>> ran;  // (check, passed)
  std::optional<CheckFailure> failure;
};

// Runs the check battery for one n. Stops at the first failed check.
NOutcome check_one(std::uint64_t n, const VerifyOptions& opts) {
  NOutcome out;
  auto fail = [&](const std::string& check,
                  std::map<std::string, std::int64_t> witness) {
    witness["n"] = static_cast<std::int64_t>(n);
    out.ran.emplace_back(check, false);
    out.failure = CheckFailure{n, check, std::move(witness)};
  };
  auto pass = [&](const std::string& check) { out.ran.emplace_back(check, true); };

  const BnkTable brute = bnk_bruteforce(n);
  const BnkTable closed = bnk_closed_form(n);
  const BnkTable schubert = schubert_quotient_oracle(n);
  const BnkTable spectral = baum_browder_orders(n);
  const bool fault = opts.inject_fault_at && *opts.inject_fault_at == n;

  for (std::uint64_t k = 1; k <= n; ++k) {
    Natural closed_value = closed.at(k);
    if (fault && k == 1) closed_value += 1;
    if (!(brute.at(k) == closed_value && brute.at(k) == schubert.at(k) &&
          brute.at(k) == spectral.at(k))) {
      fail("bnk_quadrangle", {{"k", static_cast<std::int64_t>(k)},
                              {"b_brute", as_i64(brute.at(k))},
                              {"b_closed", as_i64(closed_value)},
                              {"b_schubert", as_i64(schubert.at(k))},
                              {"b_spectral", as_i64(spectral.at(k))}});
      return out;
    }
  }
  pass("bnk_quadrangle");

  std::optional<AnkTable> a_brute;
  try {
    a_brute = ank_from_bnk(brute);
  } catch (const std::logic_error&) {
    fail("ank_integrality", {});
    return out;
  }
  pass("ank_integrality");

  const AnkTable a_closed = ank_closed_form(n);
  for (std::uint64_t k = 2; k <= n; ++k) {
    if (a_brute->at(k) != a_closed.at(k)) {
      fail("ank_closed_match", {{"k", static_cast<std::int64_t>(k)},
                                {"a_brute", as_i64(a_brute->at(k))},
                                {"a_closed", as_i64(a_closed.at(k))}});
      return out;
    }
  }
  pass("ank_closed_match");

  const Factorization fact = factorize(Natural(n));
  for (std::uint64_t k = 2; k <= n; ++k) {
    const Natural& a = a_brute->at(k);
    if (a != Natural(1) && !fact.has_prime(a)) {
      fail("ank_entry_form", {{"k", static_cast<std::int64_t>(k)},
                              {"a", as_i64(a)}});
      return out;
    }
  }
  pass("ank_entry_form");

  if (a_brute->product() != Natural(n)) {
    fail("ank_product", {{"product", as_i64(a_brute->product())}});
    return out;
  }
  pass("ank_product");

  const PrimaryDecomposition dec = build_primary_decomposition(n);
  for (std::uint64_t k = 1; k <= n - 1; ++k) {
    const Natural reassembled = dec.combined_degree_order(k);
    if (reassembled != brute.at(k)) {
      fail("crt_degreewise", {{"k", static_cast<std::int64_t>(k)},
                              {"product", as_i64(reassembled)},
                              {"b", as_i64(brute.at(k))}});
      return out;
    }
  }
  pass("crt_degreewise");

  const Natural top = top_degree_multiplier(n);
  if (top != Natural(n)) {
    fail("top_multiplier", {{"multiplier", as_i64(top)}});
    return out;
  }
  pass("top_multiplier");

  if (n <= opts.ineq_bound) {
    for (const auto& pp : fact.entries()) {
      const std::uint64_t p = pp.prime.to_u64();
      std::uint64_t ps = 1;
      for (std::uint64_t s = 1; s <= pp.exponent; ++s) {
        ps *= p;
        for (std::uint64_t k = 1; k < ps; ++k) {
          if (!strict_inequality_check(n, p, s, k)) {
            fail("strict_inequality", {{"p", static_cast<std::int64_t>(p)},
                                       {"s", static_cast<std::int64_t>(s)},
                                       {"k", static_cast<std::int64_t>(k)}});
            return out;
          }
        }
      }
    }
    pass("strict_inequality");
  }

  return out;
}

}  // namespace

const std::vector<std::string>& verify_check_names() { return kCheckNames; }

VerifySummary verify_range(const VerifyOptions& opts) {
  if (opts.from < 2 || opts.from > opts.to)
    throw std::domain_error("verify: need 2 <= from <= to");

  unsigned workers = opts.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t count = opts.to - opts.from + 1;
  if (workers > count) workers = static_cast<unsigned>(count);

  VerifySummary summary;
  summary.values_checked = count;
  for (const auto& name : kCheckNames) {
    summary.check_passes[name] = 0;
    summary.check_failures[name] = 0;
  }

  std::mutex merge_mutex;
  std::atomic<std::uint64_t> next{opts.from};
  auto worker = [&] {
    VerifySummary local;
    for (;;) {
      const std::uint64_t n = next.fetch_add(1);
      if (n > opts.to) break;
      NOutcome outcome = check_one(n, opts);
      for (const auto& [name, ok] : outcome.ran)
        ++(ok ? local.check_passes[name] : local.check_failures[name]);
      if (outcome.failure) {
        ++local.failures;
        auto [it, inserted] = local.first_failure_by_check.emplace(
            outcome.failure->check, *outcome.failure);
        if (!inserted && outcome.failure->n < it->second.n)
          it->second = *outcome.failure;
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (const auto& [name, c] : local.check_passes)
      summary.check_passes[name] += c;
    for (const auto& [name, c] : local.check_failures)
      summary.check_failures[name] += c;
    summary.failures += local.failures;
    for (const auto& [name, failure] : local.first_failure_by_check) {
      auto [it, inserted] = summary.first_failure_by_check.emplace(name, failure);
      if (!inserted && failure.n < it->second.n) it->second = failure;
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& [name, failure] : summary.first_failure_by_check)
    if (!summary.first_failure || failure.n < summary.first_failure->n)
      summary.first_failure = failure;
  return summary;
}

}  // namespace psu
