#include "psu/covering_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace psu {

ExteriorMonomial::ExteriorMonomial(std::uint64_t n,
                                   std::vector<std::uint64_t> indices)
    : n_(n), indices_(std::move(indices)) {
  if (n_ < 2) throw std::domain_error("ExteriorMonomial: n must be >= 2");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 2 || indices_[i] > n_)
      throw std::domain_error("ExteriorMonomial: index out of [2, n]");
    if (i > 0 && indices_[i - 1] >= indices_[i])
      throw std::domain_error("ExteriorMonomial: indices must be strictly "
                              "increasing");
  }
}

ExteriorMonomial ExteriorMonomial::full_set(std::uint64_t n) {
  std::vector<std::uint64_t> all;
  for (std::uint64_t r = 2; r <= n; ++r) all.push_back(r);
  return {n, std::move(all)};
}

std::uint64_t ExteriorMonomial::degree() const {
  std::uint64_t d = 0;
  for (std::uint64_t r : indices_) d += 2 * r - 1;
  return d;
}

bool ExteriorMonomial::disjoint_from(const ExteriorMonomial& other) const {
  std::vector<std::uint64_t> common;
  std::set_intersection(indices_.begin(), indices_.end(),
                        other.indices_.begin(), other.indices_.end(),
                        std::back_inserter(common));
  return common.empty();
}

void FreeClass::add_term(const ExteriorMonomial& m, const Int& coeff) {
  if (m.n() != n_)
    throw std::invalid_argument("FreeClass: monomial has mismatched n");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CstarMap::CstarMap(AnkTable multipliers) : multipliers_(std::move(multipliers)) {}

CstarMap CstarMap::for_n(std::uint64_t n) {
  return CstarMap(ank_closed_form(n));
}

ScaledMonomial cstar_monomial(const CstarMap& map, const ExteriorMonomial& I) {
  if (I.n() != map.n())
    throw std::invalid_argument("cstar_monomial: mismatched n");
  Natural coeff = 1;
  for (std::uint64_t r : I.indices()) coeff *= map.multiplier(r);
  return {std::move(coeff), I};
}

FreeClass cstar_class(const CstarMap& map, const FreeClass& x) {
  if (x.n() != map.n())
    throw std::invalid_argument("cstar_class: mismatched n");
  FreeClass out(x.n());
  for (const auto& [mono, c] : x.terms()) {
    const ScaledMonomial im = cstar_monomial(map, mono);
    out.add_term(im.monomial, c * im.coefficient.mpz());
  }
  return out;
}

Natural top_degree_multiplier(std::uint64_t n) {
  return cstar_monomial(CstarMap::for_n(n), ExteriorMonomial::full_set(n))
      .coefficient;
}

Natural free_rank(std::uint64_t n) {
  if (n < 2) throw std::domain_error("free_rank: n must be >= 2");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n - 1);
  return Natural(std::move(r));
}

std::vector<Natural> poincare_polynomial(std::uint64_t n, PoincareVariant v) {
  if (n < 2) throw std::domain_error("poincare_polynomial: n must be >= 2");
  // Top degree: sum_{r=2..n} (2r-1) = n^2 - 1, plus 1 for the U factor.
  const std::uint64_t top = n * n - 1 + (v == PoincareVariant::U ? 1 : 0);
  std::vector<Natural> c(top + 1, Natural(0));
  c[0] = 1;
  auto mul_in = [&](std::uint64_t m) {
    // multiply by (1 + t^m), in place from the top down
    for (std::uint64_t d = top; d >= m; --d) c[d] += c[d - m];
  };
  for (std::uint64_t r = 2; r <= n; ++r) mul_in(2 * r - 1);
  if (v == PoincareVariant::U) mul_in(1);
  return c;
}

}  // namespace psu
