#include "psu/torsion_ring.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "psu/valuation.hpp"

namespace psu {

JRingPresentation::JRingPresentation(const BnkTable& b) : n_(b.n()) {
  orders_.reserve(n_ - 1);
  for (std::uint64_t k = 1; k <= n_ - 1; ++k) orders_.push_back(b.at(k));
}

const Natural& JRingPresentation::order_of_power(std::uint64_t k) const {
  if (k < 1 || k > n_ - 1)
    throw std::domain_error("JRingPresentation: degree out of range");
  return orders_[k - 1];
}

bool JRingElement::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

JRing::JRing(JRingPresentation pres) : pres_(std::move(pres)) {}

JRing::JRing(std::uint64_t n) : pres_(bnk_closed_form(n)) {}

void JRing::check_element(const JRingElement& e) const {
  if (e.n != n())
    throw std::invalid_argument("JRing: element belongs to n=" +
                                std::to_string(e.n) + ", ring has n=" +
                                std::to_string(n()));
  if (e.coeffs.size() != n())
    throw std::invalid_argument("JRing: element has wrong width");
}

Int JRing::reduce(const Int& c, std::uint64_t degree) const {
  if (degree == 0) return c;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(),
             pres_.order_of_power(degree).mpz().get_mpz_t());
  return r;
}

JRingElement JRing::zero() const {
  return JRingElement{n(), std::vector<Int>(n(), Int(0))};
}

JRingElement JRing::one() const {
  JRingElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

JRingElement JRing::monomial(const Int& coeff, std::uint64_t degree) const {
  JRingElement e = zero();
  if (degree < n()) e.coeffs[degree] = reduce(coeff, degree);
  return e;  // w^n and beyond are 0
}

JRingElement JRing::from_coeffs(std::vector<Int> coeffs) const {
  if (coeffs.size() > n())
    throw std::invalid_argument("JRing: too many coefficients");
  coeffs.resize(n(), Int(0));
  JRingElement e{n(), std::move(coeffs)};
  for (std::uint64_t d = 1; d < n(); ++d)
    e.coeffs[d] = reduce(e.coeffs[d], d);
  return e;
}

JRingElement JRing::add(const JRingElement& a, const JRingElement& b) const {
  check_element(a);
  check_element(b);
  JRingElement out = zero();
  for (std::uint64_t d = 0; d < n(); ++d)
    out.coeffs[d] = reduce(a.coeffs[d] + b.coeffs[d], d);
  return out;
}

JRingElement JRing::negate(const JRingElement& a) const {
  check_element(a);
  JRingElement out = zero();
  for (std::uint64_t d = 0; d < n(); ++d)
    out.coeffs[d] = reduce(-a.coeffs[d], d);
  return out;
}

JRingElement JRing::multiply(const JRingElement& a,
                             const JRingElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<Int> conv(n(), Int(0));
  for (std::uint64_t i = 0; i < n(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint64_t j = 0; i + j < n(); ++j) {
      if (b.coeffs[j] == 0) continue;
      conv[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  JRingElement out{n(), std::move(conv)};
  for (std::uint64_t d = 1; d < n(); ++d)
    out.coeffs[d] = reduce(out.coeffs[d], d);
  return out;
}

std::optional<Natural> JRing::element_order(const JRingElement& e) const {
  check_element(e);
  if (e.coeffs[0] != 0) return std::nullopt;  // free part: infinite order
  Natural order = 1;
  for (std::uint64_t d = 1; d < n(); ++d) {
    if (e.coeffs[d] == 0) continue;
    const Natural& m = pres_.order_of_power(d);
    const Natural cyclic = m.div_exact(gcd(Natural(e.coeffs[d]), m));
    order = lcm(order, cyclic);
  }
  return order;
}

JRingElement JRing::theta_image(std::uint64_t k) const {
  if (k < 2 || k > n())
    throw std::domain_error("theta_image: need 2 <= k <= n");
  return monomial(binomial(Natural(n()), Natural(k)).mpz(), k - 1);
}

Natural PrimaryDecomposition::degree_order(std::size_t summand_index,
                                           std::uint64_t k) const {
  const Summand& s = summands.at(summand_index);
  const std::uint64_t l =
      power_level(s.prime.to_u64(), s.exponent, k);
  return s.prime.pow(s.exponent - l);
}

Natural PrimaryDecomposition::combined_degree_order(std::uint64_t k) const {
  Natural prod = 1;
  for (std::size_t i = 0; i < summands.size(); ++i)
    prod *= degree_order(i, k);
  return prod;
}

PrimaryDecomposition build_primary_decomposition(std::uint64_t n) {
  if (n < 2)
    throw std::domain_error("primary decomposition: n must be >= 2");
  const Factorization fact = factorize(Natural(n));
  PrimaryDecomposition dec;
  dec.n = n;
  dec.extension_below_3 = (n == 2);
  for (const auto& pp : fact.entries()) {
    PrimaryDecomposition::Summand s;
    s.prime = pp.prime;
    s.exponent = pp.exponent;
    for (std::uint64_t j = 0; j <= pp.exponent; ++j)
      s.relations.emplace_back(pp.prime.pow(pp.exponent - j), pp.prime.pow(j));
    dec.summands.push_back(std::move(s));
  }
  return dec;
}

PrimaryDecomposition chow_primary_decomposition(std::uint64_t n) {
  PrimaryDecomposition dec = build_primary_decomposition(n);
  const BnkTable reference = bnk_bruteforce(n);
  for (std::uint64_t k = 1; k <= n - 1; ++k) {
    if (dec.combined_degree_order(k) != reference.at(k))
      throw std::logic_error(
          "chow_primary_decomposition: degreewise order mismatch at k=" +
          std::to_string(k));
  }
  return dec;
}

std::vector<Int> schubert_generator_coefficients(std::uint64_t n) {
  if (n < 2) throw std::domain_error("schubert oracle: n must be >= 2");
  std::vector<Int> e;
  e.reserve(n);
  Int prev = 1;  // C(n-1, r-1)
  Int cur;       // C(n-1, r)
  for (std::uint64_t r = 1; r <= n; ++r) {
    if (r <= n - 1) {
      cur = prev * static_cast<unsigned long>(n - r);
      mpz_divexact_ui(cur.get_mpz_t(), cur.get_mpz_t(), r);
    } else {
      cur = 0;
    }
    e.push_back(cur - static_cast<unsigned long>(n - 1) * prev);
    prev = cur;
  }
  return e;
}

BnkTable schubert_quotient_oracle(std::uint64_t n) {
  const std::vector<Int> coeffs = schubert_generator_coefficients(n);
  std::vector<Natural> b;
  b.reserve(n);
  Int g = static_cast<unsigned long>(n);  // the degree-2 group has order n
  for (const Int& e : coeffs) {
    if (e != 0) {
      Int a = abs(e);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    b.emplace_back(g);
  }
  return BnkTable(n, std::move(b));
}

BnkTable baum_browder_orders(std::uint64_t n) {
  if (n < 2) throw std::domain_error("baum_browder_orders: n must be >= 2");
  std::vector<Int> row;
  row.reserve(n);
  for_each_binomial(n, [&](std::uint64_t, const Int& c) { row.push_back(c); });
  std::vector<Natural> b;
  b.reserve(n);
  Int g = 0;
  for (const Int& c : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    b.emplace_back(g);
  }
  return BnkTable(n, std::move(b));
}

}  // namespace psu
