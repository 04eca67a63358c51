#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psu/gcd_spectrum.hpp"
#include "psu/natural.hpp"

namespace psu {

/*
 * The truncated graded ring Z[w]/<b_{n,k} w^k, 1 <= k <= n>: the additive
 * order of w^k is b_{n,k} for k = 1..n-1 and w^n = 0 (b_{n,n} = 1). Degree 0
 * is free.
 */
class JRingPresentation {
 public:
  explicit JRingPresentation(const BnkTable& b);

  std::uint64_t n() const { return n_; }
  // b_{n,k}, the order of w^k. 1 <= k <= n-1.
  const Natural& order_of_power(std::uint64_t k) const;

  friend bool operator==(const JRingPresentation&,
                         const JRingPresentation&) = default;

 private:
  std::uint64_t n_;
  std::vector<Natural> orders_;  // k = 1..n-1
};

/*
 * c_0 + c_1 w + ... + c_{n-1} w^{n-1} with 0 <= c_k < b_{n,k} for k >= 1;
 * c_0 is unconstrained (the free part). Coefficients at degrees where
 * b_{n,k} = 1 are structurally zero.
 */
struct JRingElement {
  std::uint64_t n = 0;
  std::vector<Int> coeffs;  // degree 0..n-1

  const Int& at_degree(std::uint64_t d) const { return coeffs.at(d); }
  bool is_zero() const;

  friend bool operator==(const JRingElement&, const JRingElement&) = default;
};

class JRing {
 public:
  explicit JRing(JRingPresentation pres);
  explicit JRing(std::uint64_t n);  // closed-form orders

  const JRingPresentation& presentation() const { return pres_; }
  std::uint64_t n() const { return pres_.n(); }

  JRingElement zero() const;
  JRingElement one() const;
  // coeff * w^degree, reduced. degree <= n-1 (w^n and above vanish).
  JRingElement monomial(const Int& coeff, std::uint64_t degree) const;
  JRingElement from_coeffs(std::vector<Int> coeffs) const;

  JRingElement add(const JRingElement& a, const JRingElement& b) const;
  JRingElement negate(const JRingElement& a) const;
  JRingElement multiply(const JRingElement& a, const JRingElement& b) const;

  // Least m >= 1 with m * e = 0; nullopt when the free part is nonzero.
  std::optional<Natural> element_order(const JRingElement& e) const;

  // C(n,k) w^{k-1}, reduced. 2 <= k <= n.
  JRingElement theta_image(std::uint64_t k) const;

 private:
  void check_element(const JRingElement& e) const;
  Int reduce(const Int& c, std::uint64_t degree) const;

  JRingPresentation pres_;
};

/*
 * Splitting of the torsion ideal into one summand per prime factor:
 * for p^r || n the relations are <p^r w, p^{r-1} w^p, ..., w^{p^r}>, stored
 * as (coefficient, power-of-w) pairs. In degree k the p-summand contributes
 * a cyclic group of order p^{r - l(k)}, and the degreewise product over all
 * primes reassembles b_{n,k}.
 */
struct PrimaryDecomposition {
  struct Summand {
    Natural prime;
    std::uint64_t exponent = 0;                        // r
    std::vector<std::pair<Natural, Natural>> relations;  // (coeff, w-power)
    friend bool operator==(const Summand&, const Summand&) = default;
  };

  std::uint64_t n = 0;
  std::vector<Summand> summands;
  // The decomposition is stated for n > 2; n = 2 is handled by the same
  // construction and flagged here.
  bool extension_below_3 = false;

  // p_i^{r_i - l(i,k)} for summand i in degree k.
  Natural degree_order(std::size_t summand_index, std::uint64_t k) const;
  // Product of the summand degree orders in degree k (equals b_{n,k}).
  Natural combined_degree_order(std::uint64_t k) const;

  friend bool operator==(const PrimaryDecomposition&,
                         const PrimaryDecomposition&) = default;
};

// Relation lists per prime, with the degreewise product re-checked against
// the brute-force gcd table (mismatch -> std::logic_error).
PrimaryDecomposition chow_primary_decomposition(std::uint64_t n);

// Same, but without the embedded cross-check; callers that already hold a
// reference table (the verification driver) compare on their side.
PrimaryDecomposition build_primary_decomposition(std::uint64_t n);

// Images of the degree-2 presentation generators under w_k -> k w: n-1
// copies of w and one -(n-1) w. Entry r is the e_r coefficient
// C(n-1,r) - (n-1) C(n-1,r-1); entry 1 is always 0.
std::vector<Int> schubert_generator_coefficients(std::uint64_t n);

// Degreewise orders of the quotient by the generator images: in degree k
// the order is gcd(n, |E_1|, ..., |E_k|), zero coefficients skipped.
BnkTable schubert_quotient_oracle(std::uint64_t n);

// Surviving order of the degree-2k base class after the differentials kill
// <C(n,i) a^i : i <= k>: gcd{C(n,i) : 1 <= i <= k}. Arithmetically this is
// the running-gcd definition again; kept as a separate route and compared.
BnkTable baum_browder_orders(std::uint64_t n);

}  // namespace psu
