#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "psu/gcd_spectrum.hpp"
#include "psu/natural.hpp"

namespace psu {

/*
 * Sorted index set I of {2..n} naming the square-free monomial over the
 * odd-degree generators; generator r sits in degree 2r-1. The same index
 * sets serve both the source and target bases of the covering map.
 */
class ExteriorMonomial {
 public:
  ExteriorMonomial(std::uint64_t n, std::vector<std::uint64_t> indices);

  static ExteriorMonomial unit(std::uint64_t n) { return {n, {}}; }
  static ExteriorMonomial full_set(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  const std::vector<std::uint64_t>& indices() const { return indices_; }
  std::uint64_t degree() const;  // sum of 2r-1 over the index set
  bool disjoint_from(const ExteriorMonomial& other) const;

  friend bool operator==(const ExteriorMonomial&,
                         const ExteriorMonomial&) = default;
  friend auto operator<=>(const ExteriorMonomial& a,
                          const ExteriorMonomial& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.indices_ <=> b.indices_;
  }

 private:
  std::uint64_t n_;
  std::vector<std::uint64_t> indices_;
};

/*
 * Integer linear combination of square-free monomials; sparse, zero terms
 * never stored.
 */
class FreeClass {
 public:
  explicit FreeClass(std::uint64_t n) : n_(n) {}

  std::uint64_t n() const { return n_; }
  const std::map<ExteriorMonomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Merges into the existing term; a cancelled term is dropped.
  void add_term(const ExteriorMonomial& m, const Int& coeff);

  friend bool operator==(const FreeClass&, const FreeClass&) = default;

 private:
  std::uint64_t n_;
  std::map<ExteriorMonomial, Int> terms_;
};

// Per-generator multipliers of the covering-induced map: generator r is
// scaled by a_{n,r}.
class CstarMap {
 public:
  explicit CstarMap(AnkTable multipliers);
  static CstarMap for_n(std::uint64_t n);  // from the closed-form a-table

  std::uint64_t n() const { return multipliers_.n(); }
  const AnkTable& multipliers() const { return multipliers_; }
  const Natural& multiplier(std::uint64_t r) const {
    return multipliers_.at(r);
  }

 private:
  AnkTable multipliers_;
};

struct ScaledMonomial {
  Natural coefficient;
  ExteriorMonomial monomial;
};

// Image of the monomial indexed by I: (prod_{r in I} a_{n,r}, same set).
ScaledMonomial cstar_monomial(const CstarMap& map, const ExteriorMonomial& I);

// Linear extension of cstar_monomial; zero results are dropped.
FreeClass cstar_class(const CstarMap& map, const FreeClass& x);

// Image multiplier of the full set {2..n}; this is the covering degree n.
Natural top_degree_multiplier(std::uint64_t n);

// Number of square-free monomials: 2^{n-1} subsets of {2..n}.
Natural free_rank(std::uint64_t n);

enum class PoincareVariant { SU, U };

// Coefficients by degree of prod_{r=2..n} (1 + t^{2r-1}); the U variant
// multiplies in the extra degree-1 generator (1 + t).
std::vector<Natural> poincare_polynomial(std::uint64_t n, PoincareVariant v);

}  // namespace psu
