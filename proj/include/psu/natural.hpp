#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace psu {

// Signed arbitrary-precision integer and exact rational, straight from GMP.
using Int = mpz_class;
using Rational = mpq_class;

// floor(q), exact.
Int floor_int(const Rational& q);

/*
 * Arbitrary-precision non-negative integer. Stays within the naturals by
 * construction: operator- throws on underflow, div_exact demands
 * divisibility, and constructing from a negative Int is rejected.
 */
class Natural {
 public:
  Natural() : v_(0) {}
  Natural(unsigned long v) : v_(v) {}  // implicit on purpose: literals
  explicit Natural(Int v);             // throws std::domain_error if v < 0
  explicit Natural(const std::string& decimal);

  const Int& mpz() const { return v_; }

  Natural& operator+=(const Natural& o) {
    v_ += o.v_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  Natural operator-(const Natural& o) const;  // throws on underflow
  Natural operator%(const Natural& o) const;  // o != 0

  // Quotient of an exact division; throws std::domain_error if d does not
  // divide *this or d == 0.
  Natural div_exact(const Natural& d) const;

  // Whether *this divides m. Zero divides only zero.
  bool divides(const Natural& m) const;

  Natural pow(std::uint64_t e) const;

  bool is_zero() const { return v_ == 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()) != 0; }
  std::uint64_t to_u64() const;  // throws std::domain_error if too wide
  std::string str() const { return v_.get_str(); }

  friend bool operator==(const Natural& a, const Natural& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0   ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  Int v_;
};

Natural gcd(const Natural& a, const Natural& b);
Natural lcm(const Natural& a, const Natural& b);

std::ostream& operator<<(std::ostream& os, const Natural& v);

}  // namespace psu
