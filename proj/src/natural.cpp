#include "psu/natural.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace psu {

Int floor_int(const Rational& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Natural::Natural(Int v) : v_(std::move(v)) {
  if (sgn(v_) < 0)
    throw std::domain_error("Natural: negative value " + v_.get_str());
}

Natural::Natural(const std::string& decimal) : v_(decimal, 10) {
  if (sgn(v_) < 0)
    throw std::domain_error("Natural: negative value " + decimal);
}

Natural Natural::operator-(const Natural& o) const {
  if (v_ < o.v_)
    throw std::domain_error("Natural: subtraction underflow " + str() + " - " +
                            o.str());
  return Natural(Int(v_ - o.v_));
}

Natural Natural::operator%(const Natural& o) const {
  if (o.is_zero()) throw std::domain_error("Natural: modulo by zero");
  Int r;
  mpz_mod(r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  return Natural(std::move(r));
}

Natural Natural::div_exact(const Natural& d) const {
  if (d.is_zero()) throw std::domain_error("Natural: division by zero");
  if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()))
    throw std::domain_error("Natural: " + d.str() + " does not divide " +
                            str());
  Int q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Natural(std::move(q));
}

bool Natural::divides(const Natural& m) const {
  if (is_zero()) return m.is_zero();
  return mpz_divisible_p(m.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
}

Natural Natural::pow(std::uint64_t e) const {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Natural(std::move(r));
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64())
    throw std::domain_error("Natural: " + str() + " does not fit in 64 bits");
  return mpz_get_ui(v_.get_mpz_t());
}

Natural gcd(const Natural& a, const Natural& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(g));
}

Natural lcm(const Natural& a, const Natural& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(l));
}

std::ostream& operator<<(std::ostream& os, const Natural& v) {
  return os << v.mpz();
}

}  // namespace psu
