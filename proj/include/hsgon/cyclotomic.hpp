#pragma once

// Exact arithmetic in Q(zeta_h), zeta_h = omega = e^(2 pi i / h), with
// elements stored as polynomials in omega reduced modulo Phi_h. For h = 1
// the field is Q and omega = 1.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hsgon/matrix.hpp"
#include "hsgon/ratfun.hpp"

namespace hsgon {

struct CyclotomicPoly {
  unsigned order = 1;
  std::vector<Integer> coeffs;  // ascending, monic

  std::size_t degree() const noexcept { return coeffs.size() - 1; }
  PolyQ as_poly() const;
};

// Phi_h, by exact division of x^h - 1 by Phi_d for the proper divisors d.
CyclotomicPoly cyclotomic_poly(unsigned h);

unsigned euler_phi(unsigned h);
// Distinct prime divisors, ascending.
std::vector<unsigned> prime_factors(unsigned h);
std::vector<unsigned> divisors(unsigned h);

class CycNum {
 public:
  explicit CycNum(unsigned order);  // zero
  CycNum(unsigned order, const Rational& value);
  // Reduces an arbitrary polynomial in omega.
  static CycNum from_poly(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const noexcept { return order_; }
  // Canonical representative, degree < phi(h), trailing zeros stripped.
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Set when the value lies in Q.
  bool is_rational() const noexcept { return coeffs_.size() <= 1; }
  Rational rational_value() const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const Rational& c, const CycNum& a);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }

  CycNum inverse() const;
  // Complex conjugate, omega -> omega^-1.
  CycNum conj() const;

  bool operator==(const CycNum& other) const {
    return order_ == other.order_ && coeffs_ == other.coeffs_;
  }

  // Image under omega -> e^(2 pi i / h). Rendering only.
  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  CycNum(unsigned order, std::shared_ptr<const CyclotomicPoly> modulus)
      : order_(order), modulus_(std::move(modulus)) {}
  void reduce();
  void require_same_field(const CycNum& other) const;

  unsigned order_;
  std::shared_ptr<const CyclotomicPoly> modulus_;
  std::vector<Rational> coeffs_;
};

// omega^k in Q(zeta_h); k may be negative.
CycNum omega_power(unsigned h, long k);

// P(q omega^k) in Q(zeta_h).
CycNum eval_poly(const PolyQ& p, const Rational& q, unsigned h, long k);
// P(z) for an arbitrary field element, by Horner.
CycNum eval_poly(const PolyQ& p, const CycNum& z);

// Residue of f at the simple pole (1/n) omega^l, computed as M(z0) / D'(z0).
// Throws NotASimplePole unless D(z0) = 0 and D'(z0) != 0.
CycNum residue_at_pole(const RationalFunction& f, unsigned n, unsigned h, long l);

}  // namespace hsgon
