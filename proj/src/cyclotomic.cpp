#include "hsgon/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "hsgon/error.hpp"

namespace hsgon {

namespace {

std::shared_ptr<const CyclotomicPoly> cached_cyclotomic(unsigned h) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicPoly>> cache;
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(h); it != cache.end()) return it->second;
  }
  // x^h - 1 divided by every Phi_d, d | h, d < h.
  std::vector<Rational> xh(h + 1, Rational(0));
  xh[0] = -1;
  xh[h] = 1;
  PolyQ quotient(std::move(xh));
  for (unsigned d : divisors(h)) {
    if (d == h) continue;
    auto [q, r] = divmod(quotient, cached_cyclotomic(d)->as_poly());
    if (!r.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact cyclotomic division");
    quotient = std::move(q);
  }
  auto phi = std::make_shared<CyclotomicPoly>();
  phi->order = h;
  for (const auto& c : quotient.coeffs()) phi->coeffs.push_back(c.get_num());
  std::lock_guard lock(mutex);
  return cache.emplace(h, std::move(phi)).first->second;
}

unsigned mod_exponent(long k, unsigned h) {
  long r = k % static_cast<long>(h);
  return static_cast<unsigned>(r < 0 ? r + static_cast<long>(h) : r);
}

}  // namespace

PolyQ CyclotomicPoly::as_poly() const {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.emplace_back(c);
  return PolyQ(std::move(out));
}

CyclotomicPoly cyclotomic_poly(unsigned h) { return *cached_cyclotomic(h); }

std::vector<unsigned> prime_factors(unsigned h) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= h; ++p) {
    if (h % p == 0) {
      out.push_back(p);
      while (h % p == 0) h /= p;
    }
  }
  if (h > 1) out.push_back(h);
  return out;
}

std::vector<unsigned> divisors(unsigned h) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= h; ++d)
    if (h % d == 0) out.push_back(d);
  return out;
}

unsigned euler_phi(unsigned h) {
  if (h == 0) throw Error(ErrorCode::InvalidArgument, "euler_phi needs h >= 1");
  unsigned result = h;
  for (unsigned p : prime_factors(h)) result = result / p * (p - 1);
  return result;
}

CycNum::CycNum(unsigned order) : order_(order), modulus_(cached_cyclotomic(order)) {}

CycNum::CycNum(unsigned order, const Rational& value) : CycNum(order) {
  if (value != 0) coeffs_.push_back(value);
}

CycNum CycNum::from_poly(unsigned order, std::vector<Rational> coeffs) {
  CycNum out(order);
  out.coeffs_ = std::move(coeffs);
  out.reduce();
  return out;
}

void CycNum::reduce() {
  const auto& phi = modulus_->coeffs;
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = coeffs_.size(); k-- > deg;) {
    if (coeffs_[k] == 0) continue;
    Rational c = coeffs_[k];
    for (std::size_t t = 0; t <= deg; ++t) coeffs_[k - deg + t] -= c * phi[t];
  }
  if (coeffs_.size() > deg) coeffs_.resize(deg);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void CycNum::require_same_field(const CycNum& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorCode::InvalidArgument, "mixing Q(zeta_" + std::to_string(order_) +
                                                ") and Q(zeta_" + std::to_string(other.order_) + ")");
  }
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value " + str() + " is not rational");
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  a.require_same_field(b);
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  CycNum r(a.order_, a.modulus_);
  r.coeffs_ = std::move(out);
  while (!r.coeffs_.empty() && r.coeffs_.back() == 0) r.coeffs_.pop_back();
  return r;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same_field(b);
  CycNum r(a.order_, a.modulus_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.reduce();
  return r;
}

CycNum operator*(const Rational& c, const CycNum& a) {
  CycNum r(a.order_, a.modulus_);
  if (c == 0) return r;
  r.coeffs_ = a.coeffs_;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(zeta_h)");
  // Extended Euclid against the irreducible Phi_h: s * a = g (mod Phi_h).
  PolyQ r0 = modulus_->as_poly();
  PolyQ r1(coeffs_);
  PolyQ s0;
  PolyQ s1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    PolyQ s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_h is irreducible.
  Rational g = r0.coeff(0);
  std::vector<Rational> coeffs = s0.coeffs();
  for (auto& c : coeffs) c /= g;
  return from_poly(order_, std::move(coeffs));
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }

CycNum CycNum::conj() const {
  std::vector<Rational> out(order_, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[(order_ - k % order_) % order_] += coeffs_[k];
  return from_poly(order_, std::move(out));
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(order_);
    acc += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycNum::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational mag = abs(c);
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += (k == 0 || mag != 1 ? "*w" : "w");
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

CycNum omega_power(unsigned h, long k) {
  std::vector<Rational> coeffs(mod_exponent(k, h) + 1, Rational(0));
  coeffs.back() = 1;
  return CycNum::from_poly(h, std::move(coeffs));
}

CycNum eval_poly(const PolyQ& p, const Rational& q, unsigned h, long k) {
  // Gather sum_t p_t q^t omega^(t k) by the exponent t k mod h, then reduce once.
  std::vector<Rational> buckets(h, Rational(0));
  Rational power = 1;
  const unsigned step = mod_exponent(k, h);
  unsigned exponent = 0;
  for (const auto& c : p.coeffs()) {
    if (c != 0) buckets[exponent] += c * power;
    power *= q;
    exponent = (exponent + step) % h;
  }
  return CycNum::from_poly(h, std::move(buckets));
}

CycNum eval_poly(const PolyQ& p, const CycNum& z) {
  CycNum acc(z.order());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * z + CycNum(z.order(), *it);
  return acc;
}

CycNum residue_at_pole(const RationalFunction& f, unsigned n, unsigned h, long l) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "rank must be positive");
  const Rational q(1, n);
  if (!eval_poly(f.denominator, q, h, l).is_zero()) {
    throw Error(ErrorCode::NotASimplePole, "denominator does not vanish at (1/" + std::to_string(n) +
                                               ") w^" + std::to_string(l) + " in Q(zeta_" +
                                               std::to_string(h) + ")");
  }
  CycNum slope = eval_poly(f.denominator.derivative(), q, h, l);
  if (slope.is_zero()) {
    throw Error(ErrorCode::NotASimplePole, "pole at (1/" + std::to_string(n) + ") w^" +
                                               std::to_string(l) + " is not simple");
  }
  return eval_poly(f.numerator, q, h, l) / slope;
}

}  // namespace hsgon
