#include "hsgon/ratfun.hpp"

#include <algorithm>
#include <utility>

#include "hsgon/error.hpp"
#include "hsgon/partition.hpp"

namespace hsgon {

PolyQ::PolyQ(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return PolyQ(std::move(coeffs));
}

void PolyQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t PolyQ::low_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

Rational PolyQ::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return PolyQ(std::move(out));
}

PolyQ PolyQ::truncated(std::size_t n) const {
  std::vector<Rational> out(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(n, coeffs_.size())));
  return PolyQ(std::move(out));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[k] += b.coeffs_[k];
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) { return a + (-b); }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyQ(std::move(out));
}

PolyQ operator*(const Rational& c, const PolyQ& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return PolyQ(std::move(out));
}

std::string PolyQ::str(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

DivMod divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {PolyQ(), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational& lead = b.coeffs().back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] / lead;
    quot[k - db] = q;
    for (std::size_t t = 0; t <= db; ++t) rem[k - db + t] -= q * b.coeffs()[t];
  }
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

Rational RationalFunction::operator()(const Rational& z) const {
  Rational den = denominator(z);
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "evaluation at a root of the denominator");
  return numerator(z) / den;
}

namespace {

// Nonzero entries of each row of A.
std::vector<std::vector<std::pair<std::size_t, long>>> sparse_rows(const IntMatrix& a) {
  std::vector<std::vector<std::pair<std::size_t, long>>> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) rows[i].emplace_back(j, static_cast<long>(a(i, j)));
  return rows;
}

void require_square(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::InvalidArgument, "transition matrix must be square and non-empty");
  }
}

}  // namespace

PolyQ denominator_poly(const IntMatrix& a) {
  require_square(a);
  const std::size_t d = a.rows();
  const auto rows = sparse_rows(a);
  // Characteristic polynomial det(xI - A) = sum_k c_k x^k with c_d = 1;
  // det(I - zA) = sum_t c_{d-t} z^t.
  std::vector<Integer> c(d + 1, Integer(0));
  c[d] = 1;
  BigMatrix m(d, d);
  BigMatrix am(d, d);
  for (std::size_t k = 1; k <= d; ++k) {
    // M_k = A M_{k-1} + c_{d-k+1} I
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Integer acc = 0;
        for (const auto& [l, v] : rows[i]) acc += v * m(l, j);
        am(i, j) = std::move(acc);
      }
      am(i, i) += c[d - k + 1];
    }
    std::swap(m, am);
    // c_{d-k} = -tr(A M_k) / k, exact over Z.
    Integer trace = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& [l, v] : rows[i]) trace += v * m(l, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[d - k] = -q;
  }
  std::vector<Rational> coeffs(d + 1);
  for (std::size_t t = 0; t <= d; ++t) coeffs[t] = Rational(c[d - t]);
  return PolyQ(std::move(coeffs));
}

PolyQ cofactor_numerator(const IntMatrix& a, std::size_t i, std::size_t j) {
  require_square(a);
  const std::size_t d = a.rows();
  if (i >= d || j >= d) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  const std::size_t m = d - 1;
  const Rational sign = (i + j) % 2 == 0 ? 1 : -1;
  if (m == 0) return PolyQ({sign});

  // Minor of I - zA with row j and column i removed.
  std::vector<std::vector<PolyQ>> b(m, std::vector<PolyQ>(m));
  for (std::size_t r = 0, src_r = 0; r < m; ++r, ++src_r) {
    if (src_r == j) ++src_r;
    for (std::size_t s = 0, src_s = 0; s < m; ++s, ++src_s) {
      if (src_s == i) ++src_s;
      Rational diag = src_r == src_s ? 1 : 0;
      b[r][s] = PolyQ({diag, Rational(-static_cast<long>(a(src_r, src_s)))});
    }
  }

  // Bareiss fraction-free elimination; every division is exact in Z[z].
  Rational det_sign = sign;
  PolyQ prev({Rational(1)});
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (b[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < m && b[r][k].is_zero()) ++r;
      if (r == m) return {};
      std::swap(b[k], b[r]);
      det_sign = -det_sign;
    }
    for (std::size_t r = k + 1; r < m; ++r) {
      for (std::size_t s = k + 1; s < m; ++s) {
        PolyQ num = b[k][k] * b[r][s] - b[r][k] * b[k][s];
        auto [q, rem] = divmod(num, prev);
        if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "inexact Bareiss step");
        b[r][s] = std::move(q);
      }
      b[r][k] = PolyQ();
    }
    prev = b[k][k];
  }
  return det_sign * b[m - 1][m - 1];
}

PolyQ adjugate_numerator(const IntMatrix& a, std::size_t i, std::size_t j, const PolyQ& denominator) {
  require_square(a);
  const std::size_t d = a.rows();
  if (i >= d || j >= d) throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  const auto rows = sparse_rows(a);
  // Row e_i A^k, k < d.
  std::vector<Integer> row(d, Integer(0));
  row[i] = 1;
  std::vector<Rational> series(d);
  for (std::size_t k = 0; k < d; ++k) {
    series[k] = Rational(row[j]);
    std::vector<Integer> next(d, Integer(0));
    for (std::size_t r = 0; r < d; ++r) {
      if (row[r] == 0) continue;
      for (const auto& [l, v] : rows[r]) next[l] += v * row[r];
    }
    row.swap(next);
  }
  return (denominator * PolyQ(std::move(series))).truncated(d);
}

RationalFunction generating_function(const IntMatrix& a, std::size_t i, std::size_t j,
                                     NumeratorMethod method) {
  PolyQ den = denominator_poly(a);
  if (method == NumeratorMethod::Auto) {
    method = a.rows() <= 12 ? NumeratorMethod::Cofactor : NumeratorMethod::Adjugate;
  }
  PolyQ num = method == NumeratorMethod::Cofactor ? cofactor_numerator(a, i, j)
                                                  : adjugate_numerator(a, i, j, den);
  return {std::move(num), std::move(den)};
}

RationalFunction generating_function(const SchreierGraph& g, Vertex i, Vertex j,
                                     NumeratorMethod method) {
  return generating_function(transition_matrix(g), i, j, method);
}

RationalFunction part_generating_function(const CosetPart& part) {
  return generating_function(part.graph, part.graph.base(), part.accept);
}

std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t k_max) {
  const Rational d0 = f.denominator.coeff(0);
  if (d0 == 0) throw Error(ErrorCode::NonUnitConstantTerm, "denominator vanishes at z = 0");
  const auto& den = f.denominator.coeffs();
  std::vector<Rational> out(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    Rational acc = f.numerator.coeff(k);
    for (std::size_t t = 1; t < den.size() && t <= k; ++t) acc -= den[t] * out[k - t];
    out[k] = acc / d0;
  }
  return out;
}

std::size_t order_at_zero(const RationalFunction& f) {
  if (f.numerator.is_zero()) throw Error(ErrorCode::ZeroFunction, "numerator is identically zero");
  const std::size_t num = f.numerator.low_order();
  const std::size_t den = f.denominator.low_order();
  if (den > num) throw Error(ErrorCode::InvalidArgument, "function has a pole at z = 0");
  return num - den;
}

bool sum_check(const CosetPartition& partition, std::size_t k_max) {
  std::vector<Rational> total(k_max + 1, Rational(0));
  for (const auto& part : partition.parts()) {
    auto series = series_coefficients(part_generating_function(part), k_max);
    for (std::size_t k = 0; k <= k_max; ++k) total[k] += series[k];
  }
  Integer power = 1;
  for (std::size_t k = 0; k <= k_max; ++k) {
    if (total[k] != Rational(power)) return false;
    power *= static_cast<unsigned long>(partition.rank());
  }
  return true;
}

}  // namespace hsgon
