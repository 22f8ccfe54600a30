#pragma once

// Exact polynomials over Q and the generating functions
// p_ij(z) = sum_k (A^k)_ij z^k = (-1)^(i+j) det(I - zA : j, i) / det(I - zA)
// of Schreier automata.

#include <cstddef>
#include <string>
#include <vector>

#include "hsgon/matrix.hpp"
#include "hsgon/schreier.hpp"

namespace hsgon {

class CosetPartition;
struct CosetPart;

// Coefficients in ascending degree; trailing zeros stripped, so the zero
// polynomial has no coefficients.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);
  static PolyQ monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  // Multiplicity of z = 0 as a root; the zero polynomial has none.
  std::size_t low_order() const;

  Rational operator()(const Rational& z) const;
  PolyQ derivative() const;
  // Drops all terms of degree >= n.
  PolyQ truncated(std::size_t n) const;

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const Rational& c, const PolyQ& a);
  PolyQ operator-() const;
  bool operator==(const PolyQ&) const = default;

  std::string str(char var = 'z') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  PolyQ quotient;
  PolyQ remainder;
};
DivMod divmod(const PolyQ& a, const PolyQ& b);

// Numerator over denominator, deliberately not reduced to lowest terms so
// the denominator stays det(I - zA).
struct RationalFunction {
  PolyQ numerator;
  PolyQ denominator;

  // Exact value at a point that is not a root of the denominator.
  Rational operator()(const Rational& z) const;
};

// det(I - zA) by the Faddeev-LeVerrier trace recursion over the integers.
PolyQ denominator_poly(const IntMatrix& a);

enum class NumeratorMethod {
  Auto,       // Cofactor for small matrices, Adjugate otherwise
  Cofactor,   // fraction-free elimination of the (j, i) minor over Z[z]
  Adjugate,   // det(I - zA) * sum_{k<d} (A^k)_ij z^k truncated below degree d
};

// (-1)^(i+j) det(I - zA : j, i).
PolyQ cofactor_numerator(const IntMatrix& a, std::size_t i, std::size_t j);
PolyQ adjugate_numerator(const IntMatrix& a, std::size_t i, std::size_t j, const PolyQ& denominator);

RationalFunction generating_function(const IntMatrix& a, std::size_t i, std::size_t j,
                                     NumeratorMethod method = NumeratorMethod::Auto);
RationalFunction generating_function(const SchreierGraph& g, Vertex i, Vertex j,
                                     NumeratorMethod method = NumeratorMethod::Auto);

// Generating function of the part's automaton (base -> accept).
RationalFunction part_generating_function(const CosetPart& part);

// a_0 .. a_kmax from the recurrence the denominator induces.
// Throws NonUnitConstantTerm when the denominator vanishes at 0.
std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t k_max);

// Order of vanishing at z = 0. Throws ZeroFunction.
std::size_t order_at_zero(const RationalFunction& f);

// True iff sum_i [z^k] p_i(z) = n^k for every k <= k_max.
bool sum_check(const CosetPartition& partition, std::size_t k_max);

}  // namespace hsgon
