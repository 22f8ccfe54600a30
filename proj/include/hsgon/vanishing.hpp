#pragma once

// The vanishing sum of h-th roots of unity induced by a coset partition and
// its decomposition into irreducible subsums.
//
// With h the largest period among the parts and J the parts attaining it,
//   sum_{j in J} (prod_{i in J, i != j} d_i) omega^{m_j} = 0.

#include <cstddef>
#include <string_view>
#include <vector>

#include "hsgon/cyclotomic.hpp"
#include "hsgon/matrix.hpp"
#include "hsgon/partition.hpp"

namespace hsgon {

inline constexpr std::size_t kDefaultMaxTerms = 20;

struct PeriodSet {
  unsigned h = 1;
  std::vector<std::size_t> members;  // J, as 0-based part positions
};

// Throws AperiodicPartition when every part has period 1, and
// StructureViolation if the maximal period is not repeated.
PeriodSet maximal_period_set(const CosetPartition& partition);

struct SumTerm {
  std::size_t part = 0;   // 0-based position in the partition
  std::size_t index = 1;  // d_j
  Integer coeff;          // positive integer weight of omega^exponent
  unsigned offset = 0;    // m_j, unreduced
  unsigned exponent = 0;  // m_j mod h
};

struct VanishingSum {
  unsigned h = 1;
  std::vector<SumTerm> terms;
  // Res(p_j, omega / n) for each term, when built from a partition.
  std::vector<CycNum> residues;

  // sum_j coeff_j omega^exponent_j in Q(zeta_h).
  CycNum value() const;
};

// Builds the sum, checks it vanishes in Q(zeta_h) and that the residues at
// omega / n sum to the same relation scaled by -omega / (n prod d_j).
// Throws AperiodicPartition, or SumDoesNotVanish on an internal failure.
VanishingSum induced_sum(const CosetPartition& partition);

struct IrreducibleSubsum {
  unsigned h = 1;
  std::vector<std::size_t> members;  // positions in VanishingSum::terms, ascending
  std::vector<SumTerm> terms;        // coeff = prod_{i in J', i != j} d_i
  std::vector<Integer> primitive_coeffs;  // coeffs divided by their gcd
  bool degenerate = false;                // two terms share an exponent

  std::size_t length() const noexcept { return terms.size(); }
  // Number of distinct exponents, i.e. sides once coincident directions merge.
  std::size_t distinct_directions() const;
};

struct SubsumAnalysis {
  // Every inclusion-minimal nonempty vanishing subset.
  std::vector<IrreducibleSubsum> minimal;
  // A disjoint cover of all terms by minimal subsets (indices into
  // `minimal`), smallest first with lexicographic tie-break.
  std::vector<std::size_t> decomposition;
};

// Exhaustive subset enumeration; throws TooManyTerms above `max_terms`.
SubsumAnalysis minimal_vanishing_subsets(const VanishingSum& sum,
                                         std::size_t max_terms = kDefaultMaxTerms);

// True iff `length` is a non-negative integer combination of the distinct
// prime divisors of h.
bool lam_leung_length_check(std::size_t length, unsigned h);

enum class StructureVerdict {
  RegularPForced,   // h = p^a: a rotated regular p-gon
  RegularPQForced,  // h = p^a q^b: a rotated regular p-gon or q-gon
  Unconstrained,    // three or more primes divide h
};

std::string_view to_string(StructureVerdict verdict);

// Classifies an irreducible subsum, merging terms of equal exponent first.
// Throws StructureViolation when h = p^a or p^a q^b and the subsum is not of
// the forced shape.
StructureVerdict structure_check(const IrreducibleSubsum& subsum, unsigned h);

// True iff Phi_h divides g(z) = sum_j c_j z^{m_j} (unreduced offsets) and
// max m_j >= phi(h).
bool cyclotomic_divisibility(const IrreducibleSubsum& subsum, unsigned h);

}  // namespace hsgon
