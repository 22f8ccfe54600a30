#include "hsgon/vanishing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "hsgon/error.hpp"

namespace hsgon {

namespace {

std::string describe(const IrreducibleSubsum& s) {
  std::string out;
  for (const auto& t : s.terms) {
    if (!out.empty()) out += " + ";
    out += t.coeff.get_str() + "*w^" + std::to_string(t.exponent);
  }
  return out + " (h = " + std::to_string(s.h) + ")";
}

}  // namespace

PeriodSet maximal_period_set(const CosetPartition& partition) {
  PeriodSet out;
  for (const auto& part : partition.parts()) out.h = std::max(out.h, part.period);
  if (out.h == 1) {
    throw Error(ErrorCode::AperiodicPartition, "every part has period 1; no induced sum");
  }
  for (std::size_t j = 0; j < partition.size(); ++j)
    if (partition.parts()[j].period == out.h) out.members.push_back(j);
  if (out.members.size() < 2) {
    throw Error(ErrorCode::StructureViolation,
                "maximal period " + std::to_string(out.h) + " is attained by a single part");
  }
  return out;
}

CycNum VanishingSum::value() const {
  CycNum acc(h);
  for (const auto& t : terms) acc += Rational(t.coeff) * omega_power(h, t.exponent);
  return acc;
}

VanishingSum induced_sum(const CosetPartition& partition) {
  const PeriodSet period_set = maximal_period_set(partition);
  const unsigned h = period_set.h;
  const auto& parts = partition.parts();

  VanishingSum sum;
  sum.h = h;
  Integer product = 1;
  for (std::size_t j : period_set.members) product *= static_cast<unsigned long>(parts[j].index);
  for (std::size_t j : period_set.members) {
    SumTerm t;
    t.part = j;
    t.index = parts[j].index;
    t.coeff = product / static_cast<unsigned long>(t.index);
    t.offset = parts[j].offset;
    t.exponent = t.offset % h;
    sum.terms.push_back(std::move(t));
  }
  const CycNum value = sum.value();
  if (!value.is_zero()) {
    throw Error(ErrorCode::SumDoesNotVanish, "induced sum evaluates to " + value.str());
  }

  // Residue route: sum_j Res(p_j, omega/n) = -(omega / (n prod d)) * value.
  const auto n = static_cast<unsigned>(partition.rank());
  CycNum residue_total(h);
  for (const auto& t : sum.terms) {
    sum.residues.push_back(residue_at_pole(part_generating_function(parts[t.part]), n, h, 1));
    residue_total += sum.residues.back();
  }
  Integer scale = product * static_cast<unsigned long>(n);
  CycNum expected = Rational(Integer(-1), scale) * (omega_power(h, 1) * value);
  if (!(residue_total == expected)) {
    throw Error(ErrorCode::SumDoesNotVanish, "residues at omega/n sum to " + residue_total.str());
  }
  return sum;
}

std::size_t IrreducibleSubsum::distinct_directions() const {
  std::vector<unsigned> e;
  for (const auto& t : terms) e.push_back(t.exponent);
  std::sort(e.begin(), e.end());
  return static_cast<std::size_t>(std::unique(e.begin(), e.end()) - e.begin());
}

SubsumAnalysis minimal_vanishing_subsets(const VanishingSum& sum, std::size_t max_terms) {
  const std::size_t k = sum.terms.size();
  if (k > max_terms || k >= 63) {
    throw Error(ErrorCode::TooManyTerms, std::to_string(k) + " terms exceed the bound of " +
                                             std::to_string(max_terms));
  }
  const unsigned h = sum.h;
  const std::size_t width = euler_phi(h);

  // Integer coordinate vectors of coeff_j omega^e_j in the power basis.
  std::vector<std::vector<Integer>> vec(k, std::vector<Integer>(width, Integer(0)));
  for (std::size_t j = 0; j < k; ++j) {
    const CycNum w = omega_power(h, sum.terms[j].exponent);
    const auto& rep = w.coeffs();
    for (std::size_t c = 0; c < rep.size(); ++c) vec[j][c] = sum.terms[j].coeff * rep[c].get_num();
  }

  std::vector<std::uint64_t> vanishing;
  std::vector<Integer> running(width, Integer(0));
  std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t t, std::uint64_t mask) {
    if (t == k) {
      if (mask != 0 && std::all_of(running.begin(), running.end(), [](const Integer& x) { return x == 0; }))
        vanishing.push_back(mask);
      return;
    }
    visit(t + 1, mask);
    for (std::size_t c = 0; c < width; ++c) running[c] += vec[t][c];
    visit(t + 1, mask | (std::uint64_t{1} << t));
    for (std::size_t c = 0; c < width; ++c) running[c] -= vec[t][c];
  };
  visit(0, 0);

  auto members_of = [&](std::uint64_t mask) {
    std::vector<std::size_t> m;
    for (std::size_t j = 0; j < k; ++j)
      if (mask >> j & 1) m.push_back(j);
    return m;
  };
  auto order = [&](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members_of(a) < members_of(b);
  };
  std::sort(vanishing.begin(), vanishing.end(), order);

  std::vector<std::uint64_t> minimal;
  for (std::uint64_t mask : vanishing) {
    bool contains_smaller = std::any_of(minimal.begin(), minimal.end(),
                                        [&](std::uint64_t m) { return (m & mask) == m; });
    if (!contains_smaller) minimal.push_back(mask);
  }

  SubsumAnalysis out;
  for (std::uint64_t mask : minimal) {
    IrreducibleSubsum sub;
    sub.h = h;
    sub.members = members_of(mask);
    for (std::size_t j : sub.members) {
      SumTerm t = sum.terms[j];
      t.coeff = 1;
      for (std::size_t i : sub.members)
        if (i != j) t.coeff *= static_cast<unsigned long>(sum.terms[i].index);
      sub.terms.push_back(std::move(t));
    }
    Integer g = 0;
    for (const auto& t : sub.terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    for (const auto& t : sub.terms) sub.primitive_coeffs.push_back(t.coeff / g);
    std::vector<unsigned> exps;
    for (const auto& t : sub.terms) exps.push_back(t.exponent);
    std::sort(exps.begin(), exps.end());
    sub.degenerate = std::adjacent_find(exps.begin(), exps.end()) != exps.end();

    CycNum check(h);
    for (const auto& t : sub.terms) check += Rational(t.coeff) * omega_power(h, t.exponent);
    if (!check.is_zero()) {
      throw Error(ErrorCode::SumDoesNotVanish, "rescaled subsum " + describe(sub) + " is " + check.str());
    }
    out.minimal.push_back(std::move(sub));
  }

  std::uint64_t used = 0;
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    if ((minimal[i] & used) == 0) {
      chosen.push_back(i);
      used |= minimal[i];
    }
  }
  const std::uint64_t all = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
  if (used == all) out.decomposition = std::move(chosen);
  return out;
}

bool lam_leung_length_check(std::size_t length, unsigned h) {
  const auto primes = prime_factors(h);
  std::vector<bool> reachable(length + 1, false);
  reachable[0] = true;
  for (std::size_t v = 1; v <= length; ++v)
    for (unsigned p : primes)
      if (p <= v && reachable[v - p]) reachable[v] = true;
  return reachable[length];
}

std::string_view to_string(StructureVerdict verdict) {
  switch (verdict) {
    case StructureVerdict::RegularPForced: return "RegularPForced";
    case StructureVerdict::RegularPQForced: return "RegularPQForced";
    case StructureVerdict::Unconstrained: return "Unconstrained";
  }
  return "Unknown";
}

StructureVerdict structure_check(const IrreducibleSubsum& subsum, unsigned h) {
  if (h < 2) throw Error(ErrorCode::InvalidArgument, "structure check needs h >= 2");
  std::map<unsigned, Integer> merged;
  for (const auto& t : subsum.terms) merged[t.exponent % h] += t.coeff;

  const auto primes = prime_factors(h);
  if (primes.size() > 2) return StructureVerdict::Unconstrained;

  // A rotated regular p-gon: p distinct exponents, one residue class mod
  // h/p, equal weights.
  auto regular_p_gon = [&](unsigned p) {
    if (merged.size() != p) return false;
    const unsigned step = h / p;
    const unsigned e0 = merged.begin()->first;
    const Integer& c0 = merged.begin()->second;
    return std::all_of(merged.begin(), merged.end(), [&](const auto& kv) {
      return kv.second == c0 && (kv.first + h - e0) % step == 0;
    });
  };
  if (primes.size() == 1) {
    if (regular_p_gon(primes[0])) return StructureVerdict::RegularPForced;
  } else if (regular_p_gon(primes[0]) || regular_p_gon(primes[1])) {
    return StructureVerdict::RegularPQForced;
  }
  throw Error(ErrorCode::StructureViolation,
              "irreducible subsum " + describe(subsum) + " is not a rotated regular polygon");
}

bool cyclotomic_divisibility(const IrreducibleSubsum& subsum, unsigned h) {
  if (subsum.terms.empty()) return false;
  PolyQ g;
  unsigned top = 0;
  for (const auto& t : subsum.terms) {
    g = g + PolyQ::monomial(Rational(t.coeff), t.offset);
    top = std::max(top, t.offset);
  }
  auto [q, r] = divmod(g, cyclotomic_poly(h).as_poly());
  return r.is_zero() && top >= euler_phi(h);
}

}  // namespace hsgon
