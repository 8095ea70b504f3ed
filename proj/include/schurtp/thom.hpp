#pragma once

#include <string>
#include <vector>

#include "schurtp/chern.hpp"
#include "schurtp/common.hpp"
#include "schurtp/partition.hpp"

namespace schurtp {

/// Lascoux binomial determinant
///   d_{I,J} = det( C(i_a + m - a, j_b + m - b) ), 1 <= a,b <= m,
/// with both index partitions zero-padded to length m.
inline Int binomial_det(const Partition& top, const Partition& bottom, unsigned size) {
  if (top.length() > size || bottom.length() > size)
    throw Error("LengthOverflow", "partitions must fit the determinant size");
  if (size == 0) return 1;
  std::vector<unsigned> rows = top.padded(size), cols = bottom.padded(size);
  std::vector<std::vector<Int>> matrix(size, std::vector<Int>(size));
  for (unsigned a = 0; a < size; ++a)
    for (unsigned b = 0; b < size; ++b)
      matrix[a][b] = binomial(Int(rows[a]) + (size - 1 - a), static_cast<long>(cols[b]) + (size - 1 - b));
  return determinant(matrix);
}

/// Scan of an expansion's coefficients realizing the positivity statements:
/// all coefficients nonnegative, and (for nontrivial classes) positive sum.
struct PositivityReport {
  std::size_t term_count = 0;
  std::vector<std::pair<PartitionTuple, Int>> negative_terms;
  Int coefficient_sum = 0;
  bool all_nonnegative = true;
  bool sum_positive = false;
};

inline PositivityReport check_positivity(const ProductSchurExpansion& expansion) {
  PositivityReport report;
  report.term_count = expansion.terms.size();
  for (const auto& [tuple, coeff] : expansion.terms) {
    report.coefficient_sum += coeff;
    if (coeff < 0) report.negative_terms.emplace_back(tuple, coeff);
  }
  report.all_nonnegative = report.negative_terms.empty();
  report.sum_positive = report.coefficient_sum > 0;
  return report;
}

/// Thom polynomial of the locus of quadratic forms on a rank-m bundle E,
/// twisted by a line bundle L, whose corank is at least q:
///   2^{-C(q,2)} * sum_J 2^{|J|} d_{rho_q,J} S_J(E) S_{C(q+1,2)-|J|}(L),
/// J running over partitions contained in the staircase rho_q.  The
/// determinants are taken at size m with the indices zero-padded.
struct CorankFormulaResult {
  unsigned q = 0;
  unsigned m = 0;
  ProductSchurExpansion expansion;
  Rat scale;      // the 2^{-C(q,2)} prefactor
  bool integral;  // every final coefficient is an integer (asserted)
};

inline CorankFormulaResult corank_thom(unsigned q, unsigned m) {
  if (q < 1) throw Error("InvalidArgument", "corank must be positive");
  if (q > m) throw Error("CorankExceedsRank", "corank " + std::to_string(q) +
                                                  " exceeds rank " + std::to_string(m));
  BundleRing ring({{"E", m}, {"L", 1}});
  unsigned codim = q * (q + 1) / 2;
  Rat scale = Rat(1) / Rat(Int(1) << (q * (q - 1) / 2));

  ProductSchurExpansion expansion{ring, {false, false}, {}};
  Partition stairs = staircase(q);
  for (const Partition& sub : partitions_contained_in(stairs)) {
    Int det = binomial_det(stairs, sub, m);
    if (det == 0) continue;
    Rat coeff = scale * (Int(1) << sub.weight()) * det;
    if (denominator(coeff) != 1)
      throw Error("NonIntegralResult", "coefficient of S_" + sub.to_string() +
                                           "(E) is not integral: " + coeff.str());
    unsigned line_power = codim - sub.weight();
    PartitionTuple tuple{sub, line_power ? Partition{line_power} : Partition{}};
    expansion.terms.emplace(std::move(tuple), numerator(coeff));
  }
  return {q, m, std::move(expansion), scale, true};
}

/// One row of the staircase-determinant table.
struct DTableEntry {
  unsigned q = 0;
  Partition sub;
  unsigned size = 0;  // determinant size m
  Int value;
  bool positive = false;
};

/// d_{rho_q,J} for every J contained in rho_q and q <= q_max, evaluated at
/// determinant size m = q + size_offset.  Flags nonpositive entries rather
/// than asserting.
inline std::vector<DTableEntry> d_positivity_table(unsigned q_max, unsigned size_offset = 0) {
  if (q_max < 1) throw Error("InvalidArgument", "table needs q_max >= 1");
  std::vector<DTableEntry> table;
  for (unsigned q = 1; q <= q_max; ++q) {
    Partition stairs = staircase(q);
    unsigned size = q + size_offset;
    for (const Partition& sub : partitions_contained_in(stairs)) {
      Int value = binomial_det(stairs, sub, size);
      bool positive = value > 0;
      table.push_back({q, sub, size, std::move(value), positive});
    }
  }
  return table;
}

}  // namespace schurtp
