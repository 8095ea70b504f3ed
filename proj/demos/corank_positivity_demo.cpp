// Walks through the main library surfaces: builds the Thom polynomial of the
// corank->=2 locus of twisted quadratic forms, re-expands it through the
// splitting principle, and cross-checks one coefficient with the Schubert
// pairing on a product of Grassmannians.

#include <iostream>

#include "schurtp/schurtp.hpp"

using namespace schurtp;

int main() {
  // the corank formula over a rank-3 bundle E and a line bundle L
  CorankFormulaResult corank = corank_thom(2, 3);
  std::cout << "corank>=2 Thom polynomial (m = 3):\n  "
            << expansion_to_expression(corank.expansion) << "\n";

  PositivityReport report = check_positivity(corank.expansion);
  std::cout << "all coefficients nonnegative: " << (report.all_nonnegative ? "yes" : "no")
            << ", sum = " << report.coefficient_sum << "\n\n";

  // round trip: evaluate the expansion back to Chern classes and re-expand
  const BundleRing& ring = corank.expansion.ring;
  Poly chern_form = evaluate_expansion(corank.expansion);
  std::cout << "as a Chern-class polynomial:\n  " << poly_to_expression(ring, chern_form)
            << "\n\n";
  ProductSchurExpansion again = expand_product_schur(ring, chern_form);
  std::cout << "re-expansion matches: " << (again.terms == corank.expansion.terms ? "yes" : "no")
            << "\n\n";

  // the same coefficients through the geometric route: pair against
  // complementary Schubert classes on a product of Grassmannians
  PartitionTuple index{Partition{2, 1}, Partition{}};
  Int geometric = extract_coefficient(ring, chern_form, index, 6);
  std::cout << "coefficient of S[(2,1)](E) by Schubert pairing: " << geometric << "\n";
  return 0;
}
