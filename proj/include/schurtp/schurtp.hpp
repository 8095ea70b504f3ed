#pragma once

// schurtp: exact Schur-function calculus for Thom polynomials of invariant
// cones -- partitions, Littlewood-Richardson products, Chern/Segre classes of
// formal bundles, Schubert pairing on products of Grassmannians, and the
// positivity checks tying them together.

#include "schurtp/common.hpp"
#include "schurtp/partition.hpp"
#include "schurtp/poly.hpp"
#include "schurtp/schur_core.hpp"
#include "schurtp/chern.hpp"
#include "schurtp/grassmann.hpp"
#include "schurtp/thom.hpp"
#include "schurtp/expr.hpp"
#include "schurtp/report.hpp"
