#pragma once

// The monoid character table over the cyclotomics: one row per pair
// (regular J-class, irreducible of its reference Schützenberger group),
// one column per C_M representative. Entries come from fixed-point
// counts corrected by the trace on the radical of the reference
// L-class module. Also: simple-module dimensions (identity column) and
// the Cartan matrix solved exactly from the bilinear fixed-point form.

#include <utility>
#include <vector>

#include "monoidrep/bicharacter.hpp"
#include "monoidrep/cyclotomic.hpp"
#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"
#include "monoidrep/rational_matrix.hpp"

namespace monoidrep {

// Radical data of the reference L-class of one regular J-class.
struct ReferenceRadical {
  int jclass = -1;
  std::vector<int> basis_elements;  // the reference L-class, ascending
  RationalMatrix nullspace_rows;    // dim N × |L₀|, reduced form
  std::vector<int> free_positions;  // unit position of each row
};

// One entry per regular J-class, ascending J-class id.
std::vector<ReferenceRadical> reference_radicals(
    const MonoidTable& table, const GreenStructure& structure,
    const GroupTables& tables);

struct MonoidCharTable {
  // Row labels: (J-class id, row of the reference group's table).
  std::vector<std::pair<int, int>> irreducibles;
  std::vector<std::vector<Cyclotomic>> values;  // square, |C_M| × |C_M|

  int size() const { return static_cast<int>(irreducibles.size()); }
  const Cyclotomic& at(int row, int col) const { return values[row][col]; }
};

// Rows ordered by J-class id (rank descending), then by the group-table
// row order; columns follow cm (identity representative first).
// Throws NotRegularJClassData when a regular J-class has no group or
// radical data.
MonoidCharTable character_table(const MonoidTable& table,
                                const GreenStructure& structure,
                                const GroupTables& tables,
                                const TestElements& cm,
                                const std::vector<ReferenceRadical>& radicals);

struct CartanMatrix {
  std::vector<std::vector<long>> entries;  // square, same order as rows of X
  int size() const { return static_cast<int>(entries.size()); }
  long at(int i, int j) const { return entries[i][j]; }
};

// The unique C with B = Xᵀ·C·X, solved exactly over the cyclotomics.
// Throws NonIntegralResult / NegativeEntry when an entry fails to be a
// non-negative integer (either signals an upstream bug).
CartanMatrix cartan_matrix(const MonoidCharTable& x,
                           const BicharacterMatrix& b);

// The identity column of the table, asserted to be positive integers.
// Throws NonIntegralDimension otherwise.
std::vector<long> simple_dimensions(const MonoidCharTable& x);

}  // namespace monoidrep
