#pragma once

// The test-element set C_M and the combinatorial bicharacter: fixed-point
// counts #{x ∈ M : s·x·t = x}, computed through the Green decomposition.
// Per J-class, the count factors over grid cells; each surviving cell
// contributes a Schützenberger-group conjugacy count. An exhaustive loop
// is kept permanently as the test oracle.

#include <utility>
#include <vector>

#include "monoidrep/green.hpp"
#include "monoidrep/group_character.hpp"
#include "monoidrep/monoid_table.hpp"
#include "monoidrep/schutz.hpp"

namespace monoidrep {

// The image-side group of one grid column of a J-class. The group (as a
// set of permutations of the column's common image) does not depend on
// which cell of the column it is built from. to_ref conjugates it into
// the reference column's group via a same-kernel Green pair on the top
// grid row.
struct ColumnGroup {
  int lclass = -1;
  std::vector<int> points;  // sorted common image of the column
  std::vector<int> pos;     // point -> position, -1 when absent
  PermGroup group;
  ConjugacyClasses classes;
  std::vector<int> to_ref;  // position map into the reference column
  // Class id in this column's group -> class id in the reference
  // column's group, under the to_ref conjugation (a group isomorphism).
  std::vector<int> class_to_ref;
};

struct JClassGroups {
  int ref_col = 0;          // grid column of the reference L-class
  int ref_idempotent = -1;  // element index of e₀ (regular J only)
  std::vector<ColumnGroup> columns;
};

struct GroupTables {
  std::vector<JClassGroups> per_j;  // by J-class id
};

GroupTables build_group_tables(const MonoidTable& table,
                               const GreenStructure& structure);

// #{x ∈ M : s·x·t = x} via the cell decomposition.
long fixed_points(const MonoidTable& table, const GreenStructure& structure,
                  const GroupTables& tables, int s, int t);

// The same count by looping over every element of M.
long fixed_points_exhaustive(const MonoidTable& table, int s, int t);

// The projection defining character equivalence: s ↦ (J-class of the
// idempotent power s^ω, conjugacy class of the image permutation induced
// by s^{ω+1} at the idempotent base, transported into the J-class's
// reference group). Two elements are equivalent iff their pairs match.
std::pair<int, int> character_class_of(const MonoidTable& table,
                                       const GreenStructure& structure,
                                       const GroupTables& tables, int s);

struct TestElements {
  std::vector<int> representatives;  // element indices; index 0 = identity
  std::vector<int> jclass;           // per representative
  std::vector<int> group_class;      // per representative, reference group
};

// One representative per character-equivalence class: the member with
// the lexicographically smallest image tuple (ties broken by smallest
// element index). Ordered by (J-class, class id); the identity leads.
TestElements compute_c_m(const MonoidTable& table,
                         const GreenStructure& structure,
                         const GroupTables& tables);

struct BicharacterMatrix {
  int n = 0;
  std::vector<long> entries;  // row-major, n×n
  long at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
};

BicharacterMatrix bicharacter_matrix(const MonoidTable& table,
                                     const GreenStructure& structure,
                                     const GroupTables& tables,
                                     const TestElements& cm, int jobs);

// Left-action survival of s over a J-class: the surviving grid rows,
// histogrammed by the reference-group conjugacy class of the induced
// permutation γ_s. The class varies with the row (only its transport
// across columns is uniform), hence a per-class count rather than a
// single class. Used by the character-table assembly.
struct LeftSurvival {
  std::vector<long> by_class;  // indexed by reference-group class id
};

LeftSurvival left_survival(const MonoidTable& table,
                           const GreenStructure& structure,
                           const GroupTables& tables, int j, int s);

}  // namespace monoidrep
