#pragma once

// Green's relations of an enumerated monoid: R-, L-, J-, H-classes
// computed from Cayley-graph mutual reachability (image/kernel equality
// is necessary but not sufficient in proper submonoids of the full
// transformation monoid, so it is asserted, never used as a definition),
// the eggbox grids, idempotents, regular H-classes, and the partial
// bijections ("Green pairs") that translate between classes.

#include <optional>
#include <string>
#include <vector>

#include "monoidrep/monoid_table.hpp"
#include "monoidrep/transformation.hpp"

namespace monoidrep {

enum class Side {
  left,   // image side: permutations of the common image
  right,  // kernel side: permutations of the kernel classes
};

struct JClassData {
  int rank = 0;
  bool regular = false;
  std::vector<int> r_ids;  // global R-class ids, ascending
  std::vector<int> l_ids;  // global L-class ids, ascending
  // grid[ri][li] = H-class id of the cell (r_ids[ri], l_ids[li]).
  std::vector<std::vector<int>> grid;
  std::vector<int> idempotents;  // element indices, ascending
  int hclass_size = 0;
  int size = 0;
  std::vector<int> lex_min_images;  // of the lexicographically least member
};

struct GreenStructure {
  // Per element: class ids. R/L/H ids are ordered by the class's minimal
  // element index; J ids by (rank descending, lexicographically smallest
  // member image tuple).
  std::vector<int> rclass_of, lclass_of, jclass_of, hclass_of;

  std::vector<std::vector<int>> rclass_members;  // ascending element index
  std::vector<std::vector<int>> lclass_members;
  std::vector<std::vector<int>> hclass_members;

  std::vector<JClassData> jclasses;

  // J-order DAG on J-class ids: edges[j] = J-classes strictly below j
  // that j covers (transitive reduction of the reachability order).
  std::vector<std::vector<int>> jorder_covers;

  int num_rclasses() const { return static_cast<int>(rclass_members.size()); }
  int num_lclasses() const { return static_cast<int>(lclass_members.size()); }
  int num_hclasses() const { return static_cast<int>(hclass_members.size()); }
  int num_jclasses() const { return static_cast<int>(jclasses.size()); }

  // J-class id that a global L-class (resp. R-class) belongs to.
  std::vector<int> jclass_of_lclass, jclass_of_rclass;
};

GreenStructure green_structure(const MonoidTable& table);

// A bijection between two ordered point sets; not, in general, an
// element of the monoid. domain[k] maps to codomain[k].
struct PartialBijection {
  std::vector<int> domain;    // ascending
  std::vector<int> codomain;  // image of domain[k] at position k

  int apply(int point) const;
};

// side == left: requires kernel(a) = kernel(b); returns λ with domain
// image(a) and λ(a(i)) = b(i), so λ∘a = b pointwise.
// side == right: requires image(a) = image(b); returns the dual map on
// kernel classes (labelled by smallest member): class [i] of a maps to
// the class [j] of b with b(j) = a(i).
// Throws RankMismatch when the ranks differ, IllDefined when the map is
// inconsistent (a collides where b does not, or labels do not match).
PartialBijection green_pair(const Transformation& a, const Transformation& b,
                            Side side);

// All idempotents e·e = e, ascending element index.
std::vector<int> idempotents(const MonoidTable& table);

// The H-class of J-class j that contains an idempotent and has the
// smallest (R id, L id); nullopt iff j is not regular.
std::optional<int> regular_hclass(const GreenStructure& structure, int j);

// DOT rendering of the eggbox picture: one grid per J-class (rows =
// R-classes, columns = L-classes, cells = H-class size, starred when the
// cell contains an idempotent), with J-order cover edges.
std::string eggbox_dot(const MonoidTable& table,
                       const GreenStructure& structure);

}  // namespace monoidrep
