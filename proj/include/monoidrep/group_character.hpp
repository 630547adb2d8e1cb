#pragma once

// Conjugacy classes and exact character tables of small permutation
// groups. The table is computed modulo a prime p ≡ 1 (mod exponent) by
// splitting common eigenspaces of the class-algebra matrices, then the
// mod-p characters are lifted to exact cyclotomic values through the
// eigenvalue multiplicities of each class representative.

#include <vector>

#include "monoidrep/cyclotomic.hpp"
#include "monoidrep/schutz.hpp"

namespace monoidrep {

struct ConjugacyClasses {
  std::vector<int> representative;  // per class: minimal element index
  std::vector<int> size;
  std::vector<int> class_of;       // element index -> class id
  std::vector<int> inverse_class;  // class id -> class of the inverses
};

// Conjugation orbits. Class 0 is the class of the identity; classes are
// ordered by their minimal element index.
ConjugacyClasses conjugacy_classes(const PermGroup& g);

struct GroupCharTable {
  ConjugacyClasses classes;
  // Rows are the irreducible characters sorted by dimension, then by the
  // cyclotomic total order on value rows; columns follow the classes
  // (identity class first).
  std::vector<std::vector<Cyclotomic>> values;

  int num_classes() const { return static_cast<int>(values.size()); }
  const Cyclotomic& at(int row, int cls) const { return values[row][cls]; }
};

GroupCharTable group_character_table(const PermGroup& g);

}  // namespace monoidrep
