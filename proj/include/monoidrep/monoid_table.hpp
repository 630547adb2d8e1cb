#pragma once

// Enumeration of the monoid generated by a set of transformations:
// indexed element list, left/right Cayley graphs, generator words,
// and membership queries.

#include <string>
#include <unordered_map>
#include <vector>

#include "monoidrep/transformation.hpp"

namespace monoidrep {

class MonoidTable {
public:
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }

  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& element(int x) const { return elements_[x]; }
  const std::vector<Transformation>& generators() const { return generators_; }

  // right_cayley(x, g) = index of element(x) · generator(g).
  int right_cayley(int x, int g) const { return right_cayley_[x][g]; }
  // left_cayley(x, g) = index of generator(g) · element(x).
  int left_cayley(int x, int g) const { return left_cayley_[x][g]; }

  // A shortest-found generator word for element x (empty for the identity).
  const std::vector<int>& word(int x) const { return words_[x]; }

  // Index of t in the element list. Throws NotAnElement.
  int index_of(const Transformation& t) const;

  // Index of t, or -1 when t is not an element (never throws).
  int find(const Transformation& t) const;

  // Index of element(x) · element(y).
  int product(int x, int y) const;

  friend MonoidTable enumerate(const std::vector<Transformation>& generators);

private:
  int degree_ = 0;
  std::vector<Transformation> generators_;
  std::vector<Transformation> elements_;
  std::vector<std::vector<int>> right_cayley_;
  std::vector<std::vector<int>> left_cayley_;
  std::vector<std::vector<int>> words_;
  std::unordered_map<Transformation, int, TransformationHash> index_;
};

// Breadth-first closure of {identity} ∪ generators under composition.
// The identity is always adjoined as element 0; element order is BFS by
// (word length, generator index, discovery order), which makes every
// downstream table deterministic. Throws EmptyGenerators, DegreeMismatch.
MonoidTable enumerate(const std::vector<Transformation>& generators);

// Membership in the generated monoid (identity always included).
bool contains(const std::vector<Transformation>& generators,
              const Transformation& t);

}  // namespace monoidrep
