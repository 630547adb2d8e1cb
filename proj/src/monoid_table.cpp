#include "monoidrep/monoid_table.hpp"

#include "monoidrep/errors.hpp"

namespace monoidrep {

int MonoidTable::index_of(const Transformation& t) const {
  const int idx = find(t);
  if (idx < 0)
    throw NotAnElement("transformation " + t.to_string() +
                       " is not an element of the monoid");
  return idx;
}

int MonoidTable::find(const Transformation& t) const {
  if (t.degree() != degree_) return -1;
  auto it = index_.find(t);
  return it == index_.end() ? -1 : it->second;
}

int MonoidTable::product(int x, int y) const {
  const int idx = find(compose(elements_[x], elements_[y]));
  internal_check(idx >= 0, "monoid closure: product escaped element list");
  return idx;
}

MonoidTable enumerate(const std::vector<Transformation>& generators) {
  if (generators.empty())
    throw EmptyGenerators("enumerate: generator list is empty");
  const int n = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != n)
      throw DegreeMismatch("enumerate: generator " + g.to_string() +
                           " has degree " + std::to_string(g.degree()) +
                           ", expected " + std::to_string(n));
  }

  MonoidTable table;
  table.degree_ = n;
  table.generators_ = generators;

  const int num_gens = static_cast<int>(generators.size());
  table.elements_.push_back(Transformation::identity(n));
  table.words_.push_back({});
  table.index_.emplace(table.elements_[0], 0);

  // FIFO breadth-first closure: processing elements in index order and
  // generators in list order yields the (word length, generator index,
  // discovery order) element ordering.
  for (int x = 0; x < static_cast<int>(table.elements_.size()); ++x) {
    table.right_cayley_.emplace_back(num_gens, -1);
    for (int g = 0; g < num_gens; ++g) {
      Transformation prod = compose(table.elements_[x], generators[g]);
      auto [it, inserted] =
          table.index_.emplace(prod, static_cast<int>(table.elements_.size()));
      if (inserted) {
        table.elements_.push_back(std::move(prod));
        auto word = table.words_[x];
        word.push_back(g);
        table.words_.push_back(std::move(word));
      }
      table.right_cayley_[x][g] = it->second;
    }
  }

  table.left_cayley_.resize(table.elements_.size());
  for (int x = 0; x < static_cast<int>(table.elements_.size()); ++x) {
    table.left_cayley_[x].resize(num_gens);
    for (int g = 0; g < num_gens; ++g) {
      auto it = table.index_.find(compose(generators[g], table.elements_[x]));
      internal_check(it != table.index_.end(),
                     "monoid closure: left product escaped element list");
      table.left_cayley_[x][g] = it->second;
    }
  }
  return table;
}

bool contains(const std::vector<Transformation>& generators,
              const Transformation& t) {
  if (generators.empty())
    throw EmptyGenerators("contains: generator list is empty");
  if (t.degree() != generators.front().degree())
    throw DegreeMismatch("contains: element degree " +
                         std::to_string(t.degree()) +
                         " does not match generator degree " +
                         std::to_string(generators.front().degree()));
  return enumerate(generators).find(t) >= 0;
}

}  // namespace monoidrep
