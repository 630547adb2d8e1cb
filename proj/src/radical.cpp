#include "monoidrep/radical.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "monoidrep/errors.hpp"

namespace monoidrep {

namespace {

// Minimal-index idempotent in the L-class, or -1.
int lclass_idempotent(const MonoidTable& table, const GreenStructure& structure,
                      int lclass) {
  for (int x : structure.lclass_members[lclass]) {
    if (table.product(x, x) == x) return x;
  }
  return -1;
}

}  // namespace

LClassModule lclass_module(const MonoidTable& table,
                           const GreenStructure& structure, int lclass) {
  LClassModule mod;
  mod.lclass = lclass;
  mod.basis = structure.lclass_members[lclass];
  mod.idempotent = lclass_idempotent(table, structure, lclass);
  if (mod.idempotent < 0) {
    throw NotRegular("L-class " + std::to_string(lclass) +
                     " has no idempotent");
  }

  std::unordered_map<int, int> position;
  for (int c = 0; c < static_cast<int>(mod.basis.size()); ++c) {
    position.emplace(mod.basis[c], c);
  }
  const int num_gens = static_cast<int>(table.generators().size());
  mod.action.assign(num_gens, std::vector<int>(mod.basis.size(), -1));
  for (int g = 0; g < num_gens; ++g) {
    const int gen = table.index_of(table.generators()[g]);
    for (int c = 0; c < static_cast<int>(mod.basis.size()); ++c) {
      const int image = table.product(gen, mod.basis[c]);
      auto it = position.find(image);
      if (it != position.end()) {
        mod.action[g][c] = it->second;
      } else {
        // A left multiple leaving the L-class must drop strictly in the
        // J-order; it can never land in another L-class of the same J.
        internal_check(
            structure.jclass_of[image] != structure.jclass_of[mod.basis[c]],
            "left action left the L-class without dropping a J-class");
      }
    }
  }
  return mod;
}

RationalMatrix lclass_radical(const MonoidTable& table,
                              const GreenStructure& structure, int lclass,
                              std::vector<int>* free_positions) {
  const std::vector<int>& members = structure.lclass_members[lclass];
  const int e = lclass_idempotent(table, structure, lclass);
  if (e < 0) {
    throw NotRegular("L-class " + std::to_string(lclass) +
                     " has no idempotent");
  }

  const int j = structure.jclass_of[e];
  const JClassData& jd = structure.jclasses[j];
  const auto row_it = std::find(jd.r_ids.begin(), jd.r_ids.end(),
                                structure.rclass_of[e]);
  internal_check(row_it != jd.r_ids.end(), "R-class of e missing from grid");
  const int r = static_cast<int>(row_it - jd.r_ids.begin());

  // One representative per H-cell of R(e): the minimal-index member of
  // each cell along row r, taken in ascending element order.
  std::vector<int> reps;
  reps.reserve(jd.l_ids.size());
  for (std::size_t l = 0; l < jd.l_ids.size(); ++l) {
    reps.push_back(structure.hclass_members[jd.grid[r][l]][0]);
  }
  std::sort(reps.begin(), reps.end());

  const std::vector<int>& group = structure.hclass_members[structure.hclass_of[e]];
  std::unordered_map<int, int> h_position;
  for (int k = 0; k < static_cast<int>(group.size()); ++k) {
    h_position.emplace(group[k], k);
  }
  std::unordered_map<int, int> column;
  for (int c = 0; c < static_cast<int>(members.size()); ++c) {
    column.emplace(members[c], c);
  }

  RationalMatrix system(static_cast<int>(reps.size() * group.size()),
                        static_cast<int>(members.size()));
  for (int yi = 0; yi < static_cast<int>(reps.size()); ++yi) {
    for (int c = 0; c < static_cast<int>(members.size()); ++c) {
      const int p = table.product(reps[yi], members[c]);
      auto it = h_position.find(p);
      if (it == h_position.end()) continue;
      system.at(yi * static_cast<int>(group.size()) + it->second, c) = 1;
    }
  }
  return nullspace(system, free_positions);
}

int trace_form_radical(const MonoidTable& table, int max_size) {
  const int n = static_cast<int>(table.size());
  if (n > max_size) {
    throw TooLarge("monoid of order " + std::to_string(n) +
                   " exceeds the trace-form oracle bound " +
                   std::to_string(max_size));
  }
  // fix[c] = trace of left multiplication by c on kM.
  std::vector<long> fix(n, 0);
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < n; ++x) {
      if (table.product(c, x) == x) ++fix[c];
    }
  }
  RationalMatrix gram(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      gram.at(a, b) = fix[table.product(a, b)];
    }
  }
  return n - rank(gram);
}

}  // namespace monoidrep
