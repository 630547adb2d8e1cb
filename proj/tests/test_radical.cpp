#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "helpers.hpp"
#include "monoidrep/errors.hpp"
#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"
#include "monoidrep/radical.hpp"
#include "monoidrep/rational_matrix.hpp"
#include "monoidrep/transformation.hpp"

using monoidrep::GreenStructure;
using monoidrep::LClassModule;
using monoidrep::MonoidTable;
using monoidrep::NotRegular;
using monoidrep::RationalMatrix;
using monoidrep::TooLarge;
using monoidrep::Transformation;
using monoidrep::enumerate;
using monoidrep::green_structure;
using monoidrep::lclass_module;
using monoidrep::lclass_radical;
using monoidrep::trace_form_radical;
using testsuite::tr;

namespace {

bool lclass_is_regular(const MonoidTable& table,
                       const GreenStructure& structure, int lclass) {
  for (int x : structure.lclass_members[lclass])
    if (table.product(x, x) == x) return true;
  return false;
}

// Re-assembles the defining linear system at an arbitrary idempotent e of
// the L-class and checks that z solves it: for every minimal-index cell
// member y of R(e) and every h in H(e),  Σ_{x ∈ L : y·x = h} z_x = 0.
void check_solution_at(const MonoidTable& table,
                       const GreenStructure& structure, int lclass, int e,
                       const std::vector<const mpq_class*>& z) {
  const auto& members = structure.lclass_members[lclass];
  const int j = structure.jclass_of[e];
  const auto& jd = structure.jclasses[j];
  const int row =
      static_cast<int>(std::lower_bound(jd.r_ids.begin(), jd.r_ids.end(),
                                        structure.rclass_of[e]) -
                       jd.r_ids.begin());
  REQUIRE(jd.r_ids[row] == structure.rclass_of[e]);
  for (std::size_t col = 0; col < jd.l_ids.size(); ++col) {
    const int y = structure.hclass_members[jd.grid[row][col]][0];
    for (int h : structure.hclass_members[structure.hclass_of[e]]) {
      mpq_class sum = 0;
      for (std::size_t c = 0; c < members.size(); ++c)
        if (table.product(y, members[c]) == h) sum += *z[c];
      REQUIRE(sum == 0);
    }
  }
}

}  // namespace

TEST_CASE("module structure of an L-class", "[radical]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    std::vector<int> gen_idx;
    for (const auto& g : gens) gen_idx.push_back(table.index_of(g));

    for (int lc = 0; lc < st.num_lclasses(); ++lc) {
      if (!lclass_is_regular(table, st, lc)) continue;
      const LClassModule m = lclass_module(table, st, lc);
      REQUIRE(m.lclass == lc);
      REQUIRE(m.basis == st.lclass_members[lc]);
      REQUIRE(table.product(m.idempotent, m.idempotent) == m.idempotent);
      REQUIRE(st.lclass_of[m.idempotent] == lc);
      for (int x : st.lclass_members[lc])
        if (table.product(x, x) == x) {
          REQUIRE(m.idempotent <= x);  // minimal-index idempotent
          break;
        }

      REQUIRE(m.action.size() == gens.size());
      for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t c = 0; c < m.basis.size(); ++c) {
          const int y = table.product(gen_idx[g], m.basis[c]);
          if (st.lclass_of[y] == lc) {
            REQUIRE(m.action[g][c] >= 0);
            REQUIRE(m.basis[m.action[g][c]] == y);
          } else {
            // Left multiplication either stays in the L-class or falls
            // to a strictly lower J-class.
            REQUIRE(m.action[g][c] == -1);
            REQUIRE(st.jclass_of[y] > st.jclass_of[m.basis[c]]);
          }
        }
    }
  }
}

TEST_CASE("nonregular L-classes are rejected", "[radical]") {
  const MonoidTable table = enumerate(testsuite::gens_nonregular_a());
  const GreenStructure st = green_structure(table);
  const int a = table.index_of(tr({2, 3, 3}));
  REQUIRE_FALSE(st.jclasses[st.jclass_of[a]].regular);
  REQUIRE_THROWS_AS(lclass_module(table, st, st.lclass_of[a]), NotRegular);
  REQUIRE_THROWS_AS(lclass_radical(table, st, st.lclass_of[a]), NotRegular);
}

TEST_CASE("radical of the rank-2 column module in degree 3", "[radical]") {
  const MonoidTable table = enumerate(testsuite::gens_t3());
  const GreenStructure st = green_structure(table);
  const int lc = st.lclass_of[table.index_of(tr({1, 1, 3}))];

  std::vector<int> free_pos;
  const RationalMatrix n = lclass_radical(table, st, lc, &free_pos);
  REQUIRE(n.rows() == 1);
  REQUIRE(n.cols() == 6);
  REQUIRE(free_pos.size() == 1);
  REQUIRE(n.at(0, free_pos[0]) == 1);

  // The one-dimensional radical, written over the six maps with image
  // {1,3}: alternating signs split by kernel class.
  const std::map<Transformation, int> expected = {
      {tr({1, 1, 3}), 1},  {tr({3, 3, 1}), -1}, {tr({1, 3, 1}), 1},
      {tr({3, 1, 3}), -1}, {tr({1, 3, 3}), -1}, {tr({3, 1, 1}), 1}};
  const LClassModule m = lclass_module(table, st, lc);
  const int sign = expected.at(table.element(m.basis[free_pos[0]]));
  for (int c = 0; c < 6; ++c)
    REQUIRE(n.at(0, c) == sign * expected.at(table.element(m.basis[c])));
}

TEST_CASE("per-L-class radical dimensions on small fixtures", "[radical]") {
  {
    const MonoidTable table = enumerate(testsuite::gens_t3());
    const GreenStructure st = green_structure(table);
    std::vector<int> dims;
    for (int lc = 0; lc < st.num_lclasses(); ++lc)
      dims.push_back(lclass_radical(table, st, lc).rows());
    REQUIRE(dims == std::vector<int>{0, 1, 1, 1, 0, 0, 0});
  }
  {
    const MonoidTable table = enumerate(testsuite::gens_t2());
    const GreenStructure st = green_structure(table);
    for (int lc = 0; lc < st.num_lclasses(); ++lc)
      REQUIRE(lclass_radical(table, st, lc).rows() == 0);
  }
  {
    const MonoidTable table = enumerate(testsuite::gens_semilattice());
    const GreenStructure st = green_structure(table);
    for (int lc = 0; lc < st.num_lclasses(); ++lc)
      REQUIRE(lclass_radical(table, st, lc).rows() == 0);
  }
}

TEST_CASE("radical rows solve the system at every idempotent", "[radical]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    for (int lc = 0; lc < st.num_lclasses(); ++lc) {
      if (!lclass_is_regular(table, st, lc)) continue;
      std::vector<int> free_pos;
      const RationalMatrix n = lclass_radical(table, st, lc, &free_pos);
      const int dim = n.rows();
      const int size = static_cast<int>(st.lclass_members[lc].size());
      REQUIRE(dim >= 0);
      REQUIRE(dim <= size);
      REQUIRE(n.cols() == size);
      REQUIRE(static_cast<int>(free_pos.size()) == dim);

      // Reduced form: unit at own free position, zero at the others.
      for (int r = 0; r < dim; ++r)
        for (int k = 0; k < dim; ++k)
          REQUIRE(n.at(r, free_pos[k]) == (r == k ? 1 : 0));

      for (int r = 0; r < dim; ++r) {
        std::vector<const mpq_class*> z;
        for (int c = 0; c < size; ++c) z.push_back(&n.at(r, c));
        for (int e : st.lclass_members[lc])
          if (table.product(e, e) == e)
            check_solution_at(table, st, lc, e, z);
      }
    }
  }
}

TEST_CASE("group algebras have zero radical", "[radical]") {
  for (const auto& [name, gens] : testsuite::group_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    REQUIRE(st.num_lclasses() == 1);
    REQUIRE(lclass_radical(table, st, 0).rows() == 0);
    REQUIRE(trace_form_radical(table) == 0);
  }
}

TEST_CASE("trace-form radical dimensions", "[radical]") {
  REQUIRE(trace_form_radical(enumerate(testsuite::gens_t2())) == 1);
  REQUIRE(trace_form_radical(enumerate(testsuite::gens_t3())) == 7);
  REQUIRE(trace_form_radical(enumerate(testsuite::gens_semilattice())) == 0);
  REQUIRE(trace_form_radical(enumerate(testsuite::gens_two_constants())) == 1);
}

TEST_CASE("trace-form radical of the degree-4 full transformation monoid",
          "[radical]") {
  const MonoidTable table = enumerate(testsuite::gens_t4());
  REQUIRE(trace_form_radical(table) == 97);
}

TEST_CASE("the trace-form oracle is size-gated", "[radical]") {
  const MonoidTable table = enumerate(testsuite::gens_t3());
  REQUIRE_THROWS_AS(trace_form_radical(table, 26), TooLarge);
  REQUIRE(trace_form_radical(table, 27) == 7);
}
