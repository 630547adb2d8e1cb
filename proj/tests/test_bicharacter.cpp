#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "helpers.hpp"
#include "monoidrep/bicharacter.hpp"
#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"

using monoidrep::BicharacterMatrix;
using monoidrep::GreenStructure;
using monoidrep::GroupTables;
using monoidrep::LeftSurvival;
using monoidrep::MonoidTable;
using monoidrep::TestElements;
using monoidrep::bicharacter_matrix;
using monoidrep::build_group_tables;
using monoidrep::character_class_of;
using monoidrep::compute_c_m;
using monoidrep::enumerate;
using monoidrep::fixed_points;
using monoidrep::fixed_points_exhaustive;
using monoidrep::green_structure;
using monoidrep::left_survival;
using testsuite::tr;

namespace {

struct Pipeline {
  MonoidTable table;
  GreenStructure structure;
  GroupTables tables;

  explicit Pipeline(const testsuite::GeneratorSet& gens)
      : table(enumerate(gens)),
        structure(green_structure(table)),
        tables(build_group_tables(table, structure)) {}
};

}  // namespace

TEST_CASE("cell decomposition matches the exhaustive count everywhere",
          "[bicharacter]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const Pipeline p(gens);
    for (int s = 0; s < p.table.size(); ++s)
      for (int t = 0; t < p.table.size(); ++t) {
        INFO("s=" << s << " t=" << t);
        REQUIRE(fixed_points(p.table, p.structure, p.tables, s, t) ==
                fixed_points_exhaustive(p.table, s, t));
      }
  }
}

TEST_CASE("cell decomposition matches the exhaustive count on the degree-4 "
          "full transformation monoid",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_t4());
  REQUIRE(p.table.size() == 256);
  for (int s = 0; s < p.table.size(); ++s)
    for (int t = 0; t < p.table.size(); ++t)
      if (fixed_points(p.table, p.structure, p.tables, s, t) !=
          fixed_points_exhaustive(p.table, s, t)) {
        INFO("s=" << s << " t=" << t);
        REQUIRE(fixed_points(p.table, p.structure, p.tables, s, t) ==
                fixed_points_exhaustive(p.table, s, t));
      }
  SUCCEED("all 65536 pairs agree");
}

TEST_CASE("worked fixed-point counts on the degree-2 full transformation "
          "monoid",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_t2());
  const int id = 0;
  const int swap = p.table.index_of(tr({2, 1}));
  const int c1 = p.table.index_of(tr({1, 1}));

  // The identity pair fixes every element.
  REQUIRE(fixed_points(p.table, p.structure, p.tables, id, id) == 4);
  // s = t = the transposition: only the two units survive conjugation.
  REQUIRE(fixed_points(p.table, p.structure, p.tables, swap, swap) == 2);
  // Left multiplication by a constant fixes exactly the two constants.
  REQUIRE(fixed_points(p.table, p.structure, p.tables, c1, id) == 2);
  // Right multiplication by a constant fixes only that constant.
  REQUIRE(fixed_points(p.table, p.structure, p.tables, id, c1) == 1);
}

TEST_CASE("identity row and column count one-sided fixed points",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_t3());
  for (int a = 0; a < p.table.size(); ++a) {
    long right = 0, left = 0;
    for (int x = 0; x < p.table.size(); ++x) {
      if (p.table.product(x, a) == x) ++right;
      if (p.table.product(a, x) == x) ++left;
    }
    REQUIRE(fixed_points(p.table, p.structure, p.tables, 0, a) == right);
    REQUIRE(fixed_points(p.table, p.structure, p.tables, a, 0) == left);
  }
}

TEST_CASE("bicharacter matrix of the order-2 cyclic group",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_c2());
  const TestElements cm = compute_c_m(p.table, p.structure, p.tables);
  REQUIRE(cm.representatives.size() == 2);
  const BicharacterMatrix b =
      bicharacter_matrix(p.table, p.structure, p.tables, cm, 1);
  REQUIRE(b.at(0, 0) == 2);
  REQUIRE(b.at(0, 1) == 0);
  REQUIRE(b.at(1, 0) == 0);
  REQUIRE(b.at(1, 1) == 2);
}

TEST_CASE("bicharacter matrix of the degree-2 full transformation monoid",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_t2());
  const TestElements cm = compute_c_m(p.table, p.structure, p.tables);
  REQUIRE(cm.representatives.size() == 3);
  REQUIRE(p.table.element(cm.representatives[0]) == tr({1, 2}));
  REQUIRE(p.table.element(cm.representatives[1]) == tr({2, 1}));
  REQUIRE(p.table.element(cm.representatives[2]) == tr({1, 1}));

  const BicharacterMatrix b =
      bicharacter_matrix(p.table, p.structure, p.tables, cm, 1);
  const std::vector<long> expected = {4, 0, 1, 2, 2, 1, 2, 0, 1};
  REQUIRE(b.entries == expected);
}

TEST_CASE("parallel evaluation is deterministic", "[bicharacter]") {
  const Pipeline p(testsuite::gens_t3());
  const TestElements cm = compute_c_m(p.table, p.structure, p.tables);
  const BicharacterMatrix one =
      bicharacter_matrix(p.table, p.structure, p.tables, cm, 1);
  const BicharacterMatrix four =
      bicharacter_matrix(p.table, p.structure, p.tables, cm, 4);
  REQUIRE(one.entries == four.entries);
}

TEST_CASE("character classes on a symmetric group are conjugacy classes",
          "[bicharacter]") {
  const Pipeline p(testsuite::gens_s4());
  REQUIRE(p.table.size() == 24);

  // Brute conjugacy in the monoid: s ~ t iff h⁻¹sh = t for some unit h.
  std::vector<int> inverse(p.table.size(), -1);
  for (int h = 0; h < p.table.size(); ++h)
    for (int k = 0; k < p.table.size(); ++k)
      if (p.table.product(h, k) == 0) inverse[h] = k;

  for (int s = 0; s < p.table.size(); ++s)
    for (int t = 0; t < p.table.size(); ++t) {
      bool conj = false;
      for (int h = 0; h < p.table.size() && !conj; ++h)
        conj = p.table.product(p.table.product(inverse[h], s), h) == t;
      const bool same =
          character_class_of(p.table, p.structure, p.tables, s) ==
          character_class_of(p.table, p.structure, p.tables, t);
      INFO("s=" << s << " t=" << t);
      REQUIRE(same == conj);
    }
}

TEST_CASE("test-element lists are complete, minimal, and ordered",
          "[bicharacter]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const Pipeline p(gens);
    const TestElements cm = compute_c_m(p.table, p.structure, p.tables);

    // One representative per class of each regular J-class's group.
    long expected = 0;
    for (int j = 0; j < p.structure.num_jclasses(); ++j)
      if (p.structure.jclasses[j].regular) {
        const auto& jg = p.tables.per_j[j];
        expected += static_cast<long>(
            jg.columns[jg.ref_col].classes.representative.size());
      }
    REQUIRE(static_cast<long>(cm.representatives.size()) == expected);

    // The identity leads; keys are strictly increasing.
    REQUIRE(cm.representatives[0] == 0);
    REQUIRE(cm.jclass[0] == p.structure.jclass_of[0]);
    REQUIRE(cm.group_class[0] == 0);
    for (std::size_t i = 1; i < cm.representatives.size(); ++i) {
      const auto prev = std::make_pair(cm.jclass[i - 1], cm.group_class[i - 1]);
      const auto cur = std::make_pair(cm.jclass[i], cm.group_class[i]);
      REQUIRE(prev < cur);
    }

    // Metadata matches the projection; representatives are the least
    // members of their classes; every element's class is represented.
    std::map<std::pair<int, int>, int> rep_of;
    for (std::size_t i = 0; i < cm.representatives.size(); ++i) {
      const auto key =
          character_class_of(p.table, p.structure, p.tables,
                             cm.representatives[i]);
      REQUIRE(key == std::make_pair(cm.jclass[i], cm.group_class[i]));
      rep_of[key] = cm.representatives[i];
    }
    for (int x = 0; x < p.table.size(); ++x) {
      const auto key = character_class_of(p.table, p.structure, p.tables, x);
      auto it = rep_of.find(key);
      REQUIRE(it != rep_of.end());
      REQUIRE_FALSE(p.table.element(x) < p.table.element(it->second));
    }
  }
}

TEST_CASE("test-element counts on full transformation monoids",
          "[bicharacter]") {
  const Pipeline t2(testsuite::gens_t2());
  REQUIRE(compute_c_m(t2.table, t2.structure, t2.tables)
              .representatives.size() == 3);
  const Pipeline t3(testsuite::gens_t3());
  const TestElements cm = compute_c_m(t3.table, t3.structure, t3.tables);
  std::set<monoidrep::Transformation> reps;
  for (int r : cm.representatives) reps.insert(t3.table.element(r));
  const std::set<monoidrep::Transformation> expected = {
      tr({1, 2, 3}), tr({1, 3, 2}), tr({2, 3, 1}),
      tr({1, 1, 3}), tr({2, 1, 1}), tr({1, 1, 1})};
  REQUIRE(reps == expected);
}

TEST_CASE("column-group transport maps are class isomorphisms",
          "[bicharacter]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const Pipeline p(gens);
    for (int j = 0; j < p.structure.num_jclasses(); ++j) {
      const auto& jd = p.structure.jclasses[j];
      const auto& jg = p.tables.per_j[j];
      REQUIRE(jg.columns.size() == jd.l_ids.size());
      REQUIRE((jd.regular
                   ? p.table.product(jg.ref_idempotent, jg.ref_idempotent) ==
                         jg.ref_idempotent
                   : jg.ref_idempotent == -1));
      const auto& rc = jg.columns[jg.ref_col];
      for (std::size_t li = 0; li < jg.columns.size(); ++li) {
        const auto& cg = jg.columns[li];
        REQUIRE(cg.lclass == jd.l_ids[li]);
        REQUIRE(cg.classes.representative.size() ==
                rc.classes.representative.size());
        // class_to_ref: bijective, size-preserving, identity on the
        // reference column itself.
        std::set<int> hit;
        for (std::size_t k = 0; k < cg.class_to_ref.size(); ++k) {
          const int m = cg.class_to_ref[k];
          hit.insert(m);
          REQUIRE(cg.classes.size[k] == rc.classes.size[m]);
          if (static_cast<int>(li) == jg.ref_col)
            REQUIRE(m == static_cast<int>(k));
        }
        REQUIRE(hit.size() == cg.class_to_ref.size());
      }
    }
  }
}

TEST_CASE("left survival histograms", "[bicharacter]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const Pipeline p(gens);
    for (int j = 0; j < p.structure.num_jclasses(); ++j) {
      if (!p.structure.jclasses[j].regular) continue;
      const long rows =
          static_cast<long>(p.structure.jclasses[j].r_ids.size());

      // The identity keeps every row, inducing the identity permutation.
      const LeftSurvival ident =
          left_survival(p.table, p.structure, p.tables, j, 0);
      REQUIRE(ident.by_class[0] == rows);
      for (std::size_t k = 1; k < ident.by_class.size(); ++k)
        REQUIRE(ident.by_class[k] == 0);

      // Any element keeps at most every row.
      for (int s = 0; s < p.table.size(); ++s) {
        const LeftSurvival ls =
            left_survival(p.table, p.structure, p.tables, j, s);
        long total = 0;
        for (const long c : ls.by_class) {
          REQUIRE(c >= 0);
          total += c;
        }
        REQUIRE(total <= rows);
      }
    }
  }
}
