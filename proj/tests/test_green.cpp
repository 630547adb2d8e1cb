#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "monoidrep/errors.hpp"
#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"

using monoidrep::GreenStructure;
using monoidrep::MonoidTable;
using monoidrep::PartialBijection;
using monoidrep::Side;
using monoidrep::Transformation;
using monoidrep::enumerate;
using monoidrep::green_pair;
using monoidrep::green_structure;
using monoidrep::idempotents;
using monoidrep::regular_hclass;
using testsuite::tr;

TEST_CASE("Green classes match the reachability definition", "[green]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    const testsuite::NaiveGreen oracle = testsuite::naive_green(table);
    for (int x = 0; x < table.size(); ++x) {
      for (int y = 0; y < table.size(); ++y) {
        REQUIRE((st.rclass_of[x] == st.rclass_of[y]) == oracle.r[x][y]);
        REQUIRE((st.lclass_of[x] == st.lclass_of[y]) == oracle.l[x][y]);
        REQUIRE((st.jclass_of[x] == st.jclass_of[y]) == oracle.j[x][y]);
        const bool same_h = st.rclass_of[x] == st.rclass_of[y] &&
                            st.lclass_of[x] == st.lclass_of[y];
        REQUIRE((st.hclass_of[x] == st.hclass_of[y]) == same_h);
      }
    }
  }
}

TEST_CASE("T3 eggbox picture", "[green]") {
  const MonoidTable table = enumerate(testsuite::gens_t3());
  const GreenStructure st = green_structure(table);
  REQUIRE(st.num_jclasses() == 3);

  // Ranks descend along J ids.
  REQUIRE(st.jclasses[0].rank == 3);
  REQUIRE(st.jclasses[1].rank == 2);
  REQUIRE(st.jclasses[2].rank == 1);

  // Grids 1×1 (H size 6), 3×3 (H size 2), 1×3 (H size 1); sizes 6, 18, 3.
  REQUIRE(st.jclasses[0].grid.size() == 1);
  REQUIRE(st.jclasses[0].grid[0].size() == 1);
  REQUIRE(st.jclasses[0].hclass_size == 6);
  REQUIRE(st.jclasses[0].size == 6);

  REQUIRE(st.jclasses[1].grid.size() == 3);
  REQUIRE(st.jclasses[1].grid[0].size() == 3);
  REQUIRE(st.jclasses[1].hclass_size == 2);
  REQUIRE(st.jclasses[1].size == 18);

  REQUIRE(st.jclasses[2].grid.size() == 1);
  REQUIRE(st.jclasses[2].grid[0].size() == 3);
  REQUIRE(st.jclasses[2].hclass_size == 1);
  REQUIRE(st.jclasses[2].size == 3);

  for (const auto& jd : st.jclasses) REQUIRE(jd.regular);
  REQUIRE(idempotents(table).size() == 10);
}

TEST_CASE("a group is a single H-class", "[green]") {
  for (const auto& [name, gens] : testsuite::group_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    REQUIRE(st.num_jclasses() == 1);
    REQUIRE(st.num_hclasses() == 1);
    REQUIRE(st.jclasses[0].regular);
    REQUIRE(st.jclasses[0].hclass_size == table.size());
    REQUIRE(idempotents(table) == std::vector<int>{0});
  }
}

TEST_CASE("two-constants monoid splits into a 1x2 grid", "[green]") {
  const MonoidTable table = enumerate(testsuite::gens_two_constants());
  const GreenStructure st = green_structure(table);
  REQUIRE(st.num_jclasses() == 2);
  REQUIRE(st.jclasses[1].grid.size() == 1);     // one R-class
  REQUIRE(st.jclasses[1].grid[0].size() == 2);  // two L-classes
  REQUIRE(st.jclasses[1].hclass_size == 1);
  REQUIRE(st.jclasses[1].regular);
}

TEST_CASE("grid cells partition each J-class", "[green]") {
  for (const auto& [name, gens] : testsuite::full_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    int total = 0;
    for (const auto& jd : st.jclasses) {
      int jsize = 0;
      for (const auto& row : jd.grid)
        for (int h : row) {
          REQUIRE(static_cast<int>(st.hclass_members[h].size()) ==
                  jd.hclass_size);
          jsize += jd.hclass_size;
        }
      REQUIRE(jsize == jd.size);
      total += jsize;
    }
    REQUIRE(total == table.size());
  }
}

TEST_CASE("multiplication respects the grid structure", "[green]") {
  // Left multiplication preserves the L-class or drops to a strictly
  // lower J-class; right multiplication dually for R.
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    for (int s = 0; s < table.size(); ++s) {
      for (int x = 0; x < table.size(); ++x) {
        const int sx = table.product(s, x);
        if (st.jclass_of[sx] == st.jclass_of[x])
          REQUIRE(st.lclass_of[sx] == st.lclass_of[x]);
        else
          REQUIRE(st.jclass_of[sx] > st.jclass_of[x]);  // ids sort by rank

        const int xs = table.product(x, s);
        if (st.jclass_of[xs] == st.jclass_of[x])
          REQUIRE(st.rclass_of[xs] == st.rclass_of[x]);
        else
          REQUIRE(st.jclass_of[xs] > st.jclass_of[x]);
      }
    }
  }
}

TEST_CASE("members within a class share image or kernel", "[green]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    for (const auto& members : st.lclass_members) {
      const auto image = monoidrep::profile(table.element(members[0])).image;
      for (int x : members)
        REQUIRE(monoidrep::profile(table.element(x)).image == image);
    }
    for (const auto& members : st.rclass_members) {
      const auto kernel = monoidrep::profile(table.element(members[0])).kernel;
      for (int x : members)
        REQUIRE(monoidrep::profile(table.element(x)).kernel == kernel);
    }
  }
}

TEST_CASE("green_pair worked examples", "[green]") {
  const PartialBijection lambda =
      green_pair(tr({1, 1, 2}), tr({2, 2, 3}), Side::left);
  REQUIRE(lambda.domain == std::vector<int>{1, 2});
  REQUIRE(lambda.apply(1) == 2);
  REQUIRE(lambda.apply(2) == 3);

  const PartialBijection id_pair =
      green_pair(tr({1, 1, 2}), tr({1, 1, 2}), Side::left);
  REQUIRE(id_pair.domain == id_pair.codomain);

  REQUIRE_THROWS_AS(green_pair(tr({1, 1, 2}), tr({1, 2, 3}), Side::left),
                    monoidrep::RankMismatch);
  REQUIRE_THROWS_AS(green_pair(tr({1, 1, 2}), tr({1, 2, 2}), Side::left),
                    monoidrep::IllDefined);

  // Right side works on kernel-class labels.
  const PartialBijection rho =
      green_pair(tr({1, 1, 2}), tr({2, 1, 1}), Side::right);
  REQUIRE(rho.domain == std::vector<int>{1, 3});  // blocks {1,2} and {3}
  REQUIRE(rho.apply(1) == 2);                     // block {1,2} -> block {2,3}
  REQUIRE(rho.apply(3) == 1);                     // block {3} -> block {1}
}

TEST_CASE("regular_hclass finds the witness cell", "[green]") {
  const MonoidTable t3 = enumerate(testsuite::gens_t3());
  const GreenStructure st3 = green_structure(t3);
  const auto h = regular_hclass(st3, 1);
  REQUIRE(h.has_value());
  // The witness H-class contains the idempotent [1,1,3].
  const int e = t3.index_of(tr({1, 1, 3}));
  REQUIRE(st3.hclass_of[e] == *h);

  const MonoidTable nr = enumerate(testsuite::gens_nonregular_b());
  const GreenStructure stnr = green_structure(nr);
  const int mid = nr.index_of(tr({1, 1, 2}));
  REQUIRE_FALSE(stnr.jclasses[stnr.jclass_of[mid]].regular);
  REQUIRE_FALSE(regular_hclass(stnr, stnr.jclass_of[mid]).has_value());
}

TEST_CASE("J-order covers point strictly downward", "[green]") {
  for (const auto& [name, gens] : testsuite::small_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const GreenStructure st = green_structure(table);
    for (int j = 0; j < st.num_jclasses(); ++j)
      for (int k : st.jorder_covers[j]) {
        REQUIRE(k > j);
        REQUIRE(st.jclasses[k].rank <= st.jclasses[j].rank);
      }
  }
  // T3 is a chain: units cover rank 2, rank 2 covers rank 1.
  const GreenStructure st = green_structure(enumerate(testsuite::gens_t3()));
  REQUIRE(st.jorder_covers[0] == std::vector<int>{1});
  REQUIRE(st.jorder_covers[1] == std::vector<int>{2});
  REQUIRE(st.jorder_covers[2].empty());
}

TEST_CASE("eggbox DOT output is well formed", "[green]") {
  const MonoidTable table = enumerate(testsuite::gens_t3());
  const GreenStructure st = green_structure(table);
  const std::string dot = monoidrep::eggbox_dot(table, st);
  REQUIRE(dot.find("digraph") != std::string::npos);
  REQUIRE(dot.find("J0") != std::string::npos);
  REQUIRE(dot.find("J2") != std::string::npos);
  REQUIRE(dot.find("*") != std::string::npos);  // starred idempotent cells
  REQUIRE(std::count(dot.begin(), dot.end(), '{') ==
          std::count(dot.begin(), dot.end(), '}'));
}

TEST_CASE("idempotents listed ascending and complete", "[green]") {
  for (const auto& [name, gens] : testsuite::full_suite()) {
    INFO(name);
    const MonoidTable table = enumerate(gens);
    const std::vector<int> idem = idempotents(table);
    REQUIRE(std::is_sorted(idem.begin(), idem.end()));
    std::vector<int> brute;
    for (int x = 0; x < table.size(); ++x)
      if (table.product(x, x) == x) brute.push_back(x);
    REQUIRE(idem == brute);
  }
}
