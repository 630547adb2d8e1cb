#pragma once

// Shared test fixtures: the suite of small monoids every property test
// runs against, plus brute-force reference implementations kept
// independent of the library's optimized code paths.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monoidrep/monoid_table.hpp"
#include "monoidrep/transformation.hpp"

namespace testsuite {

inline monoidrep::Transformation tr(std::vector<int> images) {
  return monoidrep::Transformation(std::move(images));
}

using GeneratorSet = std::vector<monoidrep::Transformation>;

// --- Named generator sets -------------------------------------------------

inline GeneratorSet gens_trivial() { return {tr({1})}; }
inline GeneratorSet gens_c2() { return {tr({2, 1})}; }
inline GeneratorSet gens_c3() { return {tr({2, 3, 1})}; }
inline GeneratorSet gens_c4() { return {tr({2, 3, 4, 1})}; }
inline GeneratorSet gens_s3() { return {tr({2, 1, 3}), tr({2, 3, 1})}; }
inline GeneratorSet gens_s4() { return {tr({2, 1, 3, 4}), tr({2, 3, 4, 1})}; }

// Full transformation monoids: permutations of {1..n} plus one rank
// collapse generate all n^n maps.
inline GeneratorSet gens_t2() { return {tr({2, 1}), tr({1, 1})}; }
inline GeneratorSet gens_t3() {
  return {tr({2, 1, 3}), tr({2, 3, 1}), tr({1, 1, 3})};
}
inline GeneratorSet gens_t4() {
  return {tr({2, 1, 3, 4}), tr({2, 3, 4, 1}), tr({1, 1, 3, 4})};
}
inline GeneratorSet gens_t5() {
  return {tr({2, 1, 3, 4, 5}), tr({2, 3, 4, 5, 1}), tr({1, 1, 3, 4, 5})};
}

// {identity, [1,1]}: two-element semilattice.
inline GeneratorSet gens_semilattice() { return {tr({1, 1})}; }

// {identity, [2,3,3], [3,3,3]}: the rank-2 J-class is not regular.
inline GeneratorSet gens_nonregular_a() {
  return {tr({2, 3, 3}), tr({3, 3, 3})};
}

// {identity, [1,1,2], [1,1,1]}: the rank-2 J-class is not regular.
inline GeneratorSet gens_nonregular_b() {
  return {tr({1, 1, 2}), tr({1, 1, 1})};
}

// {identity, [1,1], [2,2]}: a right-zero band of constants plus the unit.
inline GeneratorSet gens_two_constants() { return {tr({1, 1}), tr({2, 2})}; }

struct NamedGens {
  std::string name;
  GeneratorSet gens;
};

// Every monoid with |M| ≤ 200: the scope of the exhaustive oracles.
inline std::vector<NamedGens> small_suite() {
  return {
      {"trivial", gens_trivial()},
      {"C2", gens_c2()},
      {"C3", gens_c3()},
      {"C4", gens_c4()},
      {"S3", gens_s3()},
      {"S4", gens_s4()},
      {"T2", gens_t2()},
      {"T3", gens_t3()},
      {"semilattice", gens_semilattice()},
      {"nonregular-a", gens_nonregular_a()},
      {"nonregular-b", gens_nonregular_b()},
      {"two-constants", gens_two_constants()},
  };
}

// The small suite plus T4 (256 elements).
inline std::vector<NamedGens> full_suite() {
  auto suite = small_suite();
  suite.push_back({"T4", gens_t4()});
  return suite;
}

// The suite members that are groups.
inline std::vector<NamedGens> group_suite() {
  return {
      {"trivial", gens_trivial()},
      {"C2", gens_c2()},
      {"C3", gens_c3()},
      {"C4", gens_c4()},
      {"S3", gens_s3()},
      {"S4", gens_s4()},
  };
}

// --- Brute-force oracles --------------------------------------------------

// Product closure computed with std::set and compose() only — no shared
// code with MonoidTable::enumerate.
inline std::set<monoidrep::Transformation> closure_oracle(
    const GeneratorSet& gens) {
  std::set<monoidrep::Transformation> elements;
  elements.insert(monoidrep::Transformation::identity(gens.front().degree()));
  for (const auto& g : gens) elements.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<monoidrep::Transformation> snapshot(elements.begin(),
                                                    elements.end());
    for (const auto& a : snapshot)
      for (const auto& g : gens)
        if (elements.insert(monoidrep::compose(a, g)).second) grew = true;
  }
  return elements;
}

// Pairwise Green's relations by definition: x R y iff x ∈ yM and y ∈ xM,
// x L y iff x ∈ My and y ∈ Mx, x J y iff x ∈ MyM and y ∈ MxM. Quadratic
// tables over element indices; meant for monoids with at most ~30
// elements.
struct NaiveGreen {
  std::vector<std::vector<bool>> r, l, j;
};

inline NaiveGreen naive_green(const monoidrep::MonoidTable& table) {
  const int n = table.size();
  std::vector<std::vector<bool>> right_reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> left_reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> two_reach(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    for (int m = 0; m < n; ++m) {
      right_reach[x][table.product(x, m)] = true;
      left_reach[x][table.product(m, x)] = true;
      for (int m2 = 0; m2 < n; ++m2)
        two_reach[x][table.product(table.product(m, x), m2)] = true;
    }
  }
  NaiveGreen g;
  g.r.assign(n, std::vector<bool>(n, false));
  g.l.assign(n, std::vector<bool>(n, false));
  g.j.assign(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      g.r[x][y] = right_reach[x][y] && right_reach[y][x];
      g.l[x][y] = left_reach[x][y] && left_reach[y][x];
      g.j[x][y] = two_reach[x][y] && two_reach[y][x];
    }
  return g;
}

// --- Temp file fixture for CLI tests --------------------------------------

class TempFile {
public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("monoidrep_test_" + std::to_string(::getpid()) + "_" +
              std::to_string(counter++) + ".tmp"))
                .string();
    std::ofstream out(path_);
    out << content;
  }

  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  const std::string& path() const { return path_; }

private:
  std::string path_;
};

inline std::string generator_text(const GeneratorSet& gens) {
  std::string text;
  for (const auto& g : gens) text += g.to_string() + "\n";
  return text;
}

}  // namespace testsuite
