#pragma once

// The L-class module kL and the radical data N_e(kL): the nullspace of
// the linear system tying the module to the group H-class of its
// idempotent. Includes the size-gated trace-form oracle used to
// cross-check radical dimensions globally.

#include <vector>

#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"
#include "monoidrep/rational_matrix.hpp"

namespace monoidrep {

// kL with its ordered basis (the L-class elements, ascending element
// index) and the left action of each monoid generator: a basis element
// maps to a basis element (same L-class) or to 0 (strictly lower J).
struct LClassModule {
  int lclass = -1;
  std::vector<int> basis;
  int idempotent = -1;  // minimal-index idempotent in the L-class
  // action[g][c] = basis position of generator_g · basis[c], or -1
  std::vector<std::vector<int>> action;
};

// Throws NotRegular when the L-class carries no idempotent.
LClassModule lclass_module(const MonoidTable& table,
                           const GreenStructure& structure, int lclass);

// Basis of N_e(kL) as rows over the L-class basis: the solutions z of
// the system with one equation per pair (y, h) — y running over the
// minimal-index elements of the H-cells of R(e), ascending, and h over
// the elements of H(e), ascending:  Σ_{x ∈ L : y·x = h} z_x = 0.
// The rows are in reduced nullspace form (row k carries entry 1 at the
// k-th free basis position and 0 at the others); free_positions, when
// given, receives those positions. Throws NotRegular when the L-class
// carries no idempotent.
RationalMatrix lclass_radical(const MonoidTable& table,
                              const GreenStructure& structure, int lclass,
                              std::vector<int>* free_positions = nullptr);

// Test oracle (characteristic 0): dim rad(kM) as the nullity of the
// bilinear form (a, b) ↦ trace of left multiplication by a·b on kM.
// Throws TooLarge when |M| exceeds max_size.
int trace_form_radical(const MonoidTable& table, int max_size = 512);

}  // namespace monoidrep
