#pragma once

// Schützenberger groups of H-classes, realized as permutation groups:
// on the common image for the image side, on the kernel classes
// (labelled by their smallest member) for the kernel side. Includes the
// permutation induced by a stabilizing monoid element and the connecting
// isomorphism tau between the two sides.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "monoidrep/green.hpp"
#include "monoidrep/monoid_table.hpp"

namespace monoidrep {

// A permutation of positions {0..k-1}. Point labels live in the owning
// PermGroup's domain. Products use the same convention as
// transformations: (p·q)(i) = q(p(i)).
struct Perm {
  std::vector<int> img;

  static Perm identity(int k);
  int size() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  Perm inverse() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;
};

Perm pcompose(const Perm& p, const Perm& q);  // (p·q)(i) = q(p(i))

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

class PermGroup {
public:
  // Verifies the element set is a group (closure, identity, inverses),
  // sorts it (identity first), picks a small generating subset, and
  // builds a point-stabilizer transversal chain for sifting.
  static PermGroup from_elements(std::vector<int> domain,
                                 std::vector<Perm> elements);

  const std::vector<int>& domain() const { return domain_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  long order() const { return static_cast<long>(elements_.size()); }

  // Membership by sifting through the transversal chain: O(domain²).
  bool contains(const Perm& p) const;

  // Position in the sorted element list, or -1.
  int index_of(const Perm& p) const;

private:
  struct ChainLevel {
    int base_point;  // position in {0..k-1}
    std::vector<std::optional<Perm>> transversal;  // by image position
  };

  std::vector<int> domain_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::vector<ChainLevel> chain_;
};

// The Schützenberger group of H-class h. side == left: the group
// {λ_b : b ∈ H} of permutations of the common image, where λ_b is
// defined by λ_b(a(i)) = b(i) against the base a = minimal-index element
// of H. side == right: the dual group on kernel classes.
// Free transitivity gives |Γ(H)| = |H|.
PermGroup schutzenberger(const MonoidTable& table,
                         const GreenStructure& structure, int h, Side side);

// The permutation of the common image (left) or of the kernel classes
// (right) induced by the monoid element m, which must stabilize H on the
// given side (left: a·m ∈ H; right: m·a ∈ H). Throws NotAStabilizer.
Perm induced_permutation(const MonoidTable& table,
                         const GreenStructure& structure, int m, int h,
                         Side side);

// The unique element δ of the kernel-side group with (g acting on the
// image side of a) = (a acted on the kernel side by δ). Throws NotInGroup
// when a ∉ H or g ∉ Γ(H).
Perm tau(const MonoidTable& table, const GreenStructure& structure, int h,
         const Transformation& a, const Perm& g);

}  // namespace monoidrep
