#pragma once

// Transformation: a total map on {1..n}, stored as its image tuple.
// The element type of every monoid in this library.
//
// Composition convention, used everywhere: (a·b)(i) = b(a(i)),
// i.e. "apply a, then b". All points are 1-indexed at the interface.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace monoidrep {

class Transformation {
public:
  // images[i-1] holds the image of point i; every entry must lie in [1, n].
  explicit Transformation(std::vector<int> images);

  static Transformation identity(int degree);

  // Parses a space-separated image tuple, e.g. "2 1 3".
  static Transformation parse(const std::string& text);

  int degree() const { return static_cast<int>(images_.size()); }

  // Applies the map to a 1-indexed point.
  int operator()(int point) const { return images_[point - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Transformation& other) const = default;
  // Lexicographic order on image tuples (degrees compared first).
  std::strong_ordering operator<=>(const Transformation& other) const;

  std::string to_string() const;  // "2 1 3"

private:
  std::vector<int> images_;
};

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

// c(i) = b(a(i)) — apply a, then b. Throws DegreeMismatch.
Transformation compose(const Transformation& a, const Transformation& b);

struct Profile {
  std::vector<int> image;                // sorted set {a(i)}
  std::vector<std::vector<int>> kernel;  // blocks by smallest member,
                                         // members ascending
  int rank = 0;                          // |image|
};

Profile profile(const Transformation& a);

// Number of distinct image points (cheaper than a full profile).
int rank_of(const Transformation& a);

// The unique idempotent in the cyclic subsemigroup generated by a,
// found by the linear power walk b <- b·a until b·b = b.
Transformation idempotent_power(const Transformation& a);

}  // namespace monoidrep
