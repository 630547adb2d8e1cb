#pragma once

// Exact cyclotomic numbers: elements of Q(ζ_e) stored as rational
// coordinates on the power basis 1, ζ_e, …, ζ_e^{φ(e)−1}, always reduced
// to the smallest possible conductor. The representation is canonical:
// equal values have identical (conductor, coeffs), so comparison,
// sorting, and serialization are value-deterministic.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace monoidrep {

class Cyclotomic {
public:
  Cyclotomic() : coeffs_{mpq_class(0)} {}
  Cyclotomic(const mpq_class& r) : coeffs_{r} {}  // NOLINT: implicit wrap
  Cyclotomic(int r) : coeffs_{mpq_class(r)} {}    // NOLINT: implicit wrap

  // ζ_order^power, canonicalized (e.g. ζ_6 comes back with conductor 3).
  static Cyclotomic root_of_unity(int order, long power = 1);

  int conductor() const { return conductor_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const { return conductor_ == 1; }
  mpq_class rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpq_class& r);

  Cyclotomic inverse() const;    // requires nonzero
  Cyclotomic conjugate() const;  // complex conjugation, ζ_e ↦ ζ_e^{e−1}

  bool operator==(const Cyclotomic&) const = default;

  // "z{e}" notation, e.g. "1", "-1/2", "z4", "z5^2+1". Highest power
  // first; purely cosmetic (used by the text output format).
  std::string to_string() const;

private:
  void normalize();

  int conductor_ = 1;
  std::vector<mpq_class> coeffs_;  // length φ(conductor_)
};

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b);
Cyclotomic operator*(Cyclotomic a, const mpq_class& r);

// Total order used wherever character values must be ranked: smaller
// conductor first, then coefficient vectors compared entrywise with the
// larger rational winning (so 1 sorts before −1).
bool value_less(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace monoidrep
