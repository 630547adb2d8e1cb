#include "monoidrep/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "monoidrep/errors.hpp"
#include "monoidrep/rational_matrix.hpp"

namespace monoidrep {

namespace {

std::vector<int> divisors_of(int e) {
  std::vector<int> d;
  for (int i = 1; i <= e; ++i)
    if (e % i == 0) d.push_back(i);
  return d;
}

// Exact division of integer polynomials by a monic divisor.
std::vector<mpz_class> poly_divexact(std::vector<mpz_class> num,
                                     const std::vector<mpz_class>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  internal_check(dd >= 0 && den.back() == 1 && dn >= dd,
                 "polynomial division needs a monic divisor");
  std::vector<mpz_class> q(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    mpz_class c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const mpz_class& c : num)
    internal_check(c == 0, "polynomial division left a remainder");
  return q;
}

// Per-conductor data: the cyclotomic polynomial Φ_e and the reductions
// of the monomials x^j modulo Φ_e, high enough for lifting (j < e) and
// for products of reduced elements (j ≤ 2φ−2).
struct ConductorData {
  int phi;
  std::vector<mpz_class> cyclo;             // Φ_e, ascending, monic
  std::vector<std::vector<mpz_class>> pow;  // x^j mod Φ_e
};

std::map<int, ConductorData> g_cache;
std::recursive_mutex g_mutex;  // all public entry points lock this

const ConductorData& conductor_data(int e) {
  internal_check(e >= 1 && e <= 65536, "conductor out of supported range");
  auto it = g_cache.find(e);
  if (it != g_cache.end()) return it->second;

  // Φ_e = (x^e − 1) / Π_{d | e, d < e} Φ_d.
  std::vector<mpz_class> cyclo(e + 1);
  cyclo[0] = -1;
  cyclo[e] = 1;
  for (int d : divisors_of(e))
    if (d < e) cyclo = poly_divexact(std::move(cyclo), conductor_data(d).cyclo);

  ConductorData data;
  data.phi = static_cast<int>(cyclo.size()) - 1;
  data.cyclo = std::move(cyclo);
  const int maxdeg = std::max(e - 1, 2 * data.phi - 2);
  data.pow.resize(maxdeg + 1);
  data.pow[0].assign(data.phi, mpz_class(0));
  data.pow[0][0] = 1;
  for (int j = 1; j <= maxdeg; ++j) {
    const std::vector<mpz_class>& prev = data.pow[j - 1];
    std::vector<mpz_class> t(data.phi, mpz_class(0));
    for (int i = data.phi - 1; i >= 1; --i) t[i] = prev[i - 1];
    const mpz_class& lead = prev[data.phi - 1];  // coefficient shifted to x^φ
    if (lead != 0)
      for (int i = 0; i < data.phi; ++i) t[i] -= lead * data.cyclo[i];
    data.pow[j] = std::move(t);
  }
  return g_cache.emplace(e, std::move(data)).first->second;
}

// Coordinates of a in the conductor-m basis (a's conductor divides m).
std::vector<mpq_class> lift_coeffs(int conductor,
                                   const std::vector<mpq_class>& coeffs,
                                   int m, const ConductorData& md) {
  std::vector<mpq_class> out(md.phi, mpq_class(0));
  const int step = m / conductor;  // ζ_f = ζ_m^{m/f}
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const std::vector<mpz_class>& pw = md.pow[k * step];
    for (int i = 0; i < md.phi; ++i) out[i] += coeffs[k] * pw[i];
  }
  return out;
}

}  // namespace

Cyclotomic Cyclotomic::root_of_unity(int order, long power) {
  internal_check(order >= 1, "root order must be positive");
  long p = power % order;
  if (p < 0) p += order;
  if (order == 1 || p == 0) return Cyclotomic(1);
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const ConductorData& d = conductor_data(order);
  Cyclotomic z;
  z.conductor_ = order;
  z.coeffs_.assign(d.phi, mpq_class(0));
  for (int i = 0; i < d.phi; ++i) z.coeffs_[i] = d.pow[p][i];
  z.normalize();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const mpq_class& c : coeffs_)
    if (c != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  internal_check(conductor_ == 1, "value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;  // negation preserves the minimal conductor
  for (mpq_class& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const int m = std::lcm(conductor_, o.conductor_);
  const ConductorData& md = conductor_data(m);
  std::vector<mpq_class> a = lift_coeffs(conductor_, coeffs_, m, md);
  std::vector<mpq_class> b = lift_coeffs(o.conductor_, o.coeffs_, m, md);
  for (int i = 0; i < md.phi; ++i) a[i] += b[i];
  conductor_ = m;
  coeffs_ = std::move(a);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ == 1 && o.conductor_ == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const int m = std::lcm(conductor_, o.conductor_);
  const ConductorData& md = conductor_data(m);
  std::vector<mpq_class> a = lift_coeffs(conductor_, coeffs_, m, md);
  std::vector<mpq_class> b = lift_coeffs(o.conductor_, o.coeffs_, m, md);
  std::vector<mpq_class> prod(2 * md.phi - 1, mpq_class(0));
  for (int i = 0; i < md.phi; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < md.phi; ++j) prod[i + j] += a[i] * b[j];
  }
  std::vector<mpq_class> red(md.phi, mpq_class(0));
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const std::vector<mpz_class>& pw = md.pow[k];
    for (int i = 0; i < md.phi; ++i) red[i] += prod[k] * pw[i];
  }
  conductor_ = m;
  coeffs_ = std::move(red);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& r) {
  if (r == 0) {
    *this = Cyclotomic();
  } else {
    // nonzero rational scaling preserves the minimal conductor
    for (mpq_class& c : coeffs_) c *= r;
  }
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  internal_check(!is_zero(), "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(mpq_class(1) / coeffs_[0]);
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const ConductorData& d = conductor_data(conductor_);
  // Columns of M are the coordinates of (this · x^k); solving M·x = 1
  // yields the coordinates of the inverse.
  RationalMatrix m(d.phi, d.phi);
  for (int k = 0; k < d.phi; ++k)
    for (int i = 0; i < d.phi; ++i) {
      if (coeffs_[i] == 0) continue;
      const std::vector<mpz_class>& pw = d.pow[i + k];
      for (int t = 0; t < d.phi; ++t) m.at(t, k) += coeffs_[i] * pw[t];
    }
  std::vector<mpq_class> one(d.phi, mpq_class(0));
  one[0] = 1;
  auto x = solve(m, one);
  internal_check(x.has_value(), "cyclotomic inverse solve failed");
  Cyclotomic r;
  r.conductor_ = conductor_;
  r.coeffs_ = std::move(*x);
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  if (conductor_ == 1) return *this;
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const ConductorData& d = conductor_data(conductor_);
  Cyclotomic r;
  r.conductor_ = conductor_;
  r.coeffs_.assign(d.phi, mpq_class(0));
  for (int k = 0; k < d.phi; ++k) {
    if (coeffs_[k] == 0) continue;
    const std::vector<mpz_class>& pw = d.pow[(conductor_ - k) % conductor_];
    for (int i = 0; i < d.phi; ++i) r.coeffs_[i] += coeffs_[k] * pw[i];
  }
  r.normalize();
  return r;
}

void Cyclotomic::normalize() {
  if (is_zero()) {
    conductor_ = 1;
    coeffs_.assign(1, mpq_class(0));
    return;
  }
  if (conductor_ == 1) return;
  std::lock_guard<std::recursive_mutex> lock(g_mutex);
  const ConductorData& ed = conductor_data(conductor_);
  // The minimal conductor always divides the current one, so the first
  // divisor (ascending) whose field contains the value is canonical.
  for (int f : divisors_of(conductor_)) {
    if (f == conductor_) break;
    const ConductorData& fd = conductor_data(f);
    RationalMatrix basis(ed.phi, fd.phi);
    const int step = conductor_ / f;
    for (int k = 0; k < fd.phi; ++k) {
      const std::vector<mpz_class>& pw = ed.pow[k * step];
      for (int i = 0; i < ed.phi; ++i) basis.at(i, k) = pw[i];
    }
    if (auto x = solve(basis, coeffs_)) {
      conductor_ = f;
      coeffs_ = std::move(*x);
      return;
    }
  }
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string s;
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? "-" : "+";
    }
    mpq_class a = abs(c);
    if (k == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += "z" + std::to_string(conductor_);
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
Cyclotomic operator*(Cyclotomic a, const mpq_class& r) { return a *= r; }

bool value_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] > b.coeffs()[i];
  return false;
}

}  // namespace monoidrep
