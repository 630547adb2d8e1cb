#include "monoidrep/group_character.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "monoidrep/errors.hpp"

namespace monoidrep {

namespace {

using i64 = long long;

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> qs;
  i64 t = p - 1;
  for (i64 q = 2; q * q <= t; ++q)
    if (t % q == 0) {
      qs.push_back(q);
      while (t % q == 0) t /= q;
    }
  if (t > 1) qs.push_back(t);
  for (i64 z = 2;; ++z) {
    bool ok = true;
    for (i64 q : qs) ok = ok && powmod(z, (p - 1) / q, p) != 1;
    if (ok) return z;
  }
}

int perm_order(const Perm& x) {
  const int k = x.size();
  std::vector<char> seen(k, 0);
  long long ord = 1;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = x.img[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm<long long>(ord, len);
  }
  return static_cast<int>(ord);
}

// Kernel basis of m (rows × cols) over F_p; deterministic echelon basis
// with entry 1 at each free column.
std::vector<std::vector<i64>> kernel_mod_p(std::vector<std::vector<i64>> m,
                                           i64 p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    i64 inv = invmod(m[row][col], p);
    for (int j = col; j < cols; ++j) m[row][j] = m[row][j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      i64 f = m[i][col];
      for (int j = col; j < cols; ++j)
        m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int pc : pivots) is_pivot[pc] = 1;
  std::vector<std::vector<i64>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p - m[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ConjugacyClasses conjugacy_classes(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  ConjugacyClasses cc;
  cc.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (cc.class_of[i] >= 0) continue;
    const int c = static_cast<int>(cc.representative.size());
    cc.representative.push_back(i);
    std::vector<int> queue{i};
    cc.class_of[i] = c;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm& t : g.generators()) {
        Perm y =
            pcompose(pcompose(t.inverse(), g.elements()[queue[qi]]), t);
        int yi = g.index_of(y);
        internal_check(yi >= 0, "conjugate left the group");
        if (cc.class_of[yi] < 0) {
          cc.class_of[yi] = c;
          queue.push_back(yi);
        }
      }
    cc.size.push_back(static_cast<int>(queue.size()));
  }
  int total = 0;
  for (int s : cc.size) total += s;
  internal_check(total == n, "conjugacy class sizes do not sum to |G|");
  for (int rep : cc.representative) {
    int inv = g.index_of(g.elements()[rep].inverse());
    internal_check(inv >= 0, "inverse left the group");
    cc.inverse_class.push_back(cc.class_of[inv]);
  }
  return cc;
}

GroupCharTable group_character_table(const PermGroup& g) {
  GroupCharTable table;
  table.classes = conjugacy_classes(g);
  const ConjugacyClasses& cc = table.classes;
  const int r = static_cast<int>(cc.representative.size());
  const i64 n = g.order();

  // Group exponent and the working prime p ≡ 1 (mod exponent), p > 2|G|,
  // so F_p contains the needed roots of unity and all the small integers
  // we lift (degrees, multiplicities) are determined by their residues.
  std::vector<int> rep_order(r);
  i64 exponent = 1;
  for (int c = 0; c < r; ++c) {
    rep_order[c] = perm_order(g.elements()[cc.representative[c]]);
    exponent = std::lcm<i64>(exponent, rep_order[c]);
  }
  i64 p = exponent + 1;
  while (p <= 2 * n || !is_prime(p)) p += exponent;

  // Classes of the powers of each representative (used by the lift).
  std::vector<std::vector<int>> power_class(r);
  for (int c = 0; c < r; ++c) {
    Perm x = Perm::identity(g.elements()[0].size());
    for (int s = 0; s < rep_order[c]; ++s) {
      int xi = g.index_of(x);
      internal_check(xi >= 0, "power left the group");
      power_class[c].push_back(cc.class_of[xi]);
      x = pcompose(x, g.elements()[cc.representative[c]]);
    }
  }

  // Class-algebra matrices: B[i][j][l] counts pairs (x, y) in c_i × c_j
  // with x·y = rep_l. Central characters are their common eigenvectors.
  std::vector<std::vector<int>> members(r);
  for (int e = 0; e < n; ++e) members[cc.class_of[e]].push_back(e);
  std::vector<std::vector<std::vector<i64>>> B(
      r, std::vector<std::vector<i64>>(r, std::vector<i64>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int l = 0; l < r; ++l)
      for (int x : members[i]) {
        Perm y = pcompose(g.elements()[x].inverse(),
                          g.elements()[cc.representative[l]]);
        int yi = g.index_of(y);
        internal_check(yi >= 0, "class matrix product left the group");
        B[i][cc.class_of[yi]][l] += 1;
      }

  // Iteratively split F_p^r into common eigenspaces of the B[i].
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> full(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (const auto& space : spaces) {
      const int k = static_cast<int>(space.size());
      if (k == 1) {
        next.push_back(space);
        continue;
      }
      int found = 0;
      for (i64 lam = 0; lam < p && found < k; ++lam) {
        // kernel of (B_i − λ)·V^T expressed in V-coordinates
        std::vector<std::vector<i64>> a(r, std::vector<i64>(k, 0));
        for (int j = 0; j < k; ++j)
          for (int t = 0; t < r; ++t) {
            i64 acc = 0;
            for (int u = 0; u < r; ++u)
              acc = (acc + B[i][t][u] % p * space[j][u]) % p;
            a[t][j] = ((acc - lam * space[j][t]) % p + p) % p;
          }
        auto ker = kernel_mod_p(std::move(a), p);
        if (ker.empty()) continue;
        std::vector<std::vector<i64>> eigen;
        for (const auto& kv : ker) {
          std::vector<i64> u(r, 0);
          for (int j = 0; j < k; ++j)
            for (int t = 0; t < r; ++t)
              u[t] = (u[t] + kv[j] * space[j][t]) % p;
          eigen.push_back(std::move(u));
        }
        found += static_cast<int>(eigen.size());
        next.push_back(std::move(eigen));
      }
      internal_check(found == k, "eigenspace split lost dimensions");
    }
    spaces = std::move(next);
  }
  internal_check(static_cast<int>(spaces.size()) == r,
                 "wrong number of central characters");

  // Normalize each central character (identity coordinate 1), recover
  // the degree from the orthogonality relation, then lift every value
  // from eigenvalue multiplicities of the representative's cyclic group.
  const i64 w = powmod(primitive_root(p), (p - 1) / exponent, p);
  i64 degree_square_sum = 0;
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& space : spaces) {
    internal_check(space.size() == 1, "eigenspace not fully split");
    std::vector<i64> omega = space[0];
    internal_check(omega[0] % p != 0, "central character vanishes at 1");
    const i64 scale = invmod(omega[0], p);
    for (i64& v : omega) v = v * scale % p;

    i64 s = 0;
    for (int l = 0; l < r; ++l)
      s = (s + omega[l] * omega[cc.inverse_class[l]] % p *
                   invmod(cc.size[l], p)) %
          p;
    internal_check(s != 0, "degenerate central character");
    const i64 dsq = n % p * invmod(s, p) % p;
    i64 degree = 0;
    for (i64 d = 1; d * d <= n; ++d)
      if (d * d % p == dsq) {
        degree = d;
        break;
      }
    internal_check(degree > 0, "no valid degree for central character");
    degree_square_sum += degree * degree;

    std::vector<i64> chi_p(r);
    for (int l = 0; l < r; ++l)
      chi_p[l] = degree % p * omega[l] % p * invmod(cc.size[l], p) % p;

    std::vector<Cyclotomic> row(r);
    for (int l = 0; l < r; ++l) {
      const int ro = rep_order[l];
      const i64 lam = powmod(w, exponent / ro, p);
      const i64 inv_ro = invmod(ro, p);
      Cyclotomic value;
      for (int t = 0; t < ro; ++t) {
        i64 nt = 0;
        for (int s2 = 0; s2 < ro; ++s2) {
          i64 e = ((ro - static_cast<i64>(s2) * t % ro) % ro);
          nt = (nt + chi_p[power_class[l][s2]] * powmod(lam, e, p)) % p;
        }
        nt = nt * inv_ro % p;
        internal_check(nt <= degree, "eigenvalue multiplicity overflow");
        if (nt != 0)
          value += Cyclotomic(static_cast<int>(nt)) *
                   Cyclotomic::root_of_unity(ro, t);
      }
      row[l] = std::move(value);
    }
    internal_check(row[0].is_rational() &&
                       row[0].rational_value() ==
                           mpq_class(static_cast<long>(degree)),
                   "lifted dimension mismatch");
    rows.push_back(std::move(row));
  }
  internal_check(degree_square_sum == n, "degree squares do not sum to |G|");

  std::sort(rows.begin(), rows.end(),
            [](const std::vector<Cyclotomic>& a,
               const std::vector<Cyclotomic>& b) {
              const mpq_class da = a[0].rational_value();
              const mpq_class db = b[0].rational_value();
              if (da != db) return da < db;
              for (std::size_t i = 0; i < a.size(); ++i)
                if (!(a[i] == b[i])) return value_less(a[i], b[i]);
              return false;
            });
  table.values = std::move(rows);
  return table;
}

}  // namespace monoidrep
