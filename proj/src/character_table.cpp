#include "monoidrep/character_table.hpp"

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monoidrep/errors.hpp"
#include "monoidrep/group_character.hpp"
#include "monoidrep/radical.hpp"

namespace monoidrep {

namespace {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

// The member of H(e₀) whose action on the reference image equals the
// permutation sigma; unique by the free transitivity of the group
// action on its H-class.
int lift_to_group_hclass(const MonoidTable& table,
                         const GreenStructure& structure,
                         const ColumnGroup& rc, int e0, const Perm& sigma) {
  const Transformation& e = table.element(e0);
  std::vector<int> images(table.degree());
  for (int i = 1; i <= table.degree(); ++i) {
    images[static_cast<std::size_t>(i) - 1] =
        rc.points[sigma.img[rc.pos[e(i)]]];
  }
  const int b = table.find(Transformation(images));
  internal_check(b >= 0 && structure.hclass_of[b] == structure.hclass_of[e0],
                 "lift into the group H-class failed");
  return b;
}

// Trace of z ↦ s·z·b on the radical subspace. With the basis rows in
// reduced form (unit at each free position), the selector at the free
// positions inverts the basis, so the trace of the restricted map is
// Σ_k (A·N)(free position k, k).
mpq_class radical_trace(const MonoidTable& table, const ReferenceRadical& rad,
                        const std::unordered_map<int, int>& position, int s,
                        int b) {
  const RationalMatrix& n = rad.nullspace_rows;
  const int dim = n.rows();
  if (dim == 0) return 0;
  const int len = n.cols();

  RationalMatrix an(len, dim);  // A·N, columns = mapped basis vectors
  for (int x = 0; x < len; ++x) {
    const int y = table.product(table.product(s, rad.basis_elements[x]), b);
    auto it = position.find(y);
    if (it == position.end()) continue;  // dropped out of the L-class
    for (int k = 0; k < dim; ++k) an.at(it->second, k) += n.at(k, x);
  }

  // Stability guard: each mapped basis vector must reconstruct from its
  // free-position coordinates, i.e. lie back in the subspace.
  for (int k = 0; k < dim; ++k) {
    for (int x = 0; x < len; ++x) {
      mpq_class r = 0;
      for (int m = 0; m < dim; ++m)
        r += an.at(rad.free_positions[m], k) * n.at(m, x);
      internal_check(r == an.at(x, k),
                     "radical subspace is not stable under the action");
    }
  }

  mpq_class trace = 0;
  for (int k = 0; k < dim; ++k) trace += an.at(rad.free_positions[k], k);
  return trace;
}

CycMatrix cyc_multiply(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b[0].size();
  CycMatrix c(rows, std::vector<Cyclotomic>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

// Exact Gauss–Jordan inverse over the cyclotomic field.
CycMatrix cyc_inverse(const CycMatrix& a) {
  const int n = static_cast<int>(a.size());
  CycMatrix m(n, std::vector<Cyclotomic>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pr = r;
        break;
      }
    internal_check(pr >= 0, "character table is singular");
    std::swap(m[pr], m[col]);
    const Cyclotomic inv = m[col][col].inverse();
    for (int j = col; j < 2 * n; ++j) m[col][j] = m[col][j] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Cyclotomic f = m[r][col];
      for (int j = col; j < 2 * n; ++j) m[r][j] -= m[col][j] * f;
    }
  }
  CycMatrix out(n, std::vector<Cyclotomic>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace

std::vector<ReferenceRadical> reference_radicals(
    const MonoidTable& table, const GreenStructure& structure,
    const GroupTables& tables) {
  std::vector<ReferenceRadical> out;
  for (int j = 0; j < structure.num_jclasses(); ++j) {
    if (!structure.jclasses[j].regular) continue;
    const JClassGroups& jg = tables.per_j[j];
    ReferenceRadical rad;
    rad.jclass = j;
    const int lc = jg.columns[jg.ref_col].lclass;
    rad.basis_elements = structure.lclass_members[lc];
    rad.nullspace_rows =
        lclass_radical(table, structure, lc, &rad.free_positions);
    out.push_back(std::move(rad));
  }
  return out;
}

MonoidCharTable character_table(
    const MonoidTable& table, const GreenStructure& structure,
    const GroupTables& tables, const TestElements& cm,
    const std::vector<ReferenceRadical>& radicals) {
  const int n = static_cast<int>(cm.representatives.size());
  std::vector<const ReferenceRadical*> rad_of(structure.num_jclasses(),
                                              nullptr);
  for (const ReferenceRadical& rad : radicals) rad_of[rad.jclass] = &rad;

  MonoidCharTable out;
  for (int j = 0; j < structure.num_jclasses(); ++j) {
    if (!structure.jclasses[j].regular) continue;
    const JClassGroups& jg = tables.per_j[j];
    if (jg.columns.empty() || jg.ref_idempotent < 0) {
      throw NotRegularJClassData("regular J-class " + std::to_string(j) +
                                 " has no Schützenberger data");
    }
    const ReferenceRadical* rad = rad_of[j];
    if (rad == nullptr) {
      throw NotRegularJClassData("regular J-class " + std::to_string(j) +
                                 " has no radical data");
    }

    const ColumnGroup& rc = jg.columns[jg.ref_col];
    const GroupCharTable gct = group_character_table(rc.group);
    internal_check(
        gct.classes.representative == rc.classes.representative &&
            gct.classes.inverse_class == rc.classes.inverse_class,
        "conjugacy class orders disagree");
    const int ncls = gct.num_classes();

    std::vector<int> b_of(ncls);
    for (int c = 0; c < ncls; ++c) {
      const Perm& sigma = rc.group.elements()[rc.classes.representative[c]];
      b_of[c] = lift_to_group_hclass(table, structure, rc,
                                     jg.ref_idempotent, sigma);
    }
    std::unordered_map<int, int> position;
    for (int p = 0; p < static_cast<int>(rad->basis_elements.size()); ++p)
      position.emplace(rad->basis_elements[p], p);

    // weight[m][c] = |class c| · (F(s_m, b_c) − trace on the radical)
    std::vector<std::vector<mpq_class>> weight(
        n, std::vector<mpq_class>(ncls));
    for (int m = 0; m < n; ++m) {
      const int s = cm.representatives[m];
      const LeftSurvival ls = left_survival(table, structure, tables, j, s);
      for (int c = 0; c < ncls; ++c) {
        // F(s, b_c): every cell of the reference column survives b_c on
        // the right with induced permutation σ_c, so each surviving row
        // whose γ_s class is inverse to c contributes a centralizer.
        const int ic = rc.classes.inverse_class[c];
        mpq_class f = 0;
        if (ls.by_class[ic] > 0) {
          f = mpq_class(static_cast<long>(
              ls.by_class[ic] * (rc.group.order() / rc.classes.size[ic])));
        }
        const mpq_class tn =
            radical_trace(table, *rad, position, s, b_of[c]);
        weight[m][c] = mpq_class(rc.classes.size[c]) * (f - tn);
      }
    }

    const mpq_class scale(1, rc.group.order());
    for (int v = 0; v < ncls; ++v) {
      out.irreducibles.emplace_back(j, v);
      std::vector<Cyclotomic> row(n);
      for (int m = 0; m < n; ++m) {
        Cyclotomic acc;
        for (int c = 0; c < ncls; ++c) {
          if (weight[m][c] == 0) continue;
          acc += gct.at(v, rc.classes.inverse_class[c]) * weight[m][c];
        }
        acc *= scale;
        row[m] = std::move(acc);
      }
      out.values.push_back(std::move(row));
    }
  }

  internal_check(static_cast<int>(out.irreducibles.size()) == n,
                 "character table is not square");
  return out;
}

CartanMatrix cartan_matrix(const MonoidCharTable& x,
                           const BicharacterMatrix& b) {
  const int n = x.size();
  internal_check(b.n == n, "bilinear form size differs from the table");

  const CycMatrix xi = cyc_inverse(x.values);
  CycMatrix xti(n, std::vector<Cyclotomic>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) xti[i][j] = xi[j][i];
  CycMatrix bc(n, std::vector<Cyclotomic>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      bc[i][j] = mpq_class(static_cast<long>(b.at(i, j)));

  const CycMatrix c = cyc_multiply(cyc_multiply(xti, bc), xi);

  CartanMatrix out;
  out.entries.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cyclotomic& v = c[i][j];
      const std::string where = "Cartan entry (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")";
      if (!v.is_rational()) {
        throw NonIntegralResult(where + " is irrational: " + v.to_string());
      }
      const mpq_class q = v.rational_value();
      if (q.get_den() != 1) {
        throw NonIntegralResult(where + " is not an integer: " +
                                q.get_str());
      }
      if (q < 0) throw NegativeEntry(where + " is negative: " + q.get_str());
      internal_check(q.get_num().fits_slong_p(), "Cartan entry overflows");
      out.entries[i][j] = q.get_num().get_si();
    }
  }
  return out;
}

std::vector<long> simple_dimensions(const MonoidCharTable& x) {
  std::vector<long> dims;
  dims.reserve(x.size());
  for (int r = 0; r < x.size(); ++r) {
    const Cyclotomic& v = x.at(r, 0);
    if (!v.is_rational()) {
      throw NonIntegralDimension("dimension entry is irrational: " +
                                 v.to_string());
    }
    const mpq_class q = v.rational_value();
    if (q.get_den() != 1 || q <= 0) {
      throw NonIntegralDimension("dimension entry is not a positive integer: " +
                                 q.get_str());
    }
    internal_check(q.get_num().fits_slong_p(), "dimension overflows");
    dims.push_back(q.get_num().get_si());
  }
  return dims;
}

}  // namespace monoidrep
