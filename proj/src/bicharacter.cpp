#include "monoidrep/bicharacter.hpp"

#include <algorithm>
#include <map>

#include "monoidrep/errors.hpp"
#include "monoidrep/parallel.hpp"

namespace monoidrep {

namespace {

// Minimal-index element of the grid cell (row r, column l) of J-class j.
int cell_base(const GreenStructure& structure, int j, int r, int l) {
  return structure.hclass_members[structure.jclasses[j].grid[r][l]][0];
}

// The image-side permutation sending a(i) to b(i), in the column's
// position coordinates. Well defined when b shares a's kernel and image.
Perm image_perm(const ColumnGroup& cg, const Transformation& a,
                const Transformation& b) {
  Perm p;
  p.img.assign(cg.points.size(), -1);
  for (int i = 1; i <= a.degree(); ++i) {
    const int s = cg.pos[a(i)];
    const int t = cg.pos[b(i)];
    internal_check(s >= 0 && t >= 0, "cell permutation leaves the image");
    internal_check(p.img[s] == -1 || p.img[s] == t,
                   "cell permutation is ill defined");
    p.img[s] = t;
  }
  return p;
}

// The permutation of the column image induced by the transformation t
// (defined when t maps the image onto itself).
Perm restriction_perm(const ColumnGroup& cg, const Transformation& t) {
  Perm p;
  p.img.resize(cg.points.size());
  for (std::size_t i = 0; i < cg.points.size(); ++i) {
    const int q = cg.pos[t(cg.points[i])];
    internal_check(q >= 0, "restriction leaves the image");
    p.img[i] = q;
  }
  return p;
}

Perm transported(const ColumnGroup& cg, const Perm& g) {
  Perm t;
  t.img.resize(g.img.size());
  for (int i = 0; i < g.size(); ++i) t.img[cg.to_ref[i]] = cg.to_ref[g.img[i]];
  return t;
}

// Column position of L-class lc inside the J-class's sorted l_ids.
int column_of(const JClassData& jd, int lc) {
  auto it = std::lower_bound(jd.l_ids.begin(), jd.l_ids.end(), lc);
  internal_check(it != jd.l_ids.end() && *it == lc,
                 "L-class missing from its J-class grid");
  return static_cast<int>(it - jd.l_ids.begin());
}

// Conjugacy class (in the column's own group) of the permutation
// induced by left multiplication by s on the cell (row, col), or −1
// when the row does not survive there. Row survival is uniform along
// the row; the class depends on the row but transports consistently
// across columns (class_to_ref), so one column suffices per J-class.
int row_perm_class(const MonoidTable& table, const GreenStructure& structure,
                   const ColumnGroup& cg, int j, int row, int col, int s) {
  const JClassData& jd = structure.jclasses[j];
  const int base = cell_base(structure, j, row, col);
  const int y = table.product(s, base);
  if (structure.hclass_of[y] != jd.grid[row][col]) return -1;
  const Perm gamma = image_perm(cg, table.element(base), table.element(y));
  const int gi = cg.group.index_of(gamma);
  internal_check(gi >= 0, "induced permutation left the column group");
  return cg.classes.class_of[gi];
}

}  // namespace

GroupTables build_group_tables(const MonoidTable& table,
                               const GreenStructure& structure) {
  GroupTables gt;
  const int degree = table.degree();
  for (int j = 0; j < structure.num_jclasses(); ++j) {
    const JClassData& jd = structure.jclasses[j];
    JClassGroups jg;
    const int ncols = static_cast<int>(jd.l_ids.size());

    if (jd.regular) {
      auto h = regular_hclass(structure, j);
      internal_check(h.has_value(), "regular J-class without group cell");
      const int member = structure.hclass_members[*h][0];
      jg.ref_col = column_of(jd, structure.lclass_of[member]);
      for (int x : structure.hclass_members[*h])
        if (table.product(x, x) == x) {
          jg.ref_idempotent = x;
          break;
        }
      internal_check(jg.ref_idempotent >= 0,
                     "group cell without an idempotent");
    }

    jg.columns.resize(ncols);
    for (int li = 0; li < ncols; ++li) {
      ColumnGroup& cg = jg.columns[li];
      cg.lclass = jd.l_ids[li];
      cg.group =
          schutzenberger(table, structure, jd.grid[0][li], Side::left);
      cg.points = cg.group.domain();
      cg.pos.assign(degree + 1, -1);
      for (std::size_t p = 0; p < cg.points.size(); ++p)
        cg.pos[cg.points[p]] = static_cast<int>(p);
      cg.classes = conjugacy_classes(cg.group);
    }

    // Conjugating maps into the reference column, via same-kernel Green
    // pairs between the top-row cell bases.
    const ColumnGroup& rc = jg.columns[jg.ref_col];
    for (int li = 0; li < ncols; ++li) {
      ColumnGroup& cg = jg.columns[li];
      cg.to_ref.resize(cg.points.size());
      if (li == jg.ref_col) {
        for (std::size_t i = 0; i < cg.points.size(); ++i)
          cg.to_ref[i] = static_cast<int>(i);
        continue;
      }
      const Transformation& from =
          table.element(cell_base(structure, j, 0, li));
      const Transformation& to =
          table.element(cell_base(structure, j, 0, jg.ref_col));
      const PartialBijection rho = green_pair(from, to, Side::left);
      internal_check(rho.domain == cg.points,
                     "Green pair domain differs from the column image");
      for (std::size_t i = 0; i < cg.points.size(); ++i) {
        cg.to_ref[i] = rc.pos[rho.codomain[i]];
        internal_check(cg.to_ref[i] >= 0,
                       "Green pair misses the reference image");
      }
    }
    // Class correspondence under the transport isomorphism.
    for (int li = 0; li < ncols; ++li) {
      ColumnGroup& cg = jg.columns[li];
      const int nclasses =
          static_cast<int>(cg.classes.representative.size());
      cg.class_to_ref.resize(nclasses);
      for (int k = 0; k < nclasses; ++k) {
        const Perm& rep = cg.group.elements()[cg.classes.representative[k]];
        const int idx = rc.group.index_of(transported(cg, rep));
        internal_check(idx >= 0, "transport left the reference group");
        cg.class_to_ref[k] = rc.classes.class_of[idx];
        internal_check(rc.classes.size[cg.class_to_ref[k]] ==
                           cg.classes.size[k],
                       "transported class changed size");
      }
    }
    gt.per_j.push_back(std::move(jg));
  }
  return gt;
}

long fixed_points(const MonoidTable& table, const GreenStructure& structure,
                  const GroupTables& tables, int s, int t) {
  internal_check(s >= 0 && s < table.size() && t >= 0 && t < table.size(),
                 "fixed point query out of range");
  long total = 0;
  for (int j = 0; j < structure.num_jclasses(); ++j) {
    const JClassData& jd = structure.jclasses[j];
    const JClassGroups& jg = tables.per_j[j];
    const ColumnGroup& c0 = jg.columns[0];
    const ColumnGroup& rc = jg.columns[jg.ref_col];

    // Surviving rows, histogrammed by the reference-group class of the
    // induced permutation γ_s. Each row's class is read at column 0 and
    // transported; it varies with the row.
    std::vector<long> rows_by(rc.classes.representative.size(), 0);
    bool any = false;
    for (int r = 0; r < static_cast<int>(jd.r_ids.size()); ++r) {
      const int k = row_perm_class(table, structure, c0, j, r, 0, s);
      if (k < 0) continue;
      ++rows_by[c0.class_to_ref[k]];
      any = true;
    }
    if (!any) continue;

    for (int li = 0; li < static_cast<int>(jd.l_ids.size()); ++li) {
      // Column survival for t, uniform down the column; checked on top.
      const int base0 = cell_base(structure, j, 0, li);
      if (structure.hclass_of[table.product(base0, t)] != jd.grid[0][li])
        continue;
      const ColumnGroup& cg = jg.columns[li];
      const Perm delta = restriction_perm(cg, table.element(t));
      const int di = cg.group.index_of(delta);
      internal_check(di >= 0, "restriction left the column group");
      const int dc = cg.classes.class_of[di];
      // Cell (r, li) count: solutions γ of γ = γ_s·γ·δ_t, i.e.
      // γ⁻¹·γ_s·γ = δ_t⁻¹; nonzero only when γ_s is conjugate to δ_t⁻¹,
      // and then equal to the centralizer size |Γ|/|class(γ_s)|. Both
      // classes are compared in reference-group coordinates.
      const int ic = cg.class_to_ref[cg.classes.inverse_class[dc]];
      if (rows_by[ic] > 0)
        total += rows_by[ic] * (rc.group.order() / rc.classes.size[ic]);
    }
  }
  return total;
}

long fixed_points_exhaustive(const MonoidTable& table, int s, int t) {
  long count = 0;
  for (int x = 0; x < table.size(); ++x)
    if (table.product(table.product(s, x), t) == x) ++count;
  return count;
}

std::pair<int, int> character_class_of(const MonoidTable& table,
                                       const GreenStructure& structure,
                                       const GroupTables& tables, int s) {
  // Idempotent power e = s^ω by walking s, s², …
  int e = s;
  for (int guard = 0;; ++guard) {
    internal_check(guard <= table.size(), "idempotent power walk diverged");
    if (table.product(e, e) == e) break;
    e = table.product(e, s);
  }
  const int q = table.product(s, e);  // s^{ω+1}, in the group H-class of e

  const int j = structure.jclass_of[e];
  const JClassData& jd = structure.jclasses[j];
  const JClassGroups& jg = tables.per_j[j];
  internal_check(jd.regular, "idempotent in a non-regular J-class");
  const int li = column_of(jd, structure.lclass_of[e]);
  const ColumnGroup& cg = jg.columns[li];

  // At the idempotent base the induced permutation is literally q
  // restricted to the image (e fixes its image pointwise).
  const Perm lam = image_perm(cg, table.element(e), table.element(q));
  const Perm tr = transported(cg, lam);
  const ColumnGroup& rc = jg.columns[jg.ref_col];
  const int idx = rc.group.index_of(tr);
  internal_check(idx >= 0, "transport left the reference group");
  return {j, rc.classes.class_of[idx]};
}

TestElements compute_c_m(const MonoidTable& table,
                         const GreenStructure& structure,
                         const GroupTables& tables) {
  std::map<std::pair<int, int>, int> best;
  for (int s = 0; s < table.size(); ++s) {
    const auto key = character_class_of(table, structure, tables, s);
    auto [it, inserted] = best.emplace(key, s);
    if (!inserted && table.element(s) < table.element(it->second))
      it->second = s;
  }

  long expected = 0;
  for (int j = 0; j < structure.num_jclasses(); ++j)
    if (structure.jclasses[j].regular) {
      const JClassGroups& jg = tables.per_j[j];
      expected += static_cast<long>(
          jg.columns[jg.ref_col].classes.representative.size());
    }
  internal_check(static_cast<long>(best.size()) == expected,
                 "character class count mismatch");

  TestElements cm;
  for (const auto& [key, rep] : best) {
    cm.representatives.push_back(rep);
    cm.jclass.push_back(key.first);
    cm.group_class.push_back(key.second);
  }
  internal_check(!cm.representatives.empty() && cm.representatives[0] == 0,
                 "identity must lead the representative list");
  return cm;
}

BicharacterMatrix bicharacter_matrix(const MonoidTable& table,
                                     const GreenStructure& structure,
                                     const GroupTables& tables,
                                     const TestElements& cm, int jobs) {
  const int n = static_cast<int>(cm.representatives.size());
  BicharacterMatrix b;
  b.n = n;
  b.entries.assign(static_cast<std::size_t>(n) * n, 0);
  parallel_for(static_cast<long>(n) * n, jobs, [&](long idx) {
    const int i = static_cast<int>(idx / n);
    const int k = static_cast<int>(idx % n);
    b.entries[idx] = fixed_points(table, structure, tables,
                                  cm.representatives[i],
                                  cm.representatives[k]);
  });
  internal_check(b.at(0, 0) == static_cast<long>(table.size()),
                 "identity pair must fix every element");
  return b;
}

LeftSurvival left_survival(const MonoidTable& table,
                           const GreenStructure& structure,
                           const GroupTables& tables, int j, int s) {
  const JClassGroups& jg = tables.per_j[j];
  const ColumnGroup& rc = jg.columns[jg.ref_col];
  LeftSurvival out;
  out.by_class.assign(rc.classes.representative.size(), 0);
  const int nrows = static_cast<int>(structure.jclasses[j].r_ids.size());
  for (int r = 0; r < nrows; ++r) {
    const int k =
        row_perm_class(table, structure, rc, j, r, jg.ref_col, s);
    if (k >= 0) ++out.by_class[k];
  }
  return out;
}

}  // namespace monoidrep
