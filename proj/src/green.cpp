#include "monoidrep/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monoidrep/errors.hpp"

namespace monoidrep {

namespace {

// Iterative Tarjan SCC. neighbors(x) must return the out-neighbours of x.
template <typename Neighbors>
std::vector<int> strongly_connected_components(int n,
                                               const Neighbors& neighbors) {
  std::vector<int> comp(n, -1), low(n, 0), disc(n, -1), stack_mark(n, 0);
  std::vector<int> scc_stack;
  int timer = 0, num_comps = 0;

  struct Frame {
    int node;
    std::size_t edge;
  };
  std::vector<Frame> call_stack;

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      auto& [x, edge] = call_stack.back();
      if (edge == 0) {
        disc[x] = low[x] = timer++;
        scc_stack.push_back(x);
        stack_mark[x] = 1;
      }
      const auto& out = neighbors(x);
      if (edge < out.size()) {
        const int y = out[edge++];
        if (disc[y] < 0) {
          call_stack.push_back({y, 0});
        } else if (stack_mark[y]) {
          low[x] = std::min(low[x], disc[y]);
        }
      } else {
        if (low[x] == disc[x]) {
          while (true) {
            const int y = scc_stack.back();
            scc_stack.pop_back();
            stack_mark[y] = 0;
            comp[y] = num_comps;
            if (y == x) break;
          }
          ++num_comps;
        }
        call_stack.pop_back();
        if (!call_stack.empty()) {
          const int parent = call_stack.back().node;
          low[parent] = std::min(low[parent], low[x]);
        }
      }
    }
  }
  return comp;
}

// Renumbers class ids so that classes are ordered by their minimal
// element index (= first occurrence when scanning elements ascending).
void renumber_by_first_occurrence(std::vector<int>& class_of) {
  std::vector<int> remap(class_of.size(), -1);
  int next = 0;
  for (int& c : class_of) {
    if (remap[c] < 0) remap[c] = next++;
    c = remap[c];
  }
}

std::vector<std::vector<int>> collect_members(const std::vector<int>& class_of,
                                              int num_classes) {
  std::vector<std::vector<int>> members(num_classes);
  for (int x = 0; x < static_cast<int>(class_of.size()); ++x)
    members[class_of[x]].push_back(x);
  return members;
}

}  // namespace

GreenStructure green_structure(const MonoidTable& table) {
  const int n = table.size();
  const int num_gens = static_cast<int>(table.generators().size());

  std::vector<std::vector<int>> right_adj(n), left_adj(n), both_adj(n);
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < num_gens; ++g) {
      right_adj[x].push_back(table.right_cayley(x, g));
      left_adj[x].push_back(table.left_cayley(x, g));
    }
    both_adj[x] = right_adj[x];
    both_adj[x].insert(both_adj[x].end(), left_adj[x].begin(),
                       left_adj[x].end());
  }

  GreenStructure s;
  s.rclass_of = strongly_connected_components(
      n, [&](int x) -> const std::vector<int>& { return right_adj[x]; });
  s.lclass_of = strongly_connected_components(
      n, [&](int x) -> const std::vector<int>& { return left_adj[x]; });
  s.jclass_of = strongly_connected_components(
      n, [&](int x) -> const std::vector<int>& { return both_adj[x]; });
  renumber_by_first_occurrence(s.rclass_of);
  renumber_by_first_occurrence(s.lclass_of);
  renumber_by_first_occurrence(s.jclass_of);

  const int num_r = *std::max_element(s.rclass_of.begin(), s.rclass_of.end()) + 1;
  const int num_l = *std::max_element(s.lclass_of.begin(), s.lclass_of.end()) + 1;
  int num_j = *std::max_element(s.jclass_of.begin(), s.jclass_of.end()) + 1;

  // H = R ∩ L: ids by first occurrence, which is minimal-element order.
  s.hclass_of.assign(n, -1);
  {
    std::map<std::pair<int, int>, int> cell_ids;
    for (int x = 0; x < n; ++x) {
      auto [it, inserted] =
          cell_ids.emplace(std::make_pair(s.rclass_of[x], s.lclass_of[x]),
                           static_cast<int>(cell_ids.size()));
      s.hclass_of[x] = it->second;
    }
  }

  s.rclass_members = collect_members(s.rclass_of, num_r);
  s.lclass_members = collect_members(s.lclass_of, num_l);
  s.hclass_members = collect_members(
      s.hclass_of,
      *std::max_element(s.hclass_of.begin(), s.hclass_of.end()) + 1);

  // Assemble J-class data, then sort by (rank desc, lex-min image tuple).
  std::vector<JClassData> jdata(num_j);
  std::vector<std::vector<int>> jmembers = collect_members(s.jclass_of, num_j);
  for (int j = 0; j < num_j; ++j) {
    JClassData& d = jdata[j];
    const auto& members = jmembers[j];
    d.size = static_cast<int>(members.size());
    d.rank = rank_of(table.element(members.front()));
    d.lex_min_images = table.element(members.front()).images();
    for (int x : members) {
      if (table.element(x).images() < d.lex_min_images)
        d.lex_min_images = table.element(x).images();
      if (table.product(x, x) == x) d.idempotents.push_back(x);
    }
    d.regular = !d.idempotents.empty();

    for (int x : members) {
      d.r_ids.push_back(s.rclass_of[x]);
      d.l_ids.push_back(s.lclass_of[x]);
    }
    std::sort(d.r_ids.begin(), d.r_ids.end());
    d.r_ids.erase(std::unique(d.r_ids.begin(), d.r_ids.end()), d.r_ids.end());
    std::sort(d.l_ids.begin(), d.l_ids.end());
    d.l_ids.erase(std::unique(d.l_ids.begin(), d.l_ids.end()), d.l_ids.end());

    d.grid.assign(d.r_ids.size(), std::vector<int>(d.l_ids.size(), -1));
    for (int x : members) {
      const auto ri = std::lower_bound(d.r_ids.begin(), d.r_ids.end(),
                                       s.rclass_of[x]) -
                      d.r_ids.begin();
      const auto li = std::lower_bound(d.l_ids.begin(), d.l_ids.end(),
                                       s.lclass_of[x]) -
                      d.l_ids.begin();
      d.grid[ri][li] = s.hclass_of[x];
    }
    for (const auto& row : d.grid)
      for (int h : row)
        internal_check(h >= 0, "eggbox grid has an empty cell");
    d.hclass_size = static_cast<int>(s.hclass_members[d.grid[0][0]].size());
  }

  std::vector<int> jorder_ids(num_j);
  for (int j = 0; j < num_j; ++j) jorder_ids[j] = j;
  std::sort(jorder_ids.begin(), jorder_ids.end(), [&](int a, int b) {
    if (jdata[a].rank != jdata[b].rank) return jdata[a].rank > jdata[b].rank;
    return jdata[a].lex_min_images < jdata[b].lex_min_images;
  });
  std::vector<int> jremap(num_j);
  for (int pos = 0; pos < num_j; ++pos) jremap[jorder_ids[pos]] = pos;
  for (int& c : s.jclass_of) c = jremap[c];
  s.jclasses.resize(num_j);
  for (int j = 0; j < num_j; ++j)
    s.jclasses[jremap[j]] = std::move(jdata[j]);

  s.jclass_of_lclass.assign(num_l, -1);
  s.jclass_of_rclass.assign(num_r, -1);
  for (int x = 0; x < n; ++x) {
    s.jclass_of_lclass[s.lclass_of[x]] = s.jclass_of[x];
    s.jclass_of_rclass[s.rclass_of[x]] = s.jclass_of[x];
  }

  // J-order covers: reachability over the condensation of the two-sided
  // Cayley graph, then transitive reduction.
  std::vector<std::vector<char>> reach(num_j,
                                       std::vector<char>(num_j, 0));
  for (int x = 0; x < n; ++x)
    for (int y : both_adj[x])
      if (s.jclass_of[x] != s.jclass_of[y])
        reach[s.jclass_of[x]][s.jclass_of[y]] = 1;
  for (int k = 0; k < num_j; ++k)
    for (int i = 0; i < num_j; ++i)
      if (reach[i][k])
        for (int j = 0; j < num_j; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  s.jorder_covers.resize(num_j);
  for (int u = 0; u < num_j; ++u) {
    for (int v = 0; v < num_j; ++v) {
      if (!reach[u][v] || u == v) continue;
      bool is_cover = true;
      for (int w = 0; w < num_j && is_cover; ++w)
        if (w != u && w != v && reach[u][w] && reach[w][v]) is_cover = false;
      if (is_cover) s.jorder_covers[u].push_back(v);
    }
  }
  return s;
}

int PartialBijection::apply(int point) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), point);
  if (it == domain.end() || *it != point)
    throw IllDefined("partial bijection: point " + std::to_string(point) +
                     " not in domain");
  return codomain[it - domain.begin()];
}

PartialBijection green_pair(const Transformation& a, const Transformation& b,
                            Side side) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("green_pair: degrees differ");
  const Profile pa = profile(a), pb = profile(b);
  if (pa.rank != pb.rank)
    throw RankMismatch("green_pair: ranks " + std::to_string(pa.rank) +
                       " and " + std::to_string(pb.rank) + " differ");

  PartialBijection out;
  if (side == Side::left) {
    // λ(a(i)) = b(i); well defined iff kernel(a) refines into kernel(b),
    // which with equal ranks forces kernel equality.
    const int n = a.degree();
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
      int& slot = target[a(i) - 1];
      if (slot == 0) {
        slot = b(i);
      } else if (slot != b(i)) {
        throw IllDefined("green_pair: positions collide in " + a.to_string() +
                         " but not in " + b.to_string());
      }
    }
    out.domain = pa.image;
    for (int v : out.domain) out.codomain.push_back(target[v - 1]);
  } else {
    // Kernel classes, labelled by smallest member: class [i] of a maps to
    // the class [j] of b whose common b-value equals a's value on [i].
    if (pa.image != pb.image)
      throw IllDefined("green_pair: images {" + a.to_string() + "} and {" +
                       b.to_string() + "} differ as sets");
    const int n = a.degree();
    // b-value -> label of the b-kernel-class with that value.
    std::vector<int> b_class_of_value(static_cast<std::size_t>(n), 0);
    for (const auto& block : pb.kernel)
      b_class_of_value[b(block.front()) - 1] = block.front();
    for (const auto& block : pa.kernel) {
      out.domain.push_back(block.front());
      out.codomain.push_back(b_class_of_value[a(block.front()) - 1]);
    }
  }
  return out;
}

std::vector<int> idempotents(const MonoidTable& table) {
  std::vector<int> out;
  for (int x = 0; x < table.size(); ++x)
    if (table.product(x, x) == x) out.push_back(x);
  return out;
}

std::optional<int> regular_hclass(const GreenStructure& structure, int j) {
  const JClassData& d = structure.jclasses[j];
  if (!d.regular) return std::nullopt;
  int best = -1;
  std::pair<int, int> best_cell{0, 0};
  for (int e : d.idempotents) {
    const std::pair<int, int> cell{structure.rclass_of[e],
                                   structure.lclass_of[e]};
    if (best < 0 || cell < best_cell) {
      best = structure.hclass_of[e];
      best_cell = cell;
    }
  }
  return best;
}

std::string eggbox_dot(const MonoidTable& table,
                       const GreenStructure& structure) {
  // One plaintext grid node per J-class; starred cells contain an
  // idempotent; edges are the J-order covers.
  std::vector<char> h_has_idempotent(structure.num_hclasses(), 0);
  for (const auto& j : structure.jclasses)
    for (int e : j.idempotents) h_has_idempotent[structure.hclass_of[e]] = 1;

  std::ostringstream out;
  out << "digraph eggbox {\n  node [shape=plaintext];\n";
  for (int j = 0; j < structure.num_jclasses(); ++j) {
    const JClassData& d = structure.jclasses[j];
    out << "  j" << j << " [label=<<TABLE BORDER=\"0\" CELLBORDER=\"1\""
        << " CELLSPACING=\"0\"><TR><TD COLSPAN=\"" << d.l_ids.size()
        << "\">J" << j << ": rank " << d.rank << ", size " << d.size
        << (d.regular ? "" : ", not regular") << "</TD></TR>";
    for (std::size_t ri = 0; ri < d.grid.size(); ++ri) {
      out << "<TR>";
      for (std::size_t li = 0; li < d.grid[ri].size(); ++li) {
        const int h = d.grid[ri][li];
        out << "<TD>" << structure.hclass_members[h].size()
            << (h_has_idempotent[h] ? "*" : "") << "</TD>";
      }
      out << "</TR>";
    }
    out << "</TABLE>>];\n";
  }
  for (int u = 0; u < structure.num_jclasses(); ++u)
    for (int v : structure.jorder_covers[u])
      out << "  j" << u << " -> j" << v << ";\n";
  out << "}\n";
  (void)table;
  return out.str();
}

}  // namespace monoidrep
