#include "monoidrep/schutz.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "monoidrep/errors.hpp"

namespace monoidrep {

namespace {

// Positions of the (sorted) common image of an H-class.
struct ImageIndex {
  std::vector<int> points;  // sorted image labels
  std::vector<int> pos;     // point label -> position, -1 when absent
};

ImageIndex image_index(const Transformation& a) {
  ImageIndex ix;
  ix.points = profile(a).image;
  ix.pos.assign(a.degree() + 1, -1);
  for (int s = 0; s < static_cast<int>(ix.points.size()); ++s)
    ix.pos[ix.points[s]] = s;
  return ix;
}

// Positions of the kernel classes of an H-class, labelled by smallest
// member. block_of_value inverts a on its image: the block mapping to a
// given image point.
struct KernelIndex {
  std::vector<int> labels;          // ascending block labels
  std::vector<int> block_of_value;  // image point -> block position, -1
};

KernelIndex kernel_index(const Transformation& a) {
  KernelIndex kx;
  Profile p = profile(a);
  kx.block_of_value.assign(a.degree() + 1, -1);
  for (int c = 0; c < static_cast<int>(p.kernel.size()); ++c) {
    int label = p.kernel[c].front();
    kx.labels.push_back(label);
    kx.block_of_value[a(label)] = c;
  }
  return kx;
}

void check_is_permutation(const Perm& p, const char* what) {
  std::vector<char> used(p.img.size(), 0);
  for (int t : p.img) {
    internal_check(t >= 0 && t < p.size() && !used[t], what);
    used[t] = 1;
  }
}

// λ_b against base a: the permutation of the common image with
// λ_b(a(i)) = b(i). Well defined exactly when b has a's kernel and image.
Perm lambda_of(const Transformation& a, const ImageIndex& ix,
               const Transformation& b) {
  Perm p;
  p.img.assign(ix.points.size(), -1);
  for (int i = 1; i <= a.degree(); ++i) {
    int s = ix.pos[a(i)];
    int t = ix.pos[b(i)];
    internal_check(t >= 0, "image-side permutation leaves the common image");
    internal_check(p.img[s] == -1 || p.img[s] == t,
                   "image-side permutation is ill defined");
    p.img[s] = t;
  }
  check_is_permutation(p, "image-side map is not a permutation");
  return p;
}

// ρ_b against base a: the permutation of kernel classes sending the
// class with label i to the class whose a-value is b(i).
Perm rho_of(const KernelIndex& kx, const Transformation& b) {
  Perm p;
  p.img.resize(kx.labels.size());
  for (int c = 0; c < static_cast<int>(kx.labels.size()); ++c) {
    int t = kx.block_of_value[b(kx.labels[c])];
    internal_check(t >= 0, "kernel-side permutation leaves the image");
    p.img[c] = t;
  }
  check_is_permutation(p, "kernel-side map is not a permutation");
  return p;
}

}  // namespace

Perm Perm::identity(int k) {
  Perm p;
  p.img.resize(k);
  for (int i = 0; i < k; ++i) p.img[i] = i;
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.img.resize(img.size());
  for (int i = 0; i < size(); ++i) p.img[img[i]] = i;
  return p;
}

Perm pcompose(const Perm& p, const Perm& q) {
  internal_check(p.size() == q.size(), "permutation degree mismatch");
  Perm r;
  r.img.resize(p.img.size());
  for (int i = 0; i < p.size(); ++i) r.img[i] = q.img[p.img[i]];
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int t : p.img) {
    h ^= static_cast<std::size_t>(t) + 1;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::from_elements(std::vector<int> domain,
                                   std::vector<Perm> elements) {
  PermGroup g;
  g.domain_ = std::move(domain);
  g.elements_ = std::move(elements);
  const int k = static_cast<int>(g.domain_.size());

  internal_check(!g.elements_.empty(), "permutation group has no elements");
  for (const Perm& p : g.elements_) {
    internal_check(p.size() == k, "permutation degree differs from domain");
    check_is_permutation(p, "element is not a permutation");
  }
  std::sort(g.elements_.begin(), g.elements_.end());
  for (std::size_t i = 1; i < g.elements_.size(); ++i)
    internal_check(g.elements_[i - 1] != g.elements_[i],
                   "duplicate permutation in group element set");
  // The identity is lexicographically least among permutations, so it
  // sits in front whenever present.
  internal_check(g.elements_[0].is_identity(),
                 "permutation group lacks the identity");

  std::unordered_set<Perm, PermHash> element_set(g.elements_.begin(),
                                                 g.elements_.end());
  for (const Perm& p : g.elements_)
    for (const Perm& q : g.elements_)
      internal_check(element_set.count(pcompose(p, q)) == 1,
                     "permutation set is not closed under products");

  // Greedy generating subset: walk the sorted elements, keeping each one
  // not yet generated. Deterministic, and small (≤ log2 order).
  std::unordered_set<Perm, PermHash> span{g.elements_[0]};
  for (const Perm& e : g.elements_) {
    if (span.count(e)) continue;
    g.generators_.push_back(e);
    std::vector<Perm> queue(span.begin(), span.end());
    std::sort(queue.begin(), queue.end());  // keep growth order deterministic
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const Perm& gen : g.generators_) {
        Perm w = pcompose(queue[qi], gen);
        if (span.insert(w).second) queue.push_back(w);
      }
  }
  internal_check(span.size() == g.elements_.size(),
                 "generator selection lost elements");

  // Point-stabilizer transversal chain, for sifting-based membership.
  std::vector<Perm> current = g.elements_;
  for (int b = 0; b < k && current.size() > 1; ++b) {
    bool moved = false;
    for (const Perm& p : current) moved = moved || p.img[b] != b;
    if (!moved) continue;
    ChainLevel level;
    level.base_point = b;
    level.transversal.assign(k, std::nullopt);
    std::vector<Perm> stabilizer;
    for (const Perm& p : current) {
      int t = p.img[b];
      if (!level.transversal[t]) level.transversal[t] = p;
      if (t == b) stabilizer.push_back(p);
    }
    g.chain_.push_back(std::move(level));
    current = std::move(stabilizer);
  }
  internal_check(current.size() == 1, "stabilizer chain did not terminate");
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  const int k = static_cast<int>(domain_.size());
  if (p.size() != k) return false;
  for (int t : p.img)
    if (t < 0 || t >= k) return false;
  Perm q = p;
  for (const ChainLevel& level : chain_) {
    int t = q.img[level.base_point];
    if (!level.transversal[t]) return false;
    q = pcompose(q, level.transversal[t]->inverse());
  }
  return q.is_identity();
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

PermGroup schutzenberger(const MonoidTable& table,
                         const GreenStructure& structure, int h, Side side) {
  const std::vector<int>& members = structure.hclass_members.at(h);
  const Transformation& a = table.element(members[0]);
  std::vector<Perm> perms;
  perms.reserve(members.size());
  if (side == Side::left) {
    ImageIndex ix = image_index(a);
    for (int idx : members) perms.push_back(lambda_of(a, ix, table.element(idx)));
    return PermGroup::from_elements(ix.points, std::move(perms));
  }
  KernelIndex kx = kernel_index(a);
  for (int idx : members) perms.push_back(rho_of(kx, table.element(idx)));
  return PermGroup::from_elements(kx.labels, std::move(perms));
}

Perm induced_permutation(const MonoidTable& table,
                         const GreenStructure& structure, int m, int h,
                         Side side) {
  const std::vector<int>& members = structure.hclass_members.at(h);
  const int base = members[0];
  const Transformation& a = table.element(base);
  const int y =
      side == Side::left ? table.product(base, m) : table.product(m, base);
  if (structure.hclass_of[y] != h)
    throw NotAStabilizer("element does not stabilize the H-class on side " +
                         std::string(side == Side::left ? "left" : "right"));
  const Transformation& b = table.element(y);
  if (side == Side::left) return lambda_of(a, image_index(a), b);
  return rho_of(kernel_index(a), b);
}

Perm tau(const MonoidTable& table, const GreenStructure& structure, int h,
         const Transformation& a, const Perm& g) {
  const int a_idx = table.find(a);
  if (a_idx < 0 || structure.hclass_of[a_idx] != h)
    throw NotInGroup("base element does not lie in the H-class");
  ImageIndex ix = image_index(a);
  if (g.size() != static_cast<int>(ix.points.size()))
    throw NotInGroup("permutation degree differs from the H-class rank");

  // b := (g after a) as a transformation; g lies in the image-side group
  // exactly when b lands back in the H-class.
  std::vector<int> images(a.degree());
  for (int i = 1; i <= a.degree(); ++i)
    images[i - 1] = ix.points[g.img[ix.pos[a(i)]]];
  Transformation b(images);
  const int b_idx = table.find(b);
  if (b_idx < 0 || structure.hclass_of[b_idx] != h)
    throw NotInGroup("permutation is not in the image-side group");

  return rho_of(kernel_index(a), b);
}

}  // namespace monoidrep
