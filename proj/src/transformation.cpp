#include "monoidrep/transformation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "monoidrep/errors.hpp"

namespace monoidrep {

Transformation::Transformation(std::vector<int> images)
    : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1)
    throw std::invalid_argument("transformation must have degree >= 1");
  for (int v : images_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("image point " + std::to_string(v) +
                                  " out of range [1, " + std::to_string(n) +
                                  "]");
  }
}

Transformation Transformation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[i] = i + 1;
  return Transformation(std::move(im));
}

Transformation Transformation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> im;
  int v = 0;
  while (in >> v) im.push_back(v);
  if (!in.eof()) {
    std::string token;
    in.clear();
    in >> token;
    throw std::invalid_argument("invalid image token '" + token + "'");
  }
  if (im.empty())
    throw std::invalid_argument("empty transformation");
  return Transformation(std::move(im));
}

std::strong_ordering Transformation::operator<=>(
    const Transformation& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (auto c = images_[i] <=> other.images_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Transformation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

std::size_t TransformationHash::operator()(
    const Transformation& t) const noexcept {
  // FNV-1a over the image tuple.
  std::size_t h = 1469598103934665603ull;
  for (int v : t.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

Transformation compose(const Transformation& a, const Transformation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) +
                         " and " + std::to_string(b.degree()) + " differ");
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  const auto& ia = a.images();
  const auto& ib = b.images();
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = ib[ia[i] - 1];
  return Transformation(std::move(im));
}

Profile profile(const Transformation& a) {
  const int n = a.degree();
  Profile p;
  // first_block[v-1] = index of the kernel block with common value v.
  std::vector<int> first_block(static_cast<std::size_t>(n), -1);
  for (int i = 1; i <= n; ++i) {
    const int v = a(i);
    int& slot = first_block[v - 1];
    if (slot < 0) {
      slot = static_cast<int>(p.kernel.size());
      p.kernel.push_back({i});
    } else {
      p.kernel[slot].push_back(i);
    }
  }
  // Scanning i ascending makes each block's first member its smallest,
  // and blocks appear in order of smallest member.
  for (int v = 1; v <= n; ++v)
    if (first_block[v - 1] >= 0) p.image.push_back(v);
  p.rank = static_cast<int>(p.image.size());
  return p;
}

int rank_of(const Transformation& a) {
  std::vector<char> seen(static_cast<std::size_t>(a.degree()), 0);
  int r = 0;
  for (int v : a.images()) {
    if (!seen[v - 1]) {
      seen[v - 1] = 1;
      ++r;
    }
  }
  return r;
}

Transformation idempotent_power(const Transformation& a) {
  // Repeated multiplication (not repeated squaring): the walk a, a², a³, …
  // passes through the unique idempotent of <a> within index + period
  // steps, which is bounded by the size of the cyclic subsemigroup.
  Transformation b = a;
  while (!(compose(b, b) == b)) b = compose(b, a);
  return b;
}

}  // namespace monoidrep
