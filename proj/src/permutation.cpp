#include "gsym/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gsym {

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t order = 1;
  std::vector<char> done(images_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (done[x]) continue;
    std::uint64_t len = 0;
    for (int y = x; !done[y]; y = images_[y]) {
      done[y] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<int> Permutation::moved_points() const {
  std::vector<int> moved;
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) moved.push_back(x);
  return moved;
}

int Permutation::smallest_moved_point() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return x;
  return -1;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(images_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (done[x] || images_[x] == x) continue;
    any = true;
    out << '(' << x;
    done[x] = 1;
    for (int y = images_[x]; y != x; y = images_[y]) {
      out << ' ' << y;
      done[y] = 1;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(p.degree());
  for (int x = 0; x < p.degree(); ++x) im[x] = q[p[x]];
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  std::vector<int> im(p.degree());
  for (int x = 0; x < p.degree(); ++x) im[g[x]] = g[p[x]];
  return Permutation(std::move(im));
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  std::vector<char> used(degree, 0);

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycle notation: expected point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree)
        throw std::invalid_argument("cycle notation: point exceeds degree");
      if (used[v])
        throw std::invalid_argument("cycle notation: repeated point");
      used[v] = 1;
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= text.size())
      throw std::invalid_argument("cycle notation: unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      im[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ p.degree();
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace gsym
