#include "fundom/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fundom {

Perm Perm::identity(int degree) {
  if (degree < 0) throw InvalidArgument("permutation degree must be >= 0");
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  return Perm(std::move(images));
}

Perm Perm::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images) {
    if (v < 1 || v > n) throw InvalidArgument("image out of range 1..n");
    if (seen[static_cast<size_t>(v) - 1]) throw InvalidArgument("image table is not a bijection");
    seen[static_cast<size_t>(v) - 1] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  if (degree < 0) throw InvalidArgument("permutation degree must be >= 0");
  std::vector<int> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<char> mentioned(static_cast<size_t>(degree), 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidArgument("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw InvalidArgument("cycle notation: expected a point or ')'");
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        throw InvalidArgument("cycle notation: point " + std::to_string(value) + " out of range 1.." +
                              std::to_string(degree));
      if (mentioned[static_cast<size_t>(value) - 1])
        throw InvalidArgument("cycle notation: point " + std::to_string(value) + " repeated");
      mentioned[static_cast<size_t>(value) - 1] = 1;
      cycle.push_back(value);
      skip_ws();
    }
    if (pos >= text.size()) throw InvalidArgument("cycle notation: unbalanced '('");
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<size_t>(cycle[i]) - 1] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(images));
}

int Perm::preimage(int i) const {
  if (i < 1 || i > degree()) throw InvalidArgument("point out of range");
  for (int j = 1; j <= degree(); ++j)
    if (image(j) == i) return j;
  throw InvalidArgument("corrupt permutation");
}

bool Perm::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (image(i) != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>(image(i)) - 1] = i;
  return Perm(std::move(inv));
}

std::string Perm::cycles() const {
  std::ostringstream out;
  std::vector<char> visited(images_.size(), 0);
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (visited[static_cast<size_t>(start) - 1] || image(start) == start) continue;
    out << '(';
    int p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << p;
      visited[static_cast<size_t>(p) - 1] = 1;
      p = image(p);
      first = false;
    } while (p != start);
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw InvalidArgument("compose: degree mismatch");
  std::vector<int> images(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) images[static_cast<size_t>(i) - 1] = p.image(q.image(i));
  return Perm::from_images(std::move(images));
}

int act_on_point(int i, const Perm& s) {
  if (i < 1 || i > s.degree()) throw InvalidArgument("act_on_point: point out of range");
  for (int j = 1; j <= s.degree(); ++j)
    if (s.image(j) == i) return j;
  throw InvalidArgument("corrupt permutation");
}

std::vector<int> rho(const Perm& s) {
  std::vector<int> out(static_cast<size_t>(s.degree()));
  for (int j = 1; j <= s.degree(); ++j) out[static_cast<size_t>(s.image(j)) - 1] = j;
  return out;
}

}  // namespace fundom
