#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fundom {

/// Thrown for malformed inputs (bad cycle notation, degree mismatches,
/// out-of-range points).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a brute-force routine would exceed its configured bound.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {1,...,n}, stored as its image table.
///
/// Conventions used throughout the library:
///  - points are 1-indexed everywhere,
///  - compose(p, q) applies q first: compose(p, q)(i) = p(q(i)),
///  - permutations act on vectors on the left: (s.x)_i = x_{s^-1(i)},
///  - permutations act on points on the right: i.s = s^-1(i).
class Perm {
public:
  Perm() = default;

  static Perm identity(int degree);

  /// Builds a permutation from a 1-indexed image table; images[i-1] = s(i).
  static Perm from_images(std::vector<int> images);

  /// Parses disjoint-cycle notation, e.g. "(1 2)(3 4)". Whitespace-tolerant;
  /// "" and "()" denote the identity. Unmentioned points are fixed.
  static Perm from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<size_t>(i) - 1]; }
  int preimage(int i) const;

  bool is_identity() const;
  Perm inverse() const;

  const std::vector<int>& images() const { return images_; }

  /// Cycle notation with cycles sorted by smallest element and fixed points
  /// omitted; the identity prints as "()".
  std::string cycles() const;

  bool operator==(const Perm& other) const { return images_ == other.images_; }
  bool operator!=(const Perm& other) const { return images_ != other.images_; }
  bool operator<(const Perm& other) const { return images_ < other.images_; }

private:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// compose(p, q)(i) = p(q(i)) — "p after q".
Perm compose(const Perm& p, const Perm& q);

/// Right action of s on a point: i.s = s^-1(i).
int act_on_point(int i, const Perm& s);

/// Left action on coordinate vectors: out_i = x_{s^-1(i)}.
template <typename T>
std::vector<T> apply_to_vector(const Perm& s, std::span<const T> x) {
  if (static_cast<int>(x.size()) != s.degree())
    throw InvalidArgument("apply_to_vector: length mismatch");
  std::vector<T> out(x.size());
  for (int i = 1; i <= s.degree(); ++i)
    out[static_cast<size_t>(s.image(i)) - 1] = x[static_cast<size_t>(i) - 1];
  return out;
}

template <typename T>
std::vector<T> apply_to_vector(const Perm& s, const std::vector<T>& x) {
  return apply_to_vector(s, std::span<const T>(x));
}

/// The rank-vector embedding rho(s) = (s^-1(1), ..., s^-1(n)); satisfies
/// rho(compose(s, t)) = apply_to_vector(s, rho(t)).
std::vector<int> rho(const Perm& s);

}  // namespace fundom
