#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidkit {

/// Permutation of {0, ..., n-1} stored in one-line notation.
/// Composition follows function application: (a * b)(x) = a(b(x)).
class Perm {
 public:
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);

  /// Swaps i-1 and i, i.e. the image of the braid generator with index i.
  static Perm transposition(int n, int i);
  /// x -> n-1-x; the image of the positive half twist.
  static Perm reversal(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm compose(const Perm& other) const;
  Perm inverse() const;
  /// reversal * this * reversal; how factors move across the half twist.
  Perm flip_conjugate() const;

  bool is_identity() const;
  int inversions() const;

  /// Bit b set iff img[b] > img[b+1]. Requires degree <= 64.
  std::uint64_t descent_mask() const;
  std::uint64_t inverse_descent_mask() const;

  /// Right-multiply by the transposition at position b (0-based):
  /// swaps img[b] and img[b+1].
  void swap_positions(int b);
  /// Left-multiply by the transposition of values v, v+1 (0-based).
  void swap_values(int v);

  bool operator==(const Perm&) const = default;

  /// One-line notation, 1-based, space-separated: "2 1 3".
  std::string to_string() const;

 private:
  std::vector<int> img_;
};

}  // namespace braidkit
