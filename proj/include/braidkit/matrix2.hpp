#pragma once

#include <span>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Real 2x2 matrix. Group elements are orientation preserving:
/// determinant > 0.
struct Mat2 {
  double a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  double det() const { return a * d - b * c; }
  Mat2 mul(const Mat2& o) const;
  Mat2 inv() const;
  bool integral() const;
  bool operator==(const Mat2&) const = default;
};

/// Largest absolute entry of x - y.
double max_norm_diff(const Mat2& x, const Mat2& y);

/// Ordered product of the images along the word; negative letters use the
/// inverse image. Runs exactly over 64-bit integers when every image is
/// integral with determinant +-1, otherwise in floating point.
Mat2 evaluate_word(std::span<const Mat2> images, const BraidWord& w);

constexpr double kDefaultTol = 1e-9;

/// Braid and far-commutation relations hold within tol (exactly, for
/// integral unimodular images).
bool check_braid_relations(std::span<const Mat2> images,
                           double tol = kDefaultTol);

/// All pairwise commutators vanish within tol.
bool image_abelian(std::span<const Mat2> images, double tol = kDefaultTol);

/// Largest commutator deviation max|XY - YX| over all pairs.
double commutator_norm(std::span<const Mat2> images);

/// Outcome of checking a cyclic family tau_1..tau_n against the
/// rigidity hypotheses: mutual conjugacy through explicit witnesses,
/// commutation at cyclic distance >= k, and the size bound n >= 2k+1.
struct HypothesisReport {
  int count = 0;
  int k = 0;
  std::vector<char> conjugacy_ok;    // witness i carries tau_i to tau_{i+1}
  std::vector<char> commutation_ok;  // aligned with commutation_pairs
  std::vector<std::pair<int, int>> commutation_pairs;
  bool threshold_ok = false;

  bool passes() const;
};

/// witnesses[i] must conjugate taus[i] to taus[(i+1) mod n]; commutation is
/// checked for every pair at cyclic index distance >= k.
HypothesisReport cyclic_family_hypotheses(std::span<const BraidWord> taus,
                                          int k,
                                          std::span<const BraidWord> witnesses);

/// The 4-strand relations survive the map sigma_1, sigma_3 -> sigma_1,
/// sigma_2 -> sigma_2 into the 3-strand group.
bool check_homomorphism_b4_b3();

/// The integral 3-strand representation pair [[1,1],[0,1]], [[1,0],[-1,1]].
std::vector<Mat2> sl2_triple_images();

}  // namespace braidkit
