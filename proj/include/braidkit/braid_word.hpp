#pragma once

#include <vector>

#include "braidkit/common.hpp"

namespace braidkit {

/// A word in the generators of the braid group on n strands. Letters are
/// signed 1-based generator indices: +i crosses strand i over strand i+1,
/// -i is the inverse crossing. Words are immutable values; every operation
/// returns a fresh word, freely reduced unless stated otherwise.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

/// Validates letter ranges (1 <= |letter| <= n-1); does not reduce.
BraidWord make_braid_word(int n, std::vector<int> letters);

BraidWord free_reduce(BraidWord w);
bool is_freely_reduced(const BraidWord& w);

/// The abelianization value: sum of letter signs.
long long exponent_sum(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& w);
/// g * w * g^-1, freely reduced.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
BraidWord power(const BraidWord& w, long long k);

/// One-letter word; i may be negative, |i| in 1..n-1.
BraidWord generator(int n, int i);

/// sigma_1 sigma_2 ... sigma_{n-1}; conjugation by it shifts generator
/// indices up by one.
BraidWord delta(int n);

/// (sigma_1 ... sigma_{n-1})^n. Central; generates the center for n >= 3.
BraidWord full_twist(int n);

/// delta * sigma_{n-1} * delta^-1: the extra generator crossing strand n
/// over strand 1. Commutes with sigma_j for 2 <= j <= n-2.
BraidWord band_generator(int n);

/// sigma_i for i in 1..n-1, the band word for i == n.
BraidWord cyclic_generator(int n, int i);
std::vector<BraidWord> cyclic_generators(int n);

/// Reduces an arbitrary integer index to the range 1..n.
int cyclic_index(long long i, int n);
/// Distance between generator indices in Z/nZ.
int cyclic_distance(int a, int b, int n);

}  // namespace braidkit
