#pragma once

#include <utility>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Index scheme for the difference generators s_i = sigma_i sigma_{i+1}^-1.
/// Linear mode allows 1 <= i <= n-2 (classical letters only); cyclic mode
/// allows 1 <= i <= n with indices mod n, where sigma_n is the band word.
enum class SMode { linear, cyclic };

/// A word in the difference generators. Letters are signed s-indices;
/// evaluation into a braid word always has exponent sum zero.
struct SWord {
  int n = 5;
  SMode mode = SMode::cyclic;
  std::vector<int> letters;

  bool operator==(const SWord&) const = default;
};

/// The braid word sigma_i sigma_{i+1}^-1 (band expansions in cyclic mode).
BraidWord s_letter(int i, int n, SMode mode);

BraidWord eval_sword(const SWord& s);
SWord sword_invert(const SWord& s);
SWord sword_concat(const SWord& a, const SWord& b);

/// Membership in the commutator subgroup: the abelianization is infinite
/// cyclic, so the kernel is exactly the zero-exponent words.
bool in_commutator_subgroup(const BraidWord& w);

/// Expresses a zero-exponent word over the cyclic difference generators.
/// Requires n >= 5. When verify is set, the result is checked against the
/// input through the normal-form engine before returning.
SWord rewrite_in_S(const BraidWord& w, bool verify = true);

/// Zero-exponent words a = sigma_{i+1} sigma_i sigma_j^-2 and
/// b = sigma_{i+1} sigma_j^-1 with [a, b] = sigma_i sigma_{i+1}^-1, using
/// the smallest j at distance >= 2 from both i and i+1. Cyclic indices
/// allowed; requires n >= 5.
std::pair<BraidWord, BraidWord> perfectness_witness(int i, int n,
                                                    SMode mode = SMode::cyclic);

/// The zero-exponent conjugator sigma_i sigma_{i+1} sigma_{i+2}
/// sigma_{i+3}^-3 carrying s_i to s_{i+1}; cyclic indices allowed.
BraidWord conjugacy_chain_witness(int i, int n);

/// Writes a zero-exponent word as a product of commutators of
/// zero-exponent words: rewrite over the difference generators, then one
/// commutator per letter.
std::vector<std::pair<BraidWord, BraidWord>> commutator_expression(
    const BraidWord& w, bool verify = true);

}  // namespace braidkit
