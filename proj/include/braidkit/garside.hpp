#pragma once

#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/perm.hpp"

namespace braidkit {

/// Left-greedy normal form Delta^inf A_1 ... A_len. Each factor is a
/// permutation braid (a positive braid in which every pair of strands
/// crosses at most once), identified with its permutation. Invariants:
///   - adjacent pairs are left-weighted: the starting set of the right
///     factor is contained in the finishing set of the left factor;
///   - no factor is trivial or equal to the half twist.
/// Two words are equal in the braid group iff their normal forms are
/// componentwise identical.
struct NormalForm {
  int n = 2;
  long long inf = 0;
  std::vector<Perm> factors;

  bool operator==(const NormalForm&) const = default;

  /// Underlying permutation: reversal^inf composed with the factors.
  Perm permutation() const;
  long long canonical_length() const {
    return static_cast<long long>(factors.size());
  }
  /// "D^p | f1 | f2 | ..." with one-line factor permutations.
  std::string to_string() const;
};

NormalForm normal_form(const BraidWord& w);

bool words_equal(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);

/// True iff g * a * g^-1 = b. Witness-checked conjugacy only; there is no
/// conjugacy search anywhere in this library.
bool verify_conjugation(const BraidWord& g, const BraidWord& a,
                        const BraidWord& b);

}  // namespace braidkit
