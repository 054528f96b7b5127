#pragma once

#include <optional>
#include <span>

#include "braidkit/braid_word.hpp"
#include "braidkit/free_word.hpp"
#include "braidkit/perm.hpp"

namespace braidkit {

/// The faithful action of the braid group on the free group of the same
/// rank. A positive generator acts by
///   eta_i     -> eta_{i+1}
///   eta_{i+1} -> eta_{i+1} eta_i eta_{i+1}^-1
/// and fixes the other generators; words act by composing generator
/// actions left to right: artin(u v) = compose(artin(u), artin(v)).
FreeEndo artin(const BraidWord& b);

/// Action of a single signed generator.
FreeEndo artin_generator(int n, int letter);

/// The canonical permutation homomorphism: each letter maps to the
/// transposition (i i+1) regardless of sign.
Perm mu(const BraidWord& b);

/// Derives the inverse of an endomorphism from its recorded origin
/// (braid word or conjugation). A general inverse solver is out of scope.
FreeEndo endo_inverse(const FreeEndo& phi);

/// True iff phi and psi agree modulo inner automorphisms, i.e.
/// compose(phi, psi^-1) is a conjugation.
bool outer_equal(const FreeEndo& phi, const FreeEndo& psi);

/// True iff the braid acts by a conjugation, i.e. maps to the trivial
/// outer automorphism class.
bool in_kernel_gamma(const BraidWord& b);

/// If phi is conjugation by the r-th power of the boundary word,
/// returns r.
std::optional<long long> center_power_detect(const FreeEndo& phi);

/// True iff the permutation image of every generator fixes the point
/// (1-based), hence the generated subgroup fixes it.
bool stabilizer_check(std::span<const BraidWord> generators, int point);

/// Equality of braid words decided through the free-group action; the
/// independent cross-check for the normal-form engine.
bool artin_equal(const BraidWord& u, const BraidWord& v);

/// An automorphism considered modulo inner automorphisms. Two classes are
/// equal iff the representatives differ by a conjugation.
struct OuterClass {
  FreeEndo representative;
};

inline bool operator==(const OuterClass& x, const OuterClass& y) {
  return outer_equal(x.representative, y.representative);
}

}  // namespace braidkit
