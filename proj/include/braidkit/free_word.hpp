#pragma once

#include <optional>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/common.hpp"
#include "braidkit/perm.hpp"

namespace braidkit {

/// A freely reduced word in the free group of the given rank. Letters are
/// signed 1-based generator indices.
struct FreeWord {
  int rank = 1;
  std::vector<int> letters;

  bool operator==(const FreeWord&) const = default;
};

FreeWord make_free_word(int rank, std::vector<int> letters);  // validates + reduces
FreeWord fg_generator(int rank, int i);
FreeWord fg_multiply(const FreeWord& u, const FreeWord& v);
FreeWord fg_invert(const FreeWord& u);
/// v * u * v^-1.
FreeWord fg_conjugate(const FreeWord& u, const FreeWord& v);
FreeWord fg_power(const FreeWord& u, long long k);

/// The product of all generators in descending index order. This is the
/// word fixed by every braid-induced automorphism, and conjugation by its
/// powers is exactly the inner part of the braid image in Aut(F_n).
FreeWord boundary_word(int rank);

/// Splits u as a * core * a^-1 with core cyclically reduced.
struct CyclicSplit {
  FreeWord conjugator;
  FreeWord core;
};
CyclicSplit cyclic_reduce(const FreeWord& u);

/// Returns w with w * u * w^-1 = v when u and v are conjugate, found by
/// cyclic reduction and a linear scan over rotations of the core.
std::optional<FreeWord> conjugate_in_free(const FreeWord& u, const FreeWord& v);

/// Endomorphism of the free group given by generator images. Carries its
/// origin when built from a braid or as a conjugation, so that an inverse
/// can be derived without a general inverse solver.
struct FreeEndo {
  int rank = 1;
  std::vector<FreeWord> images;
  std::optional<BraidWord> braid_origin;
  std::optional<FreeWord> conj_origin;

  bool same_images(const FreeEndo& other) const {
    return rank == other.rank && images == other.images;
  }
};

FreeEndo identity_endo(int rank);
/// Conjugation by w: x -> w x w^-1.
FreeEndo conj_endo(const FreeWord& w);

FreeWord apply_endo(const FreeEndo& phi, const FreeWord& w);
/// (phi o psi): first psi, then phi.
FreeEndo compose(const FreeEndo& phi, const FreeEndo& psi);
bool endo_equal(const FreeEndo& phi, const FreeEndo& psi);
bool is_identity_endo(const FreeEndo& phi);

/// If phi is conjugation by some w, returns w. The witness is pinned from
/// the conjugacy witness of (eta_1, phi(eta_1)): all such conjugators form
/// the coset w0 * <eta_1>, and the exponent is read off the eta_2
/// constraint, whose reduced form eta_1^k eta_2 eta_1^-k determines k.
std::optional<FreeWord> is_inner(const FreeEndo& phi);

/// Certificate that phi lies in the braid-induced automorphism group:
/// phi(eta_i) = A_i eta_{tau(i)} A_i^-1 for all i, and phi fixes the
/// boundary word.
struct ArtinCertificate {
  Perm tau;
  std::vector<FreeWord> conjugators;
};
std::optional<ArtinCertificate> artin_conditions(const FreeEndo& phi);

}  // namespace braidkit
