#include "braidkit/representations.hpp"

#include <cstdlib>

namespace braidkit {

FreeEndo artin_generator(int n, int letter) {
  int i = std::abs(letter);
  if (i < 1 || i > n - 1) throw DomainError("generator index out of range");
  FreeEndo phi = identity_endo(n);
  FreeWord ei = fg_generator(n, i);
  FreeWord ej = fg_generator(n, i + 1);
  if (letter > 0) {
    phi.images[i - 1] = ej;
    phi.images[i] = make_free_word(n, {i + 1, i, -(i + 1)});
  } else {
    phi.images[i - 1] = make_free_word(n, {-i, i + 1, i});
    phi.images[i] = ei;
  }
  return phi;
}

FreeEndo artin(const BraidWord& b) {
  FreeEndo acc = identity_endo(b.n);
  for (int letter : b.letters)
    acc = compose(acc, artin_generator(b.n, letter));
  acc.braid_origin = b;
  acc.conj_origin.reset();
  return acc;
}

Perm mu(const BraidWord& b) {
  Perm p(b.n);
  for (int letter : b.letters)
    p = p.compose(Perm::transposition(b.n, std::abs(letter)));
  return p;
}

FreeEndo endo_inverse(const FreeEndo& phi) {
  if (phi.braid_origin) return artin(invert(*phi.braid_origin));
  if (phi.conj_origin) return conj_endo(fg_invert(*phi.conj_origin));
  if (is_identity_endo(phi)) return identity_endo(phi.rank);
  throw DomainError("endomorphism has no recorded origin to invert from");
}

bool outer_equal(const FreeEndo& phi, const FreeEndo& psi) {
  if (phi.rank != psi.rank) throw DomainError("rank mismatch");
  return is_inner(compose(phi, endo_inverse(psi))).has_value();
}

bool in_kernel_gamma(const BraidWord& b) {
  return is_inner(artin(b)).has_value();
}

std::optional<long long> center_power_detect(const FreeEndo& phi) {
  if (phi.rank < 2) throw DomainError("rank must be at least 2");
  auto w = is_inner(phi);
  if (!w) return std::nullopt;
  long long n = phi.rank;
  long long len = static_cast<long long>(w->letters.size());
  if (len % n != 0) return std::nullopt;
  long long r = len / n;
  if (*w == fg_power(boundary_word(phi.rank), r)) return r;
  if (*w == fg_power(boundary_word(phi.rank), -r)) return -r;
  return std::nullopt;
}

bool stabilizer_check(std::span<const BraidWord> generators, int point) {
  for (const BraidWord& g : generators) {
    if (point < 1 || point > g.n) throw DomainError("point out of range");
    if (mu(g).apply(point - 1) != point - 1) return false;
  }
  return true;
}

bool artin_equal(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw DomainError("strand count mismatch");
  return artin(u).same_images(artin(v));
}

}  // namespace braidkit
