#include "braidkit/free_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace braidkit {

namespace {

void validate(int rank, const std::vector<int>& letters) {
  if (rank < 1) throw DomainError("free group rank must be at least 1");
  for (int l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || idx > rank) {
      throw DomainError("free generator index " + std::to_string(l) +
                        " out of range for rank " + std::to_string(rank));
    }
  }
}

void reduce_into(std::vector<int>& out, const std::vector<int>& in) {
  for (int l : in) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
}

}  // namespace

FreeWord make_free_word(int rank, std::vector<int> letters) {
  validate(rank, letters);
  std::vector<int> out;
  out.reserve(letters.size());
  reduce_into(out, letters);
  return FreeWord{rank, std::move(out)};
}

FreeWord fg_generator(int rank, int i) { return make_free_word(rank, {i}); }

FreeWord fg_multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank != v.rank) throw DomainError("rank mismatch");
  check_word_length(u.letters.size() + v.letters.size());
  std::vector<int> out;
  out.reserve(u.letters.size() + v.letters.size());
  reduce_into(out, u.letters);
  reduce_into(out, v.letters);
  return FreeWord{u.rank, std::move(out)};
}

FreeWord fg_invert(const FreeWord& u) {
  std::vector<int> out(u.letters.rbegin(), u.letters.rend());
  for (int& l : out) l = -l;
  return FreeWord{u.rank, std::move(out)};
}

FreeWord fg_conjugate(const FreeWord& u, const FreeWord& v) {
  return fg_multiply(fg_multiply(v, u), fg_invert(v));
}

FreeWord fg_power(const FreeWord& u, long long k) {
  FreeWord base = k >= 0 ? u : fg_invert(u);
  long long reps = k >= 0 ? k : -k;
  check_word_length(base.letters.size() * static_cast<std::size_t>(reps));
  FreeWord out{u.rank, {}};
  for (long long r = 0; r < reps; ++r) out = fg_multiply(out, base);
  return out;
}

FreeWord boundary_word(int rank) {
  std::vector<int> letters(rank);
  for (int i = 0; i < rank; ++i) letters[i] = rank - i;
  return FreeWord{rank, std::move(letters)};
}

CyclicSplit cyclic_reduce(const FreeWord& u) {
  std::size_t lo = 0, hi = u.letters.size();
  while (hi - lo >= 2 && u.letters[lo] == -u.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord conjugator{u.rank, std::vector<int>(u.letters.begin(),
                                               u.letters.begin() + lo)};
  FreeWord core{u.rank, std::vector<int>(u.letters.begin() + lo,
                                         u.letters.begin() + hi)};
  return CyclicSplit{std::move(conjugator), std::move(core)};
}

std::optional<FreeWord> conjugate_in_free(const FreeWord& u,
                                          const FreeWord& v) {
  if (u.rank != v.rank) throw DomainError("rank mismatch");
  CyclicSplit su = cyclic_reduce(u);
  CyclicSplit sv = cyclic_reduce(v);
  if (su.core.letters.size() != sv.core.letters.size()) return std::nullopt;
  std::size_t len = su.core.letters.size();
  if (len == 0) return FreeWord{u.rank, {}};
  for (std::size_t r = 0; r < len; ++r) {
    bool match = true;
    for (std::size_t x = 0; x < len && match; ++x)
      match = su.core.letters[(r + x) % len] == sv.core.letters[x];
    if (!match) continue;
    // core rotated left by r equals sv.core; with c = c1 c2 (|c1| = r),
    // c2 c1 = c1^-1 c c1, so  v = (b c1^-1 a^-1) u (b c1^-1 a^-1)^-1.
    FreeWord c1{u.rank, std::vector<int>(su.core.letters.begin(),
                                         su.core.letters.begin() + r)};
    FreeWord w = fg_multiply(fg_multiply(sv.conjugator, fg_invert(c1)),
                             fg_invert(su.conjugator));
    return w;
  }
  return std::nullopt;
}

FreeEndo identity_endo(int rank) {
  FreeEndo phi;
  phi.rank = rank;
  for (int i = 1; i <= rank; ++i) phi.images.push_back(fg_generator(rank, i));
  return phi;
}

FreeEndo conj_endo(const FreeWord& w) {
  FreeEndo phi;
  phi.rank = w.rank;
  for (int i = 1; i <= w.rank; ++i)
    phi.images.push_back(fg_conjugate(fg_generator(w.rank, i), w));
  phi.conj_origin = w;
  return phi;
}

FreeWord apply_endo(const FreeEndo& phi, const FreeWord& w) {
  if (phi.rank != w.rank) throw DomainError("rank mismatch");
  std::vector<int> out;
  for (int l : w.letters) {
    const FreeWord& img = phi.images[std::abs(l) - 1];
    if (l > 0) {
      for (int m : img.letters) {
        if (!out.empty() && out.back() == -m)
          out.pop_back();
        else
          out.push_back(m);
      }
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) {
        int m = -*it;
        if (!out.empty() && out.back() == -m)
          out.pop_back();
        else
          out.push_back(m);
      }
    }
    check_word_length(out.size());
  }
  return FreeWord{w.rank, std::move(out)};
}

FreeEndo compose(const FreeEndo& phi, const FreeEndo& psi) {
  if (phi.rank != psi.rank) throw DomainError("rank mismatch");
  FreeEndo out;
  out.rank = phi.rank;
  out.images.reserve(phi.rank);
  for (const FreeWord& img : psi.images)
    out.images.push_back(apply_endo(phi, img));
  return out;
}

bool endo_equal(const FreeEndo& phi, const FreeEndo& psi) {
  return phi.same_images(psi);
}

bool is_identity_endo(const FreeEndo& phi) {
  return phi.same_images(identity_endo(phi.rank));
}

std::optional<FreeWord> is_inner(const FreeEndo& phi) {
  if (phi.rank < 2) throw DomainError("inner test needs rank at least 2");
  FreeWord eta1 = fg_generator(phi.rank, 1);
  FreeWord eta2 = fg_generator(phi.rank, 2);
  auto w0 = conjugate_in_free(eta1, phi.images[0]);
  if (!w0) return std::nullopt;
  // Every solution of w eta_1 w^-1 = phi(eta_1) is w0 * eta_1^k: the
  // centralizer of a basis generator is the cyclic group it generates.
  // The eta_2 image pins k: eta_1^k eta_2 eta_1^-k must equal z below,
  // whose reduced spelling exposes k directly.
  FreeWord z = fg_conjugate(phi.images[1], fg_invert(*w0));
  long long k = 0;
  if (!(z == eta2)) {
    std::size_t len = z.letters.size();
    if (len < 3 || len % 2 == 0) return std::nullopt;
    std::size_t half = len / 2;
    if (z.letters[half] != 2) return std::nullopt;
    int head = z.letters[0];
    if (std::abs(head) != 1) return std::nullopt;
    for (std::size_t x = 0; x < half; ++x) {
      if (z.letters[x] != head || z.letters[len - 1 - x] != -head)
        return std::nullopt;
    }
    k = (head > 0) ? static_cast<long long>(half)
                   : -static_cast<long long>(half);
  }
  FreeWord w = fg_multiply(*w0, fg_power(eta1, k));
  for (int i = 1; i <= phi.rank; ++i) {
    if (!(fg_conjugate(fg_generator(phi.rank, i), w) == phi.images[i - 1]))
      return std::nullopt;
  }
  return w;
}

std::optional<ArtinCertificate> artin_conditions(const FreeEndo& phi) {
  if (phi.rank < 2) throw DomainError("rank must be at least 2");
  std::vector<int> tau_images(phi.rank, -1);
  std::vector<FreeWord> conjugators;
  std::vector<char> used(phi.rank, 0);
  for (int i = 1; i <= phi.rank; ++i) {
    CyclicSplit split = cyclic_reduce(phi.images[i - 1]);
    // A conjugate of a generator cyclically reduces to that one letter;
    // basis elements are pairwise non-conjugate, so the target is unique.
    if (split.core.letters.size() != 1 || split.core.letters[0] < 0)
      return std::nullopt;
    int target = split.core.letters[0];
    if (used[target - 1]) return std::nullopt;
    used[target - 1] = 1;
    tau_images[i - 1] = target - 1;
    conjugators.push_back(split.conjugator);
  }
  FreeWord boundary = boundary_word(phi.rank);
  if (!(apply_endo(phi, boundary) == boundary)) return std::nullopt;
  return ArtinCertificate{Perm(std::move(tau_images)), std::move(conjugators)};
}

}  // namespace braidkit
