#include "braidkit/commutator.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "braidkit/garside.hpp"

namespace braidkit {

namespace {

int s_index_limit(int n, SMode mode) {
  return mode == SMode::linear ? n - 2 : n;
}

void validate_s_index(int i, int n, SMode mode) {
  if (n < (mode == SMode::linear ? 3 : 5))
    throw DomainError("strand count too small for this index scheme");
  if (i < 1 || i > s_index_limit(n, mode))
    throw DomainError("s-index " + std::to_string(i) + " out of range");
}

// S-word with evaluation sigma_a sigma_b^-1, walking the cyclic index path
// from a to b on the shorter side.
std::vector<int> s_path(int a, int b, int n) {
  std::vector<int> out;
  if (a == b) return out;
  int forward = (b - a + n) % n;
  int backward = (a - b + n) % n;
  if (forward <= backward) {
    for (int t = a; t != b; t = cyclic_index(t + 1, n)) out.push_back(t);
  } else {
    for (int t = a; t != b; t = cyclic_index(t - 1, n))
      out.push_back(-cyclic_index(t - 1, n));
  }
  return out;
}

std::vector<int> invert_letters(const std::vector<int>& letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& l : out) l = -l;
  return out;
}

void append_letters(std::vector<int>& out, const std::vector<int>& more) {
  out.insert(out.end(), more.begin(), more.end());
  check_word_length(out.size());
}

void append_repeated(std::vector<int>& out, const std::vector<int>& block,
                     long long reps) {
  if (reps >= 0) {
    for (long long r = 0; r < reps; ++r) append_letters(out, block);
  } else {
    std::vector<int> inv = invert_letters(block);
    for (long long r = 0; r < -reps; ++r) append_letters(out, inv);
  }
}

bool sigma_commutes_with_s(int j, int t, int n) {
  return cyclic_distance(j, t, n) >= 2 &&
         cyclic_distance(j, cyclic_index(t + 1, n), n) >= 2;
}

// Conjugation of a single difference generator by a power of sigma_1,
// expressed back over the difference generators. The two identities in
// play, for any l with sigma_l commuting with s_t:
//   sigma_1   s_t sigma_1^-1 = (sigma_1 sigma_l^-1)   s_t (...)^-1
//   sigma_1^-1 s_t sigma_1   = (sigma_1^-1 sigma_l)   s_t (...)^-1
// When sigma_l also commutes with sigma_1, the whole power transfers at
// once: sigma_1^c sigma_l^-c = (sigma_1 sigma_l^-1)^c is a path word, so
// the result is linear in |c|. Otherwise one conjugation is peeled off and
// the remaining power recurses over the expanded word; the peel target
// always exists for n >= 5.
struct Sigma1Conjugator {
  int n;
  std::map<std::pair<long long, int>, std::vector<int>> memo;

  std::vector<int> letter(long long c, int t) {
    if (c == 0) return {t};
    if (sigma_commutes_with_s(1, t, n)) return {t};
    auto key = std::make_pair(c, t);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    std::vector<int> out;
    int direct = 0;
    for (int l = 1; l <= n; ++l) {
      if (sigma_commutes_with_s(l, t, n) && cyclic_distance(l, 1, n) >= 2) {
        direct = l;
        break;
      }
    }
    if (direct != 0) {
      std::vector<int> path = s_path(1, direct, n);
      append_repeated(out, path, c);
      out.push_back(t);
      append_repeated(out, path, -c);
    } else {
      int l = 0;
      for (int cand = 1; cand <= n; ++cand) {
        if (sigma_commutes_with_s(cand, t, n)) {
          l = cand;
          break;
        }
      }
      if (l == 0) throw DomainError("no commuting index; need n >= 5");
      std::vector<int> wrap;
      if (c > 0) {
        wrap = s_path(1, l, n);
      } else if (cyclic_distance(l, 1, n) >= 2) {
        wrap = s_path(l, 1, n);
      } else {
        int m = 0;
        for (int cand = 1; cand <= n; ++cand) {
          if (cyclic_distance(cand, 1, n) >= 2 &&
              cyclic_distance(cand, l, n) >= 2) {
            m = cand;
            break;
          }
        }
        if (m == 0) throw DomainError("no hop index; need n >= 5");
        wrap = s_path(m, 1, n);
        append_letters(wrap, s_path(l, m, n));
      }
      std::vector<int> once = wrap;
      once.push_back(t);
      append_letters(once, invert_letters(wrap));
      out = word(c > 0 ? c - 1 : c + 1, once);
    }
    memo.emplace(key, out);
    return out;
  }

  std::vector<int> word(long long c, const std::vector<int>& letters) {
    std::vector<int> out;
    for (int l : letters) {
      std::vector<int> piece = letter(c, std::abs(l));
      if (l < 0) piece = invert_letters(piece);
      append_letters(out, piece);
    }
    return out;
  }
};

// Telescoped difference word for sigma_i sigma_1^-1:
// s_{i-1}^-1 s_{i-2}^-1 ... s_1^-1.
std::vector<int> telescope_to_one(int i) {
  std::vector<int> out;
  for (int t = i - 1; t >= 1; --t) out.push_back(-t);
  return out;
}

// Index shift: conjugation by delta^q carries s_t to s_{t+q} cyclically.
std::vector<int> shift_letters(const std::vector<int>& letters, long long q,
                               int n) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    int t = cyclic_index(std::abs(l) + q, n);
    out.push_back(l > 0 ? t : -t);
  }
  return out;
}

void append_reduced(std::vector<int>& out, const std::vector<int>& more) {
  for (int l : more) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  check_word_length(out.size());
}

// Rewrites a zero-exponent word whose running exponent sums stay small:
// w = prod_j sigma_1^{c_j} (sigma_{i_j} sigma_1^-1)^{e_j} sigma_1^{-c_j}.
std::vector<int> rewrite_small_exponents(const BraidWord& w,
                                         Sigma1Conjugator& conj) {
  std::vector<int> out;
  long long running = 0;
  for (int letter : w.letters) {
    int i = std::abs(letter);
    long long c = (letter > 0) ? running : running - 1;
    std::vector<int> core = telescope_to_one(i);
    if (letter < 0) core = invert_letters(core);
    append_reduced(out, conj.word(c, core));
    running += (letter > 0) ? 1 : -1;
  }
  return out;
}

// Coset bookkeeping for the mixed transversal delta^q sigma_1^r with
// 0 <= r < n-1. Conjugation by delta is an index shift, so only the small
// sigma_1 remainder ever reaches the conjugator machinery; the running
// exponent sum never inflates the output.
struct Transversal {
  int n;
  Sigma1Conjugator conj;
  // S-expression of sigma_1^{n-2} sigma_i delta^-1 (exponent sum zero),
  // the crossing word between adjacent delta-cosets; one entry per i.
  std::vector<std::vector<int>> crossing;

  explicit Transversal(int strands) : n(strands), conj{strands, {}} {}

  const std::vector<int>& crossing_word(int i) {
    if (crossing.empty()) crossing.resize(n);
    if (crossing[i - 1].empty()) {
      std::vector<int> letters(static_cast<std::size_t>(n - 2), 1);
      letters.push_back(i);
      for (int t = n - 1; t >= 1; --t) letters.push_back(-t);
      crossing[i - 1] =
          rewrite_small_exponents(make_braid_word(n, letters), conj);
    }
    return crossing[i - 1];
  }

  void divmod(long long a, long long& q, long long& r) const {
    q = a / (n - 1);
    r = a % (n - 1);
    if (r < 0) {
      r += n - 1;
      q -= 1;
    }
  }

  std::vector<int> term(long long a, int i, int e) {
    long long q = 0, r = 0;
    divmod(a, q, r);
    if (e > 0) {
      if (r <= n - 3)
        return shift_letters(conj.word(r, telescope_to_one(i)), q, n);
      return shift_letters(crossing_word(i), q, n);
    }
    if (r >= 1)
      return shift_letters(conj.word(r - 1, invert_letters(telescope_to_one(i))),
                           q, n);
    return shift_letters(invert_letters(crossing_word(i)), q - 1, n);
  }
};

}  // namespace

BraidWord s_letter(int i, int n, SMode mode) {
  validate_s_index(i, n, mode);
  if (mode == SMode::linear) return make_braid_word(n, {i, -(i + 1)});
  return concat(cyclic_generator(n, i),
                invert(cyclic_generator(n, cyclic_index(i + 1, n))));
}

BraidWord eval_sword(const SWord& s) {
  BraidWord out{s.n, {}};
  for (int l : s.letters) {
    BraidWord piece = s_letter(std::abs(l), s.n, s.mode);
    out = concat(out, l > 0 ? piece : invert(piece));
  }
  return out;
}

SWord sword_invert(const SWord& s) {
  return SWord{s.n, s.mode, invert_letters(s.letters)};
}

SWord sword_concat(const SWord& a, const SWord& b) {
  if (a.n != b.n || a.mode != b.mode)
    throw DomainError("s-word scheme mismatch");
  SWord out = a;
  append_letters(out.letters, b.letters);
  return out;
}

bool in_commutator_subgroup(const BraidWord& w) {
  return exponent_sum(w) == 0;
}

SWord rewrite_in_S(const BraidWord& word, bool verify) {
  if (word.n < 5) throw DomainError("rewriting needs at least 5 strands");
  if (exponent_sum(word) != 0)
    throw DomainError("word is not in the commutator subgroup");
  BraidWord w = free_reduce(word);
  int n = w.n;

  // w = prod_j rep(a_j) sigma_{i_j}^{e_j} rep(a_j + e_j)^-1 over the
  // transversal rep(a) = delta^q sigma_1^r, a = q(n-1) + r; the reps
  // telescope away because the total exponent sum is zero.
  Transversal transversal(n);
  SWord out{n, SMode::cyclic, {}};
  long long running = 0;
  for (int letter : w.letters) {
    int i = std::abs(letter);
    int e = letter > 0 ? 1 : -1;
    append_reduced(out.letters, transversal.term(running, i, e));
    running += e;
  }

  if (verify && !words_equal(eval_sword(out), w))
    throw DomainError("rewrite verification failed");
  return out;
}

std::pair<BraidWord, BraidWord> perfectness_witness(int i, int n, SMode mode) {
  if (n < 5) throw DomainError("no commuting index exists below 5 strands");
  validate_s_index(i, n, mode);
  int ip1 = mode == SMode::cyclic ? cyclic_index(i + 1, n) : i + 1;
  // Smallest j in the cyclic family at distance >= 2 from both i and i+1;
  // the band word serves as sigma_n when the classical letters run out.
  int j = 0;
  for (int cand = 1; cand <= n; ++cand) {
    if (cyclic_distance(cand, i, n) >= 2 &&
        cyclic_distance(cand, ip1, n) >= 2) {
      j = cand;
      break;
    }
  }
  if (j == 0) throw DomainError("no commuting index for this pair");
  BraidWord sj_inv = invert(cyclic_generator(n, j));
  BraidWord a = concat(concat(cyclic_generator(n, ip1), cyclic_generator(n, i)),
                       concat(sj_inv, sj_inv));
  BraidWord b = concat(cyclic_generator(n, ip1), sj_inv);
  return {a, b};
}

BraidWord conjugacy_chain_witness(int i, int n) {
  if (n < 5) throw DomainError("chain witness needs at least 5 strands");
  validate_s_index(i, n, SMode::cyclic);
  BraidWord g = concat(cyclic_generator(n, i),
                       cyclic_generator(n, cyclic_index(i + 1, n)));
  g = concat(g, cyclic_generator(n, cyclic_index(i + 2, n)));
  g = concat(g, power(cyclic_generator(n, cyclic_index(i + 3, n)), -3));
  return g;
}

std::vector<std::pair<BraidWord, BraidWord>> commutator_expression(
    const BraidWord& w, bool verify) {
  SWord s = rewrite_in_S(w, verify);
  std::vector<std::pair<BraidWord, BraidWord>> out;
  out.reserve(s.letters.size());
  for (int l : s.letters) {
    auto [a, b] = perfectness_witness(std::abs(l), w.n, SMode::cyclic);
    if (l > 0)
      out.emplace_back(a, b);
    else
      out.emplace_back(b, a);  // [a,b]^-1 = [b,a]
  }
  if (verify) {
    BraidWord prod{w.n, {}};
    for (const auto& [a, b] : out) {
      prod = concat(prod, concat(concat(a, b), concat(invert(a), invert(b))));
    }
    if (!words_equal(prod, w))
      throw DomainError("commutator expression verification failed");
  }
  return out;
}

}  // namespace braidkit
