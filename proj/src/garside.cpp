#include "braidkit/garside.hpp"

#include <cstdlib>
#include <utility>

namespace braidkit {

namespace {

constexpr int kMaxStrands = 64;  // descent sets live in a 64-bit mask

std::uint64_t descents_of(const Perm& p) { return p.descent_mask(); }

// Descents of the inverse without materializing it.
std::uint64_t inverse_descents_of(const Perm& p) {
  int pos[kMaxStrands];
  int n = p.degree();
  for (int x = 0; x < n; ++x) pos[p.apply(x)] = x;
  std::uint64_t mask = 0;
  for (int v = 0; v + 1 < n; ++v)
    if (pos[v] > pos[v + 1]) mask |= (std::uint64_t{1} << v);
  return mask;
}

// Slides crossings from the head of b into the tail of a until the pair is
// left-weighted: S(b) subset of F(a). Moving crossing i is valid exactly
// when i lies in S(b) \ F(a); every move keeps the product fixed and grows
// a, so the loop terminates at the unique left-weighted split.
bool normalize_pair(Perm& a, Perm& b) {
  bool moved = false;
  for (;;) {
    std::uint64_t candidates = inverse_descents_of(b) & ~descents_of(a);
    if (candidates == 0) return moved;
    int bit = __builtin_ctzll(candidates);
    a.swap_positions(bit);
    b.swap_values(bit);
    moved = true;
  }
}

// Streams simple factors while keeping the accumulated sequence close to
// left-weighted. The element is factors * Delta^twist_right; keeping the
// twist power on the right means newly arriving factors are the only ones
// that need pre-conjugation, never the whole prefix.
struct Builder {
  int n;
  Perm half;
  long long twist_right = 0;
  std::vector<Perm> factors;

  explicit Builder(int strands) : n(strands), half(Perm::reversal(strands)) {}

  Perm framed(Perm g) const {
    return (twist_right & 1) ? g.flip_conjugate() : g;
  }

  void push_letter(int letter) {
    if (letter > 0) {
      push(framed(Perm::transposition(n, letter)));
    } else {
      // sigma_i^-1 = Delta^-1 * (Delta sigma_i^-1); the twist power joins
      // twist_right and the positive remainder is pushed in its frame.
      twist_right -= 1;
      push(framed(half.compose(Perm::transposition(n, -letter))));
    }
  }

  void push(Perm g) {
    factors.push_back(std::move(g));
    std::size_t j = factors.size() - 1;
    while (j >= 1) {
      bool moved = normalize_pair(factors[j - 1], factors[j]);
      if (factors[j].is_identity()) {
        factors.erase(factors.begin() + static_cast<long>(j));
        if (j >= factors.size()) break;
        continue;  // re-check the same position against the next factor
      }
      if (!moved) break;
      --j;
    }
  }
};

}  // namespace

Perm NormalForm::permutation() const {
  Perm p = (inf % 2 != 0) ? Perm::reversal(n) : Perm(n);
  for (const Perm& f : factors) p = p.compose(f);
  return p;
}

std::string NormalForm::to_string() const {
  std::string out = "D^" + std::to_string(inf);
  for (const Perm& f : factors) out += " | " + f.to_string();
  return out;
}

NormalForm normal_form(const BraidWord& word) {
  if (word.n > kMaxStrands)
    throw DomainError("strand count too large for the normal-form engine");
  BraidWord w = free_reduce(word);
  int n = w.n;
  Perm half = Perm::reversal(n);

  Builder builder(n);
  for (int l : w.letters) builder.push_letter(l);

  NormalForm nf;
  nf.n = n;
  nf.inf = builder.twist_right;
  nf.factors = std::move(builder.factors);
  if (builder.twist_right & 1)
    for (Perm& f : nf.factors) f = f.flip_conjugate();

  // The cascade leaves the sequence nearly left-weighted; these passes
  // reach the unique fixed point with no trivial or half-twist factor.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm>& fs = nf.factors;
    for (std::size_t j = 0; j + 1 < fs.size(); ++j) {
      if (normalize_pair(fs[j], fs[j + 1])) changed = true;
    }
    std::vector<Perm> kept;
    kept.reserve(fs.size());
    for (Perm& f : fs) {
      if (f.is_identity()) {
        changed = true;
      } else if (f == half) {
        nf.inf += 1;
        for (Perm& k : kept) k = k.flip_conjugate();
        changed = true;
      } else {
        kept.push_back(std::move(f));
      }
    }
    fs = std::move(kept);
  }
  return nf;
}

bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw DomainError("strand count mismatch");
  if (exponent_sum(u) != exponent_sum(v)) return false;
  return normal_form(u) == normal_form(v);
}

bool is_trivial(const BraidWord& w) {
  NormalForm nf = normal_form(w);
  return nf.inf == 0 && nf.factors.empty();
}

bool verify_conjugation(const BraidWord& g, const BraidWord& a,
                        const BraidWord& b) {
  return words_equal(conjugate(a, g), b);
}

}  // namespace braidkit
