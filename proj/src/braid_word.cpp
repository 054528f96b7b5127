#include "braidkit/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace braidkit {

namespace {

void validate_letters(int n, const std::vector<int>& letters) {
  if (n < 2) throw DomainError("strand count must be at least 2");
  for (int l : letters) {
    int idx = std::abs(l);
    if (idx < 1 || idx > n - 1) {
      throw DomainError("generator index " + std::to_string(l) +
                        " out of range for " + std::to_string(n) + " strands");
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

BraidWord make_braid_word(int n, std::vector<int> letters) {
  validate_letters(n, letters);
  check_word_length(letters.size());
  return BraidWord{n, std::move(letters)};
}

BraidWord free_reduce(BraidWord w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  reduce_into(out, w.letters);
  w.letters = std::move(out);
  return w;
}

bool is_freely_reduced(const BraidWord& w) {
  for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i] == -w.letters[i + 1]) return false;
  return true;
}

long long exponent_sum(const BraidWord& w) {
  long long sum = 0;
  for (int l : w.letters) sum += (l > 0) ? 1 : -1;
  return sum;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw DomainError("strand count mismatch");
  check_word_length(a.letters.size() + b.letters.size());
  std::vector<int> out;
  out.reserve(a.letters.size() + b.letters.size());
  reduce_into(out, a.letters);
  reduce_into(out, b.letters);
  return BraidWord{a.n, std::move(out)};
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> out(w.letters.rbegin(), w.letters.rend());
  for (int& l : out) l = -l;
  return BraidWord{w.n, std::move(out)};
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return concat(concat(g, w), invert(g));
}

BraidWord power(const BraidWord& w, long long k) {
  BraidWord base = k >= 0 ? w : invert(w);
  long long reps = k >= 0 ? k : -k;
  check_word_length(base.letters.size() * static_cast<std::size_t>(reps));
  BraidWord out{w.n, {}};
  for (long long r = 0; r < reps; ++r) out = concat(out, base);
  return out;
}

BraidWord generator(int n, int i) { return make_braid_word(n, {i}); }

BraidWord delta(int n) {
  if (n < 2) throw DomainError("strand count must be at least 2");
  std::vector<int> letters(n - 1);
  for (int i = 1; i < n; ++i) letters[i - 1] = i;
  return BraidWord{n, std::move(letters)};
}

BraidWord full_twist(int n) { return power(delta(n), n); }

BraidWord band_generator(int n) {
  if (n < 3) throw DomainError("band generator needs at least 3 strands");
  BraidWord d = delta(n);
  return conjugate(generator(n, n - 1), d);
}

BraidWord cyclic_generator(int n, int i) {
  if (i >= 1 && i <= n - 1) return generator(n, i);
  if (i == n) return band_generator(n);
  throw DomainError("cyclic generator index out of range");
}

std::vector<BraidWord> cyclic_generators(int n) {
  std::vector<BraidWord> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(cyclic_generator(n, i));
  return out;
}

int cyclic_index(long long i, int n) {
  long long r = i % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

int cyclic_distance(int a, int b, int n) {
  int d = std::abs(a - b) % n;
  return std::min(d, n - d);
}

}  // namespace braidkit
