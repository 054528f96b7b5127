#include "braidkit/sampling.hpp"

namespace braidkit {

std::uint64_t derive_seed(std::uint64_t base, const std::string& label,
                          std::uint64_t a, std::uint64_t b) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(base);
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  mix(a);
  mix(b);
  return h;
}

BraidWord random_braid_word(SplitMix64& rng, int n, int max_len) {
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  std::vector<int> letters;
  letters.reserve(len);
  for (int p = 0; p < len; ++p) {
    int idx = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    int letter = rng.below(2) ? idx : -idx;
    if (!letters.empty() && letters.back() == -letter)
      letters.pop_back();
    else
      letters.push_back(letter);
  }
  return BraidWord{n, std::move(letters)};
}

BraidWord random_zero_exponent_word(SplitMix64& rng, int n, int max_len) {
  int pairs = 1 + static_cast<int>(rng.below(
                      static_cast<std::uint64_t>(max_len / 2)));
  std::vector<int> letters;
  letters.reserve(2 * pairs);
  for (int p = 0; p < pairs; ++p) {
    letters.push_back(
        1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))));
    letters.push_back(
        -1 - static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))));
  }
  for (std::size_t i = letters.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(letters[i - 1], letters[j]);
  }
  return free_reduce(BraidWord{n, std::move(letters)});
}

BraidWord insert_random_relator(SplitMix64& rng, const BraidWord& w) {
  int n = w.n;
  std::vector<int> relator;
  int kind = static_cast<int>(rng.below(n >= 4 ? 3 : 2));
  if (kind == 0 && n >= 3) {
    int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
    relator = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
  } else if (kind == 2) {
    int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 3)));
    int j = i + 2 +
            static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2 - i)));
    relator = {i, j, -i, -j};
  } else {
    int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    int s = rng.below(2) ? i : -i;
    relator = {s, -s};
  }
  std::vector<int> letters = w.letters;
  std::size_t pos = rng.below(letters.size() + 1);
  letters.insert(letters.begin() + pos, relator.begin(), relator.end());
  return BraidWord{n, std::move(letters)};
}

}  // namespace braidkit
