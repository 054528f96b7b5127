#include "braidkit/common.hpp"

#include <atomic>
#include <string>

namespace braidkit {

namespace {
std::atomic<std::size_t> g_max_word_length{1'000'000};
}

std::size_t max_word_length() { return g_max_word_length.load(); }

void set_max_word_length(std::size_t limit) {
  if (limit == 0) throw DomainError("word-length guard must be positive");
  g_max_word_length.store(limit);
}

void check_word_length(std::size_t length) {
  std::size_t limit = g_max_word_length.load();
  if (length > limit) {
    throw ResourceError("word length " + std::to_string(length) +
                        " exceeds guard of " + std::to_string(limit));
  }
}

}  // namespace braidkit
