#pragma once

#include <cstddef>
#include <stdexcept>

namespace braidkit {

/// Malformed textual input (bad token, bad format).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain: index out of range, strand-count
/// mismatch, non-invertible input.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured word-length guard.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global word-length guard. Rewriting and endomorphism application can
/// expand words; operations that grow words check against this limit and
/// throw ResourceError instead of exhausting memory. Default 10^6 letters.
std::size_t max_word_length();
void set_max_word_length(std::size_t limit);
void check_word_length(std::size_t length);

}  // namespace braidkit
