#include "braidkit/io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidkit {

std::vector<int> parse_signed_indices(const std::string& text,
                                      bool allow_x_prefix) {
  std::vector<int> out;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    std::string body = token;
    bool negative = false;
    std::size_t pos = 0;
    if (pos < body.size() && (body[pos] == '-' || body[pos] == '+')) {
      negative = body[pos] == '-';
      ++pos;
    }
    if (allow_x_prefix && pos < body.size() && body[pos] == 'x') ++pos;
    if (pos >= body.size()) throw ParseError("malformed token '" + token + "'");
    long value = 0;
    for (; pos < body.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(body[pos])))
        throw ParseError("malformed token '" + token + "'");
      value = value * 10 + (body[pos] - '0');
      if (value > 1'000'000) throw ParseError("token out of range: " + token);
    }
    if (value == 0)
      throw DomainError("generator index 0 is not valid in token '" + token +
                        "'");
    out.push_back(negative ? -static_cast<int>(value)
                           : static_cast<int>(value));
  }
  return out;
}

BraidWord parse_braid(const std::string& text, int n) {
  return make_braid_word(n, parse_signed_indices(text));
}

FreeWord parse_free(const std::string& text, int rank) {
  return make_free_word(rank, parse_signed_indices(text, true));
}

SWord parse_sword(const std::string& text, int n, SMode mode) {
  std::vector<int> letters = parse_signed_indices(text);
  for (int l : letters) {
    int limit = mode == SMode::linear ? n - 2 : n;
    if (std::abs(l) < 1 || std::abs(l) > limit)
      throw DomainError("s-index out of range in word");
  }
  return SWord{n, mode, std::move(letters)};
}

std::string render_letters(const std::vector<int>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters[i]);
  }
  return out;
}

Mat2 parse_mat2(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream stream(spaced);
  double entries[4];
  for (double& e : entries) {
    if (!(stream >> e)) throw ParseError("matrix needs four entries");
  }
  std::string trailing;
  if (stream >> trailing) throw ParseError("matrix needs exactly four entries");
  return Mat2{entries[0], entries[1], entries[2], entries[3]};
}

std::string render_mat2(const Mat2& m) {
  std::ostringstream out;
  out << m.a << ' ' << m.b << ' ' << m.c << ' ' << m.d;
  return out.str();
}

}  // namespace braidkit
