#pragma once

#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"
#include "braidkit/commutator.hpp"
#include "braidkit/free_word.hpp"
#include "braidkit/matrix2.hpp"

namespace braidkit {

/// Shared word grammar: whitespace-separated signed decimal integers,
/// e.g. "1 2 -3"; the empty string is the identity. Free-word tokens may
/// carry an optional 'x' prefix after the sign ("x2", "-x2").
std::vector<int> parse_signed_indices(const std::string& text,
                                      bool allow_x_prefix = false);

BraidWord parse_braid(const std::string& text, int n);
FreeWord parse_free(const std::string& text, int rank);
SWord parse_sword(const std::string& text, int n, SMode mode);

std::string render_letters(const std::vector<int>& letters);

/// Row-major quadruple, comma or space separated: "1,1,0,1" or "1 1 0 1".
Mat2 parse_mat2(const std::string& text);
std::string render_mat2(const Mat2& m);

}  // namespace braidkit
