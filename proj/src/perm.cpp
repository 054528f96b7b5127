#include "braidkit/perm.hpp"

#include <algorithm>
#include <numeric>

#include "braidkit/common.hpp"

namespace braidkit {

Perm::Perm(int n) {
  if (n < 1) throw DomainError("permutation degree must be at least 1");
  img_.resize(n);
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v]) {
      throw DomainError("one-line notation is not a bijection");
    }
    seen[v] = 1;
  }
  if (img_.empty()) throw DomainError("permutation degree must be at least 1");
}

Perm Perm::transposition(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("transposition index out of range");
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::reversal(int n) {
  Perm p(n);
  std::reverse(p.img_.begin(), p.img_.end());
  return p;
}

Perm Perm::compose(const Perm& other) const {
  if (degree() != other.degree()) throw DomainError("degree mismatch");
  Perm out(degree());
  for (int x = 0; x < degree(); ++x) out.img_[x] = img_[other.img_[x]];
  return out;
}

Perm Perm::inverse() const {
  Perm out(degree());
  for (int x = 0; x < degree(); ++x) out.img_[img_[x]] = x;
  return out;
}

Perm Perm::flip_conjugate() const {
  int n = degree();
  Perm out(n);
  for (int x = 0; x < n; ++x) out.img_[x] = n - 1 - img_[n - 1 - x];
  return out;
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::inversions() const {
  int count = 0;
  for (int x = 0; x < degree(); ++x)
    for (int y = x + 1; y < degree(); ++y)
      if (img_[x] > img_[y]) ++count;
  return count;
}

std::uint64_t Perm::descent_mask() const {
  std::uint64_t mask = 0;
  for (int b = 0; b + 1 < degree(); ++b)
    if (img_[b] > img_[b + 1]) mask |= (std::uint64_t{1} << b);
  return mask;
}

std::uint64_t Perm::inverse_descent_mask() const {
  return inverse().descent_mask();
}

void Perm::swap_positions(int b) { std::swap(img_[b], img_[b + 1]); }

void Perm::swap_values(int v) {
  for (int& x : img_) {
    if (x == v)
      x = v + 1;
    else if (x == v + 1)
      x = v;
  }
}

std::string Perm::to_string() const {
  std::string out;
  for (int x = 0; x < degree(); ++x) {
    if (x) out += ' ';
    out += std::to_string(img_[x] + 1);
  }
  return out;
}

}  // namespace braidkit
