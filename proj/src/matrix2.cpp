#include "braidkit/matrix2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "braidkit/garside.hpp"

namespace braidkit {

namespace {

struct IMat2 {
  long long a = 1, b = 0, c = 0, d = 1;

  IMat2 mul(const IMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  long long det() const { return a * d - b * c; }
  // Adjugate-based inverse, valid for det = +-1.
  IMat2 inv() const {
    long long s = det();
    return {d * s, -b * s, -c * s, a * s};
  }
};

bool unimodular_integral(std::span<const Mat2> images) {
  for (const Mat2& m : images) {
    if (!m.integral()) return false;
    double dt = m.det();
    if (dt != 1.0 && dt != -1.0) return false;
  }
  return true;
}

IMat2 to_int(const Mat2& m) {
  return {static_cast<long long>(std::llround(m.a)),
          static_cast<long long>(std::llround(m.b)),
          static_cast<long long>(std::llround(m.c)),
          static_cast<long long>(std::llround(m.d))};
}

Mat2 to_double(const IMat2& m) {
  return {static_cast<double>(m.a), static_cast<double>(m.b),
          static_cast<double>(m.c), static_cast<double>(m.d)};
}

IMat2 evaluate_exact(std::span<const Mat2> images, const BraidWord& w) {
  IMat2 acc;
  for (int l : w.letters) {
    IMat2 m = to_int(images[std::abs(l) - 1]);
    acc = acc.mul(l > 0 ? m : m.inv());
  }
  return acc;
}

}  // namespace

Mat2 Mat2::mul(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

Mat2 Mat2::inv() const {
  double dt = det();
  if (dt == 0.0) throw DomainError("singular matrix");
  return {d / dt, -b / dt, -c / dt, a / dt};
}

bool Mat2::integral() const {
  auto whole = [](double x) { return x == std::floor(x); };
  return whole(a) && whole(b) && whole(c) && whole(d);
}

double max_norm_diff(const Mat2& x, const Mat2& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b),
                   std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

Mat2 evaluate_word(std::span<const Mat2> images, const BraidWord& w) {
  if (static_cast<int>(images.size()) < w.n - 1)
    throw DomainError("one image per generator required");
  for (const Mat2& m : images)
    if (m.det() == 0.0) throw DomainError("singular image matrix");
  if (unimodular_integral(images)) return to_double(evaluate_exact(images, w));
  Mat2 acc;
  for (int l : w.letters) {
    const Mat2& m = images[std::abs(l) - 1];
    acc = acc.mul(l > 0 ? m : m.inv());
  }
  return acc;
}

bool check_braid_relations(std::span<const Mat2> images, double tol) {
  if (images.size() < 2) return true;
  if (unimodular_integral(images)) tol = 0.0;
  std::size_t count = images.size();
  for (std::size_t i = 0; i + 1 < count; ++i) {
    Mat2 lhs = images[i].mul(images[i + 1]).mul(images[i]);
    Mat2 rhs = images[i + 1].mul(images[i]).mul(images[i + 1]);
    if (max_norm_diff(lhs, rhs) > tol) return false;
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 2; j < count; ++j) {
      if (max_norm_diff(images[i].mul(images[j]), images[j].mul(images[i])) >
          tol)
        return false;
    }
  }
  return true;
}

double commutator_norm(std::span<const Mat2> images) {
  double worst = 0.0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      worst = std::max(worst, max_norm_diff(images[i].mul(images[j]),
                                            images[j].mul(images[i])));
  return worst;
}

bool image_abelian(std::span<const Mat2> images, double tol) {
  if (unimodular_integral(images)) tol = 0.0;
  return commutator_norm(images) <= tol;
}

bool HypothesisReport::passes() const {
  if (!threshold_ok) return false;
  for (char ok : conjugacy_ok)
    if (!ok) return false;
  for (char ok : commutation_ok)
    if (!ok) return false;
  return true;
}

HypothesisReport cyclic_family_hypotheses(std::span<const BraidWord> taus,
                                          int k,
                                          std::span<const BraidWord> witnesses) {
  if (taus.empty() || witnesses.size() != taus.size())
    throw DomainError("one witness per generator required");
  int ambient = taus.front().n;
  for (const BraidWord& t : taus)
    if (t.n != ambient) throw DomainError("ambient strand count mismatch");
  for (const BraidWord& g : witnesses)
    if (g.n != ambient) throw DomainError("ambient strand count mismatch");
  if (k < 1) throw DomainError("k must be at least 1");

  HypothesisReport rep;
  rep.count = static_cast<int>(taus.size());
  rep.k = k;
  rep.threshold_ok = rep.count >= 2 * k + 1;
  for (int i = 0; i < rep.count; ++i) {
    rep.conjugacy_ok.push_back(
        verify_conjugation(witnesses[i], taus[i], taus[(i + 1) % rep.count]));
  }
  for (int i = 0; i < rep.count; ++i) {
    for (int j = i + 1; j < rep.count; ++j) {
      int d = std::min(j - i, rep.count - (j - i));
      if (d < k) continue;
      rep.commutation_pairs.emplace_back(i + 1, j + 1);
      rep.commutation_ok.push_back(
          words_equal(concat(taus[i], taus[j]), concat(taus[j], taus[i])));
    }
  }
  return rep;
}

bool check_homomorphism_b4_b3() {
  auto image = [](const BraidWord& w) {
    std::vector<int> letters;
    for (int l : w.letters) {
      int idx = std::abs(l) == 3 ? 1 : std::abs(l);
      letters.push_back(l > 0 ? idx : -idx);
    }
    return make_braid_word(3, letters);
  };
  BraidWord s1 = generator(4, 1), s2 = generator(4, 2), s3 = generator(4, 3);
  std::vector<std::pair<BraidWord, BraidWord>> relations = {
      {concat(concat(s1, s2), s1), concat(concat(s2, s1), s2)},
      {concat(concat(s2, s3), s2), concat(concat(s3, s2), s3)},
      {concat(s1, s3), concat(s3, s1)},
  };
  for (const auto& [lhs, rhs] : relations)
    if (!words_equal(image(lhs), image(rhs))) return false;
  return true;
}

std::vector<Mat2> sl2_triple_images() {
  return {Mat2{1, 1, 0, 1}, Mat2{1, 0, -1, 1}};
}

}  // namespace braidkit
