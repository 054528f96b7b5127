#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidkit/garside.hpp"
#include "braidkit/io.hpp"
#include "braidkit/representations.hpp"
#include "braidkit/sampling.hpp"

using namespace braidkit;

TEST_CASE("generator action") {
  FreeEndo phi = artin(parse_braid("1", 3));
  CHECK(phi.images[0] == parse_free("2", 3));
  CHECK(phi.images[1] == parse_free("2 1 -2", 3));
  CHECK(phi.images[2] == parse_free("3", 3));
  CHECK(is_identity_endo(artin(BraidWord{3, {}})));
  CHECK(apply_endo(artin(parse_braid("1", 3)), parse_free("1", 3)) ==
        parse_free("2", 3));
}

// The inverse images are pinned after solving compose(artin(s1), X) = id.
TEST_CASE("inverse generator action") {
  FreeEndo fwd = artin(parse_braid("1", 3));
  FreeEndo bwd = artin(parse_braid("-1", 3));
  CHECK(is_identity_endo(compose(fwd, bwd)));
  CHECK(is_identity_endo(compose(bwd, fwd)));
  CHECK(bwd.images[0] == parse_free("-1 2 1", 3));
  CHECK(bwd.images[1] == parse_free("1", 3));
  CHECK(bwd.images[2] == parse_free("3", 3));
}

TEST_CASE("composition order") {
  // the right factor acts first
  FreeEndo both = compose(artin(parse_braid("1", 3)), artin(parse_braid("2", 3)));
  CHECK(apply_endo(both, parse_free("1", 3)) == parse_free("2", 3));
  CHECK(endo_equal(both, artin(parse_braid("1 2", 3))));
  CHECK(endo_equal(compose(artin(parse_braid("1", 3)), identity_endo(3)),
                   artin(parse_braid("1", 3))));
}

TEST_CASE("action is a homomorphism") {
  SplitMix64 rng(31);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + t % 4;
    BraidWord u = random_braid_word(rng, n, 12);
    BraidWord v = random_braid_word(rng, n, 12);
    CHECK(endo_equal(artin(concat(u, v)), compose(artin(u), artin(v))));
  }
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 <= n - 1; ++i) {
      CHECK(endo_equal(artin(make_braid_word(n, {i, i + 1, i})),
                       artin(make_braid_word(n, {i + 1, i, i + 1}))));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        CHECK(endo_equal(artin(make_braid_word(n, {i, j})),
                         artin(make_braid_word(n, {j, i}))));
  }
}

TEST_CASE("every braid action fixes the boundary word") {
  SplitMix64 rng(37);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + t % 6;
    BraidWord b = random_braid_word(rng, n, 16);
    CHECK(apply_endo(artin(b), boundary_word(n)) == boundary_word(n));
  }
}

TEST_CASE("permutation homomorphism") {
  CHECK(mu(parse_braid("1", 3)) == Perm(std::vector<int>{1, 0, 2}));
  CHECK(mu(parse_braid("1 1", 3)).is_identity());
  for (int n = 3; n <= 8; ++n) {
    // left-to-right product of adjacent transpositions is the n-cycle
    Perm cycle = mu(delta(n));
    for (int x = 0; x < n; ++x) CHECK(cycle.apply(x) == (x + 1) % n);
  }
  CHECK(mu(parse_braid("1 2", 3)).to_string() == "2 3 1");
}

TEST_CASE("certificate permutation matches the strand permutation") {
  SplitMix64 rng(41);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + t % 5;
    BraidWord b = random_braid_word(rng, n, 14);
    auto cert = artin_conditions(artin(b));
    REQUIRE(cert.has_value());
    CHECK(cert->tau == mu(b));
  }
}

TEST_CASE("outer equality") {
  FreeEndo phi = artin(parse_braid("1 2", 3));
  CHECK(outer_equal(phi, phi));
  CHECK(outer_equal(conj_endo(fg_generator(3, 1)), identity_endo(3)));
  CHECK_FALSE(outer_equal(artin(parse_braid("1", 3)), identity_endo(3)));
  FreeEndo bare = identity_endo(3);
  bare.images[0] = parse_free("1 2 -1", 3);  // no origin, not invertible here
  bare.braid_origin.reset();
  CHECK_THROWS_AS(outer_equal(identity_endo(3), bare), DomainError);
}

TEST_CASE("outer classes") {
  OuterClass twist{artin(full_twist(3))};
  OuterClass trivial{identity_endo(3)};
  CHECK(twist == trivial);  // the full twist acts by a conjugation
  OuterClass flip{artin(parse_braid("1", 3))};
  CHECK_FALSE(flip == trivial);
}

TEST_CASE("kernel of the outer action is the center") {
  for (int n = 2; n <= 8; ++n) {
    CHECK(in_kernel_gamma(full_twist(n)));
    CHECK(in_kernel_gamma(power(full_twist(n), 2)));
    auto witness = is_inner(artin(full_twist(n)));
    REQUIRE(witness.has_value());
    CHECK(*witness == boundary_word(n));
  }
  CHECK_FALSE(in_kernel_gamma(parse_braid("1", 3)));
  SplitMix64 rng(43);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + t % 4;
    BraidWord b = random_braid_word(rng, n, 12);
    if (!mu(b).is_identity()) CHECK_FALSE(in_kernel_gamma(b));
  }
}

TEST_CASE("center power detection") {
  CHECK(center_power_detect(conj_endo(fg_power(boundary_word(3), 2))) == 2);
  CHECK(center_power_detect(artin(full_twist(4))) == 1);
  CHECK(center_power_detect(artin(power(full_twist(5), 3))) == 3);
  CHECK_FALSE(center_power_detect(artin(parse_braid("1", 3))).has_value());
  CHECK(center_power_detect(conj_endo(fg_power(boundary_word(4), -2))) == -2);
  CHECK(center_power_detect(identity_endo(3)) == 0);
  // inner but not a boundary power
  CHECK_FALSE(center_power_detect(conj_endo(fg_generator(3, 1))).has_value());
}

TEST_CASE("permutation stabilizers") {
  for (int n = 4; n <= 9; ++n) {
    std::vector<BraidWord> sub;
    for (int i = 1; i <= n - 2; ++i) sub.push_back(generator(n, i));
    CHECK(stabilizer_check(sub, n));
    std::vector<BraidWord> last = {generator(n, n - 1)};
    CHECK_FALSE(stabilizer_check(last, n));
  }
  // the image of the odd-strand subgroup fixes the marked point 2g+2
  for (int g = 2; g <= 4; ++g) {
    int n = 2 * g + 2;
    std::vector<BraidWord> gens;
    for (int i = 1; i <= 2 * g; ++i) gens.push_back(generator(n, i));
    CHECK(stabilizer_check(gens, 2 * g + 2));
  }
  CHECK_THROWS_AS(stabilizer_check(std::vector<BraidWord>{generator(4, 1)}, 9),
                  DomainError);
}

TEST_CASE("faithfulness spot check") {
  SplitMix64 rng(47);
  int checked = 0;
  while (checked < 400) {
    int n = 3 + checked % 4;
    BraidWord b = random_braid_word(rng, n, 20);
    if (is_trivial(b)) continue;
    CHECK_FALSE(is_identity_endo(artin(b)));
    ++checked;
  }
}
