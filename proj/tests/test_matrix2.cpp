#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidkit/commutator.hpp"
#include "braidkit/io.hpp"
#include "braidkit/matrix2.hpp"
#include "braidkit/sampling.hpp"

using namespace braidkit;

TEST_CASE("word evaluation") {
  std::vector<Mat2> images = sl2_triple_images();
  Mat2 m = evaluate_word(images, parse_braid("1 2 1", 3));
  CHECK(m == Mat2{0, 1, -1, 0});
  CHECK(evaluate_word(images, parse_braid("", 3)) == Mat2::identity());
  std::vector<Mat2> singular = {Mat2{1, 0, 0, 0}, Mat2::identity()};
  CHECK_THROWS_AS(evaluate_word(singular, parse_braid("1", 3)), DomainError);

  SplitMix64 rng(67);
  for (int t = 0; t < 200; ++t) {
    BraidWord u = random_braid_word(rng, 3, 10);
    BraidWord v = random_braid_word(rng, 3, 10);
    Mat2 prod = evaluate_word(images, concat(u, v));
    Mat2 split = evaluate_word(images, u).mul(evaluate_word(images, v));
    CHECK(max_norm_diff(prod, split) <= 10 * kDefaultTol);
  }
}

TEST_CASE("integral representation on three strands") {
  std::vector<Mat2> images = sl2_triple_images();
  CHECK(check_braid_relations(images, 0.0));
  CHECK_FALSE(image_abelian(images));
  CHECK(commutator_norm(images) >= 1.0);
  Mat2 lhs = images[0].mul(images[1]).mul(images[0]);
  CHECK(lhs == Mat2{0, 1, -1, 0});
}

TEST_CASE("relation and commutation checks") {
  std::vector<Mat2> id2 = {Mat2::identity(), Mat2::identity()};
  CHECK(check_braid_relations(id2));
  CHECK(image_abelian(id2));
  std::vector<Mat2> diag = {Mat2{2, 0, 0, 1}, Mat2{1, 0, 0, 2}};
  CHECK_FALSE(check_braid_relations(diag));
  CHECK(image_abelian(diag));
  std::vector<Mat2> single = {Mat2{3, 1, 0, 1}};
  CHECK(image_abelian(single));
}

TEST_CASE("hypothesis reports") {
  // cyclic standard generators with the shift witness, k = 2
  for (int n = 5; n <= 8; ++n) {
    std::vector<BraidWord> taus = cyclic_generators(n);
    std::vector<BraidWord> wits(n, delta(n));
    HypothesisReport rep = cyclic_family_hypotheses(taus, 2, wits);
    CHECK(rep.threshold_ok);
    CHECK(rep.passes());
  }
  // cyclic difference generators with the zero-exponent witness, k = 3
  for (int n = 7; n <= 9; ++n) {
    std::vector<BraidWord> taus, wits;
    for (int i = 1; i <= n; ++i) {
      taus.push_back(s_letter(i, n, SMode::cyclic));
      wits.push_back(conjugacy_chain_witness(i, n));
    }
    HypothesisReport rep = cyclic_family_hypotheses(taus, 3, wits);
    CHECK(rep.threshold_ok);
    CHECK(rep.passes());
  }
  // four strands fail the size bound even though the witnesses check out
  {
    std::vector<BraidWord> taus = cyclic_generators(4);
    std::vector<BraidWord> wits(4, delta(4));
    HypothesisReport rep = cyclic_family_hypotheses(taus, 2, wits);
    CHECK_FALSE(rep.threshold_ok);
    CHECK_FALSE(rep.passes());
    for (char ok : rep.conjugacy_ok) CHECK(ok);
    for (char ok : rep.commutation_ok) CHECK(ok);
  }
  // a wrong witness is reported, not silently accepted
  {
    std::vector<BraidWord> taus = cyclic_generators(5);
    std::vector<BraidWord> wits(5, BraidWord{5, {}});
    HypothesisReport rep = cyclic_family_hypotheses(taus, 2, wits);
    CHECK_FALSE(rep.passes());
  }
  CHECK_THROWS_AS(cyclic_family_hypotheses(cyclic_generators(5), 2,
                                           std::vector<BraidWord>{}),
                  DomainError);
}

TEST_CASE("exceptional quotient of the four-strand group") {
  CHECK(check_homomorphism_b4_b3());
}

TEST_CASE("matrix text format") {
  CHECK(parse_mat2("1,1,0,1") == Mat2{1, 1, 0, 1});
  CHECK(parse_mat2("1 0 -1 1") == Mat2{1, 0, -1, 1});
  CHECK(render_mat2(Mat2{0, 1, -1, 0}) == "0 1 -1 0");
  CHECK_THROWS_AS(parse_mat2("1 2 3"), ParseError);
  CHECK_THROWS_AS(parse_mat2("1 2 3 4 5"), ParseError);
}
