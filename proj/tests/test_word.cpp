#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trisect/dsl.hpp"
#include "trisect/word.hpp"

using namespace trisect;
using trisect::testing::naive_reduce;
using trisect::testing::random_reduced_word;

namespace {

Word parse(const Alphabet& alphabet, const std::string& text) {
  return parse_word_text(text, alphabet);
}

const Alphabet kXY({"x", "y"});

}  // namespace

TEST_CASE("free reduction") {
  CHECK(parse(kXY, "x x^-1 y") == parse(kXY, "y"));
  CHECK(parse(kXY, "1").empty());
  CHECK(parse(kXY, "x y y^-1 x") == parse(kXY, "x^2"));
  CHECK(parse(kXY, "x^0").empty());

  // reduce never leaves an adjacent inverse pair
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> code_dist(1, 2);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int32_t> raw;
    for (int i = 0; i < 12; ++i)
      raw.push_back((sign_dist(rng) ? 1 : -1) * code_dist(rng));
    const Word reduced = Word::reduce(kXY, raw);
    CHECK(reduced.codes() == naive_reduce(raw));
    CHECK(Word::reduce(kXY, reduced.codes()) == reduced);  // idempotent
  }
}

TEST_CASE("concat") {
  CHECK(concat(parse(kXY, "x"), parse(kXY, "x^-1")).empty());
  CHECK(concat(parse(kXY, "x y"), parse(kXY, "y^-1 x")) == parse(kXY, "x^2"));
  CHECK(concat(Word(kXY), parse(kXY, "x y")) == parse(kXY, "x y"));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_reduced_word(rng, kXY, 6);
    const Word v = random_reduced_word(rng, kXY, 6);
    const Word w = random_reduced_word(rng, kXY, 6);
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(concat(u, Word(kXY)) == u);
    CHECK(concat(Word(kXY), u) == u);
  }

  const Alphabet other({"a", "b"});
  CHECK_THROWS_AS(concat(parse(kXY, "x"), parse(other, "a")), Error);
}

TEST_CASE("inverse") {
  CHECK(parse(kXY, "x y").inverse() == parse(kXY, "y^-1 x^-1"));
  CHECK(Word(kXY).inverse().empty());
  CHECK(parse(kXY, "x^-1").inverse() == parse(kXY, "x"));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = random_reduced_word(rng, kXY, 8);
    const Word v = random_reduced_word(rng, kXY, 8);
    CHECK(u.inverse().inverse() == u);
    CHECK(concat(u, u.inverse()).empty());
    CHECK(concat(u, v).inverse() == concat(v.inverse(), u.inverse()));
  }
}

TEST_CASE("substitute") {
  // kernel curve of the b4 example's third map
  const Alphabet surface({"x1", "y1", "w1", "w2"});
  const Alphabet sector({"d1", "o1"});
  const std::vector<Word> images{
      parse(sector, "d1"),        // x1
      parse(sector, "o1 d1^-1"),  // y1
      parse(sector, "o1"),        // w1
      parse(sector, "o1^-1"),     // w2 (rewritten through o2 = o1^-1)
  };
  CHECK(substitute(parse(surface, "w1^-1 y1 x1"), images, sector).empty());

  // second example's printed third map on y2 x1^-1
  const Alphabet surface2({"x1", "y1", "x2", "y2", "w1"});
  const Alphabet sector2({"d1", "d2"});
  const std::vector<Word> images2{
      parse(sector2, "d1"), parse(sector2, "d1"), parse(sector2, "d2^-1 d1 d2"),
      parse(sector2, "d2"), Word(sector2)};
  CHECK(substitute(parse(surface2, "y2 x1^-1"), images2, sector2) ==
        parse(sector2, "d2 d1^-1"));

  // identity images leave words unchanged
  std::vector<Word> identity;
  for (int g = 0; g < kXY.size(); ++g) identity.push_back(Word::letter(kXY, g));
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Word u = random_reduced_word(rng, kXY, 8);
    CHECK(substitute(u, identity, kXY) == u);
  }

  // missing image
  const std::map<std::string, Word> partial{{"x", parse(kXY, "y")}};
  CHECK_THROWS_AS(substitute(parse(kXY, "x y"), partial, kXY), Error);
  CHECK(substitute(parse(kXY, "x x"), partial, kXY) == parse(kXY, "y^2"));
}

TEST_CASE("substitute is a monoid homomorphism and commutes with reduction") {
  const Alphabet target({"a", "b", "c"});
  std::mt19937 rng(19);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Word> images{random_reduced_word(rng, target, 4),
                             random_reduced_word(rng, target, 4)};
    const Word u = random_reduced_word(rng, kXY, 6);
    const Word v = random_reduced_word(rng, kXY, 6);
    CHECK(substitute(concat(u, v), images, target) ==
          concat(substitute(u, images, target), substitute(v, images, target)));

    // against the rescan-splice oracle on a raw (unreduced) sequence
    std::vector<int32_t> raw = u.codes();
    raw.insert(raw.end(), v.codes().begin(), v.codes().end());
    const std::vector<std::vector<int32_t>> raw_images{images[0].codes(),
                                                       images[1].codes()};
    CHECK(substitute(Word::reduce(kXY, raw), images, target).codes() ==
          trisect::testing::naive_substitute(raw, raw_images));
  }
}

TEST_CASE("word rendering and powers") {
  CHECK(parse(kXY, "x x y^-1 y^-1 y^-1").str() == "x^2 y^-3");
  CHECK(Word(kXY).str() == "1");
  CHECK(parse(kXY, "x").pow(3) == parse(kXY, "x^3"));
  CHECK(parse(kXY, "x y").pow(-2) == parse(kXY, "y^-1 x^-1 y^-1 x^-1"));
  CHECK(parse(kXY, "x y x^-1").cyclically_reduced() == parse(kXY, "y"));
}

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({""}), Error);
  CHECK_THROWS_AS(Alphabet({"a-b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a b"}), Error);
  CHECK_THROWS_AS(Alphabet({"a^"}), Error);
  CHECK_NOTHROW(Alphabet({"x1", "w2#1", "d'"}));
  CHECK(kXY.find("y") == 1);
  CHECK(kXY.find("z") == -1);
  CHECK(Alphabet({"x", "y"}).same(kXY));
}
