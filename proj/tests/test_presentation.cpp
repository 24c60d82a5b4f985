#include <doctest.h>

#include "trisect/dsl.hpp"
#include "trisect/presentation.hpp"

using namespace trisect;

namespace {

Word parse(const Alphabet& alphabet, const std::string& text) {
  return parse_word_text(text, alphabet);
}

}  // namespace

TEST_CASE("standard surface presentations") {
  const Presentation s12 = std_surface(1, 2);
  CHECK(s12.generators().names() == std::vector<std::string>{"x1", "y1", "w1", "w2"});
  REQUIRE(s12.relators().size() == 1);
  CHECK(s12.relators()[0] == parse(s12.generators(), "x1 y1 x1^-1 y1^-1 w2^-1 w1^-1"));

  const Presentation s21 = std_surface(2, 1);
  CHECK(s21.generators().names() ==
        std::vector<std::string>{"x1", "y1", "x2", "y2", "w1"});
  CHECK(s21.relators()[0] ==
        parse(s21.generators(), "[x1,y1] [x2,y2] w1^-1"));

  const Presentation s00 = std_surface(0, 0);
  CHECK(s00.generators().size() == 0);
  CHECK(s00.relators().empty());

  const Presentation s02 = std_surface(0, 2);
  CHECK(s02.relators()[0] == parse(s02.generators(), "w2^-1 w1^-1"));

  CHECK_THROWS_AS(std_surface(-1, 0), Error);
}

TEST_CASE("standard compression presentations") {
  const Presentation c102 = std_compression(1, 0, 2);
  CHECK(c102.generators().names() == std::vector<std::string>{"d1", "o1", "o2"});
  REQUIRE(c102.relators().size() == 1);
  CHECK(c102.relators()[0] == parse(c102.generators(), "o2^-1 o1^-1"));

  const Presentation c201 = std_compression(2, 0, 1);
  CHECK(c201.generators().names() == std::vector<std::string>{"d1", "d2", "o1"});
  CHECK(c201.relators()[0] == parse(c201.generators(), "o1^-1"));

  const Presentation c300 = std_compression(3, 0, 0);
  CHECK(c300.generators().names() == std::vector<std::string>{"d1", "d2", "d3"});
  CHECK(c300.is_free_presentation());

  const Presentation c212 = std_compression(2, 1, 2);
  CHECK(c212.generators().names() ==
        std::vector<std::string>{"d1", "z1", "h1", "o1", "o2"});
  CHECK(c212.relators()[0] == parse(c212.generators(), "[z1,h1] o2^-1 o1^-1"));

  CHECK_THROWS_AS(std_compression(1, 2, 1), Error);  // g < p
  CHECK_THROWS_AS(std_compression(2, 1, 0), Error);  // b = 0 needs p = 0
}

TEST_CASE("compression groups are free of rank g+p+b-1") {
  for (int g = 0; g <= 3; ++g)
    for (int p = 0; p <= g; ++p)
      for (int b = 1; b <= 3; ++b) {
        const Presentation c = std_compression(g, p, b);
        const AbelianInvariants invariants = abelianize(c);
        CHECK(invariants.is_free_of_rank(g + p + b - 1));
        CHECK(free_basis_rewrite(c).basis.size() == g + p + b - 1);
      }
}

TEST_CASE("free basis rewrite") {
  const Presentation c102 = std_compression(1, 0, 2);
  const FreeBasisRewrite rw102 = free_basis_rewrite(c102);
  CHECK(rw102.basis.names() == std::vector<std::string>{"d1", "o1"});
  CHECK(rw102.eliminated == 2);
  CHECK(rw102.images[2] == parse(rw102.basis, "o1^-1"));

  const Presentation c201 = std_compression(2, 0, 1);
  const FreeBasisRewrite rw201 = free_basis_rewrite(c201);
  CHECK(rw201.basis.names() == std::vector<std::string>{"d1", "d2"});
  CHECK(rw201.images[2].empty());

  const Presentation s12 = std_surface(1, 2);
  const FreeBasisRewrite rw12 = free_basis_rewrite(s12);
  CHECK(rw12.basis.names() == std::vector<std::string>{"x1", "y1", "w1"});
  CHECK(rw12.images[3] == parse(rw12.basis, "w1^-1 x1 y1 x1^-1 y1^-1"));

  // substituting the rewrite into the relator kills it, across the family
  for (int g = 0; g <= 3; ++g)
    for (int b = 1; b <= 3; ++b) {
      for (const Presentation& p : {std_surface(g, b), std_compression(g, 0, b)}) {
        const FreeBasisRewrite rw = free_basis_rewrite(p);
        for (const Word& relator : p.relators())
          CHECK(substitute(relator, rw.images, rw.basis).empty());
      }
    }

  // identity rewrite on free presentations
  const FreeBasisRewrite rw_free = free_basis_rewrite(std_compression(2, 0, 0));
  CHECK(rw_free.eliminated == -1);
  CHECK(rw_free.basis.size() == 2);

  // unsupported shapes
  CHECK_THROWS_AS(free_basis_rewrite(std_surface(1, 0)), Error);  // closed surface
  const Alphabet ab({"a", "b"});
  CHECK_THROWS_AS(
      free_basis_rewrite(Presentation("two", ab, {parse(ab, "a^2"), parse(ab, "b^2")})),
      Error);
}

TEST_CASE("abelianization") {
  const Presentation s12 = std_surface(1, 2);
  const AbelianizationWitness witness = abelianize_with_witness(s12);
  CHECK(witness.invariants.is_free_of_rank(3));
  REQUIRE(witness.matrix.size() == 1);
  CHECK(witness.matrix[0] == std::vector<BigInt>{0, 0, -1, -1});
  CHECK(multiply(multiply(witness.smith.u, witness.matrix), witness.smith.v) ==
        witness.smith.d);

  const Alphabet a({"a"});
  const AbelianInvariants torsion3 =
      abelianize(Presentation("z3", a, {parse(a, "a^3")}));
  CHECK(torsion3.free_rank == 0);
  CHECK(torsion3.torsion == std::vector<BigInt>{3});

  CHECK(abelianize(std_surface(0, 0)).is_trivial());
}

TEST_CASE("presentation normalization and shape comparison") {
  const Alphabet ab({"a", "b"});
  const Presentation p("p", ab,
                       {parse(ab, "a a^-1"), parse(ab, "b a b^-1"), Word(ab)});
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0] == parse(ab, "a"));  // cyclically reduced

  // rotated and inverted relators still match positionally
  const Alphabet user({"u1", "v1", "t1", "t2"});
  const Presentation rotated(
      "user", user, {parse(user, "t2^-1 t1^-1 u1 v1 u1^-1 v1^-1").inverse()});
  CHECK(rotated.same_shape(std_surface(1, 2)));
  CHECK_FALSE(rotated.same_shape(std_surface(0, 2)));
  CHECK_FALSE(std_surface(1, 1).same_shape(std_surface(1, 2)));
  CHECK(std_surface(0, 0).same_shape(std_compression(0, 0, 0)));
}
