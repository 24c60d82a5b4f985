#include <doctest.h>

#include "trisect/dsl.hpp"
#include "trisect/report.hpp"
#include "trisect/tietze.hpp"

using namespace trisect;

namespace {

Word parse(const Alphabet& alphabet, const std::string& text) {
  return parse_word_text(text, alphabet);
}

}  // namespace

TEST_CASE("simplification endpoints") {
  const Alphabet a({"a"});
  const SimplifyResult gone = tietze_simplify(Presentation("p", a, {parse(a, "a")}), 100);
  CHECK(gone.presentation.generators().size() == 0);
  CHECK(gone.presentation.relators().empty());
  CHECK(gone.moves_applied == 1);

  const Alphabet ab({"a", "b"});
  const Presentation torus("t", ab, {parse(ab, "[a,b]")});
  const SimplifyResult stuck = tietze_simplify(torus, 100);
  CHECK(stuck.moves_applied == 0);
  CHECK(stuck.presentation == torus);
}

TEST_CASE("traces replay and preserve the abelianization") {
  const Alphabet abc({"a", "b", "c"});
  const Presentation p("p", abc,
                       {parse(abc, "a b^-1"), parse(abc, "b c^-1 a"), parse(abc, "c a c^-1 a^-1")});
  const AbelianInvariants before = abelianize(p);
  const SimplifyResult result = tietze_simplify(p, 1000);

  Presentation replayed = p;
  for (const TietzeMove& move : result.trace) {
    replayed = apply_move(replayed, move);
    CHECK(abelianize(replayed) == before);
  }
  CHECK(replayed == result.presentation);
  CHECK(result.moves_applied == static_cast<long>(result.trace.size()));

  // identical runs give identical traces
  const SimplifyResult again = tietze_simplify(p, 1000);
  REQUIRE(again.trace.size() == result.trace.size());
  for (size_t i = 0; i < again.trace.size(); ++i)
    CHECK(json_of(again.trace[i]) == json_of(result.trace[i]));
}

TEST_CASE("tampered moves are rejected") {
  const Alphabet ab({"a", "b"});
  const Presentation p("p", ab, {parse(ab, "a b^-1")});
  TietzeMove bogus;
  bogus.kind = TietzeMove::Kind::EliminateGenerator;
  bogus.generator = "a";
  bogus.relator = 0;
  bogus.replacement = parse(Alphabet({"b"}), "b^-1");  // the relator forces b, not b^-1
  CHECK_THROWS_AS(apply_move(p, bogus), Error);

  TietzeMove out_of_range;
  out_of_range.kind = TietzeMove::Kind::RemoveRelator;
  out_of_range.relator = 5;
  CHECK_THROWS_AS(apply_move(p, out_of_range), Error);
}

TEST_CASE("certify_free and certify_trivial") {
  const Alphabet a({"a"});
  const Certificate torsion = certify_free(Presentation("z2", a, {parse(a, "a^2")}), 0, 100);
  CHECK(torsion.verdict == Verdict::Refuted);
  CHECK(torsion.invariants->torsion == std::vector<BigInt>{2});

  const Alphabet ab({"a", "b"});
  const Certificate wrong_rank = certify_free(Presentation("f2", ab, {}), 1, 100);
  CHECK(wrong_rank.verdict == Verdict::Refuted);
  CHECK(wrong_rank.invariants->free_rank == 2);

  const Certificate commutative =
      certify_trivial(Presentation("t", ab, {parse(ab, "[a,b]")}), 100);
  CHECK(commutative.verdict == Verdict::Refuted);

  const Certificate certified = certify_free(Presentation("f1", ab, {parse(ab, "a b")}), 1, 100);
  CHECK(certified.verdict == Verdict::Certified);
  CHECK_FALSE(certified.trace.empty());

  // zero budget can only downgrade Certified to Inconclusive, never flip it
  const Certificate throttled = certify_free(Presentation("f1", ab, {parse(ab, "a b")}), 1, 0);
  CHECK(throttled.verdict == Verdict::Inconclusive);
}

TEST_CASE("bounded normal closure search") {
  const Alphabet ab({"a", "b"});
  const Word relator = parse(ab, "a");

  const auto conjugate = in_normal_closure(parse(ab, "b a b^-1"), {relator}, 4, 6, 50000);
  REQUIRE(conjugate.has_value());
  Word product(ab);
  for (const auto& factor : *conjugate) {
    Word base = factor.inverted ? relator.inverse() : relator;
    product = concat(product, concat(concat(factor.conjugator, base),
                                     factor.conjugator.inverse()));
  }
  CHECK(product == parse(ab, "b a b^-1"));

  CHECK_FALSE(in_normal_closure(parse(ab, "a"), {parse(ab, "b")}, 4, 6, 50000).has_value());
  CHECK(in_normal_closure(Word(ab), {relator}, 4, 6, 1)->empty());

  const auto pair = in_normal_closure(parse(ab, "a b"), {parse(ab, "a"), parse(ab, "b")},
                                      4, 6, 50000);
  CHECK(pair.has_value());
}

TEST_CASE("redundant relator removal") {
  const Alphabet ab({"a", "b"});
  // [a,b] and a conjugate of it: the copy dies, the commutator stays.
  const Presentation p("p", ab,
                       {parse(ab, "[a,b]"), parse(ab, "b a^2 b a^-1 b^-1 a^-1 b^-1")});
  const SimplifyResult result = tietze_simplify(p, 100);
  CHECK(result.presentation.relators().size() == 1);
  CHECK(result.presentation.generators().size() == 2);
  CHECK(abelianize(result.presentation) == abelianize(p));

  // remove-relator moves apply when the witness product checks out
  const Presentation q("q", ab, {parse(ab, "a"), parse(ab, "b a b^-1")});
  const auto witness = in_normal_closure(q.relators()[1], {q.relators()[0]}, 4, 6, 50000);
  REQUIRE(witness.has_value());
  TietzeMove removal;
  removal.kind = TietzeMove::Kind::RemoveRelator;
  removal.relator = 1;
  for (auto factor : *witness) {
    factor.relator = 0;
    removal.witness.push_back(factor);
  }
  const Presentation removed = apply_move(q, removal);
  CHECK(removed.relators().size() == 1);
  CHECK(removed.relators()[0] == parse(ab, "a"));
}
