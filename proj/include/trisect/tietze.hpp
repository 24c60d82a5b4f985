#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trisect/presentation.hpp"

namespace trisect {

enum class Verdict { Certified, Refuted, Inconclusive };
std::string to_string(Verdict v);

/// One factor u r^(+-1) u^-1 of a product of conjugates of relators.
struct ConjugateFactor {
  Word conjugator;
  int relator = 0;  // index into the presentation current at the move
  bool inverted = false;
};

/// One elementary simplification step. A move carries enough data to be
/// re-applied by apply_move, which also validates it, so traces are
/// machine-checkable.
struct TietzeMove {
  enum class Kind { EliminateGenerator, ShortenRelator, RemoveRelator };
  Kind kind = Kind::EliminateGenerator;

  // EliminateGenerator: `generator` occurs exactly once in relator
  // `relator`; `replacement` is the word the relator forces, over the
  // surviving alphabet. The relator and the generator are dropped,
  // the replacement substituted everywhere else.
  std::string generator;
  Word replacement;
  int relator = -1;  // eliminate: defining; shorten: target; remove: removed

  // ShortenRelator: in relator `relator`, the subword at [offset,
  // offset+match_length) equals the first match_length letters of relator
  // `source` (inverted when source_inverted) rotated left by `rotation`;
  // it is replaced by the inverse of the remainder, which is shorter.
  int source = -1;
  bool source_inverted = false;
  int rotation = 0;
  int offset = 0;
  int match_length = 0;

  // RemoveRelator: the removed relator freely equals the product of the
  // witness factors (conjugates of the other relators).
  std::vector<ConjugateFactor> witness;
};

using TietzeTrace = std::vector<TietzeMove>;

/// Applies and validates one move; throws Error when the move does not fit.
/// Relators that reduce to the identity after the move are dropped, so later
/// moves index the compacted list.
Presentation apply_move(const Presentation& p, const TietzeMove& move);

struct SimplifyResult {
  Presentation presentation;
  TietzeTrace trace;
  long moves_applied = 0;
};

/// Deterministic greedy simplification: generator eliminations first (via a
/// relator containing a generator exactly once), then relator-into-relator
/// shortening, then a breadth-first redundancy search over products of at
/// most 4 conjugates with conjugating words of length at most 6. Stops when
/// no move applies or `budget` moves were spent.
SimplifyResult tietze_simplify(const Presentation& p, long budget);

/// Bounded certification outcome. Certified carries a replayable trace,
/// Refuted a refuting invariant or word; Inconclusive carries neither.
struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  TietzeTrace trace;
  std::optional<AbelianInvariants> invariants;
  std::optional<Word> witness_word;
  long budget_spent = 0;
};

/// Certified iff simplification reaches `target_rank` generators and no
/// relators; Refuted iff the abelianization differs from Z^target_rank;
/// Inconclusive otherwise.
Certificate certify_free(const Presentation& p, long target_rank, long budget);
Certificate certify_trivial(const Presentation& p, long budget);

/// Bounded normal-closure membership: search for w as a product of at most
/// `max_factors` conjugates u r^(+-1) u^-1 with |u| <= max_conjugator.
/// Enumeration is lexicographic and capped by `node_budget` expansions, so
/// the outcome is deterministic; absence of a witness means "not found",
/// not "not a member".
std::optional<std::vector<ConjugateFactor>> in_normal_closure(
    const Word& w, const std::vector<Word>& relators, int max_factors,
    int max_conjugator, long node_budget);

}  // namespace trisect
