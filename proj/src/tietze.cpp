#include "trisect/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

namespace trisect {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "Certified";
    case Verdict::Refuted:
      return "Refuted";
    default:
      return "Inconclusive";
  }
}

namespace {

constexpr int kMaxConjugateFactors = 4;
constexpr int kMaxConjugatorLength = 6;
constexpr long kRedundancyNodeBudget = 50000;

// relator = a g^s b with g occurring once  =>  g = (a^-1 b^-1)^s.
Word solve_relator(const Word& relator, int generator) {
  const auto& codes = relator.codes();
  size_t pos = 0;
  while (pos < codes.size() && std::abs(codes[pos]) - 1 != generator) ++pos;
  std::vector<int32_t> solved;
  for (size_t i = pos; i-- > 0;) solved.push_back(-codes[i]);
  for (size_t i = codes.size(); i-- > pos + 1;) solved.push_back(-codes[i]);
  Word word = Word::reduce(relator.alphabet(), solved);
  return codes[pos] > 0 ? word : word.inverse();
}

int count_occurrences(const Word& w, int generator) {
  int count = 0;
  for (int32_t code : w.codes())
    if (std::abs(code) - 1 == generator) ++count;
  return count;
}

Word remap_without(const Word& w, int dropped, const Alphabet& target) {
  std::vector<int32_t> raw;
  raw.reserve(w.codes().size());
  for (int32_t code : w.codes()) {
    const int g = std::abs(code) - 1;
    const int t = g < dropped ? g : g - 1;
    raw.push_back(code > 0 ? t + 1 : -(t + 1));
  }
  return Word::reduce(target, raw);
}

std::vector<int32_t> rotate_left(const std::vector<int32_t>& codes, int by) {
  const size_t n = codes.size();
  std::vector<int32_t> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = codes[(i + static_cast<size_t>(by)) % n];
  return out;
}

Word product_of_factors(const std::vector<ConjugateFactor>& factors,
                        const std::vector<Word>& relators, int skip,
                        const Alphabet& alphabet) {
  Word product(alphabet);
  for (const auto& f : factors) {
    if (f.relator < 0 || f.relator >= static_cast<int>(relators.size()) ||
        f.relator == skip)
      throw Error("conjugate factor references an invalid relator");
    Word base = relators[static_cast<size_t>(f.relator)];
    if (f.inverted) base = base.inverse();
    product = concat(product, concat(concat(f.conjugator, base), f.conjugator.inverse()));
  }
  return product;
}

}  // namespace

Presentation apply_move(const Presentation& p, const TietzeMove& move) {
  const auto& relators = p.relators();
  const auto check_index = [&](int i) {
    if (i < 0 || i >= static_cast<int>(relators.size()))
      throw Error("tietze move references relator out of range");
  };

  switch (move.kind) {
    case TietzeMove::Kind::EliminateGenerator: {
      const int g = p.generators().find(move.generator);
      if (g < 0) throw Error("tietze move eliminates unknown generator '" + move.generator + "'");
      check_index(move.relator);
      const Word& defining = relators[static_cast<size_t>(move.relator)];
      if (count_occurrences(defining, g) != 1)
        throw Error("defining relator does not contain '" + move.generator + "' exactly once");

      std::vector<std::string> names;
      for (int i = 0; i < p.generators().size(); ++i)
        if (i != g) names.push_back(p.generators().name(i));
      Alphabet target(std::move(names));

      const Word replacement = remap_without(solve_relator(defining, g), g, target);
      if (!(replacement == move.replacement))
        throw Error("eliminate-generator witness does not match the relator");

      std::vector<Word> images;
      for (int i = 0; i < p.generators().size(); ++i) {
        if (i == g)
          images.push_back(replacement);
        else
          images.push_back(Word::letter(target, i < g ? i : i - 1));
      }
      std::vector<Word> rewritten;
      for (int i = 0; i < static_cast<int>(relators.size()); ++i) {
        if (i == move.relator) continue;
        rewritten.push_back(substitute(relators[static_cast<size_t>(i)], images, target));
      }
      return Presentation(p.label(), target, std::move(rewritten));
    }

    case TietzeMove::Kind::ShortenRelator: {
      check_index(move.relator);
      check_index(move.source);
      if (move.relator == move.source) throw Error("shorten move needs two distinct relators");
      Word source = relators[static_cast<size_t>(move.source)];
      if (move.source_inverted) source = source.inverse();
      const auto& sc = source.codes();
      if (sc.empty() || move.rotation < 0 || move.rotation >= static_cast<int>(sc.size()))
        throw Error("shorten move rotation out of range");
      const std::vector<int32_t> cyc = rotate_left(sc, move.rotation);
      const auto& tc = relators[static_cast<size_t>(move.relator)].codes();
      const int m = move.match_length;
      if (m <= 0 || 2 * m <= static_cast<int>(cyc.size()) ||
          move.offset < 0 || move.offset + m > static_cast<int>(tc.size()))
        throw Error("shorten move does not shorten");
      for (int i = 0; i < m; ++i)
        if (tc[static_cast<size_t>(move.offset + i)] != cyc[static_cast<size_t>(i)])
          throw Error("shorten move witness does not match the relator");

      std::vector<int32_t> raw(tc.begin(), tc.begin() + move.offset);
      for (size_t i = cyc.size(); i-- > static_cast<size_t>(m);) raw.push_back(-cyc[i]);
      raw.insert(raw.end(), tc.begin() + move.offset + m, tc.end());

      std::vector<Word> rewritten = relators;
      rewritten[static_cast<size_t>(move.relator)] = Word::reduce(p.generators(), raw);
      return Presentation(p.label(), p.generators(), std::move(rewritten));
    }

    case TietzeMove::Kind::RemoveRelator: {
      check_index(move.relator);
      const Word product =
          product_of_factors(move.witness, relators, move.relator, p.generators());
      if (!(product == relators[static_cast<size_t>(move.relator)]))
        throw Error("remove-relator witness product does not equal the relator");
      std::vector<Word> rewritten = relators;
      rewritten.erase(rewritten.begin() + move.relator);
      return Presentation(p.label(), p.generators(), std::move(rewritten));
    }
  }
  throw Error("unknown tietze move");
}

namespace {

std::optional<TietzeMove> pick_elimination(const Presentation& p) {
  const auto& relators = p.relators();
  std::optional<std::tuple<int, int, int>> best;  // (relator length, relator, generator)
  for (int r = 0; r < static_cast<int>(relators.size()); ++r) {
    std::vector<int> occurrences(static_cast<size_t>(p.generators().size()), 0);
    for (int32_t code : relators[static_cast<size_t>(r)].codes())
      ++occurrences[static_cast<size_t>(std::abs(code) - 1)];
    for (int g = 0; g < p.generators().size(); ++g) {
      if (occurrences[static_cast<size_t>(g)] != 1) continue;
      std::tuple<int, int, int> key{relators[static_cast<size_t>(r)].length(), r, g};
      if (!best || key < *best) best = key;
    }
  }
  if (!best) return std::nullopt;
  const auto [len, r, g] = *best;
  (void)len;

  std::vector<std::string> names;
  for (int i = 0; i < p.generators().size(); ++i)
    if (i != g) names.push_back(p.generators().name(i));
  Alphabet target(std::move(names));

  TietzeMove move;
  move.kind = TietzeMove::Kind::EliminateGenerator;
  move.generator = p.generators().name(g);
  move.relator = r;
  move.replacement = remap_without(solve_relator(relators[static_cast<size_t>(r)], g), g, target);
  return move;
}

std::optional<TietzeMove> pick_shorten(const Presentation& p) {
  const auto& relators = p.relators();
  std::optional<TietzeMove> best;
  int best_gain = 0;
  for (int i = 0; i < static_cast<int>(relators.size()); ++i) {
    const auto& target = relators[static_cast<size_t>(i)].codes();
    for (int j = 0; j < static_cast<int>(relators.size()); ++j) {
      if (j == i) continue;
      for (int inverted = 0; inverted < 2; ++inverted) {
        Word source = relators[static_cast<size_t>(j)];
        if (inverted) source = source.inverse();
        const auto& sc = source.codes();
        const int length = static_cast<int>(sc.size());
        for (int rotation = 0; rotation < length; ++rotation) {
          const std::vector<int32_t> cyc = rotate_left(sc, rotation);
          for (int offset = 0; offset < static_cast<int>(target.size()); ++offset) {
            int m = 0;
            while (m < length && offset + m < static_cast<int>(target.size()) &&
                   target[static_cast<size_t>(offset + m)] == cyc[static_cast<size_t>(m)])
              ++m;
            const int gain = 2 * m - length;
            if (gain <= 0 || gain <= best_gain) continue;
            TietzeMove move;
            move.kind = TietzeMove::Kind::ShortenRelator;
            move.relator = i;
            move.source = j;
            move.source_inverted = inverted != 0;
            move.rotation = rotation;
            move.offset = offset;
            move.match_length = m;
            best = move;
            best_gain = gain;
          }
        }
      }
    }
  }
  return best;
}

std::optional<TietzeMove> pick_redundant(const Presentation& p) {
  const auto& relators = p.relators();
  if (relators.size() < 2) return std::nullopt;
  for (int i = 0; i < static_cast<int>(relators.size()); ++i) {
    std::vector<Word> others;
    std::vector<int> absolute;
    for (int j = 0; j < static_cast<int>(relators.size()); ++j)
      if (j != i) {
        others.push_back(relators[static_cast<size_t>(j)]);
        absolute.push_back(j);
      }
    auto found = in_normal_closure(relators[static_cast<size_t>(i)], others,
                                   kMaxConjugateFactors, kMaxConjugatorLength,
                                   kRedundancyNodeBudget);
    if (!found) continue;
    TietzeMove move;
    move.kind = TietzeMove::Kind::RemoveRelator;
    move.relator = i;
    for (auto& factor : *found) {
      factor.relator = absolute[static_cast<size_t>(factor.relator)];
      move.witness.push_back(std::move(factor));
    }
    return move;
  }
  return std::nullopt;
}

}  // namespace

SimplifyResult tietze_simplify(const Presentation& start, long budget) {
  SimplifyResult result{start, {}, 0};
  while (result.moves_applied < budget) {
    std::optional<TietzeMove> move = pick_elimination(result.presentation);
    if (!move) move = pick_shorten(result.presentation);
    if (!move) move = pick_redundant(result.presentation);
    if (!move) break;
    result.presentation = apply_move(result.presentation, *move);
    result.trace.push_back(std::move(*move));
    ++result.moves_applied;
  }
  return result;
}

Certificate certify_free(const Presentation& p, long target_rank, long budget) {
  Certificate certificate;
  certificate.invariants = abelianize(p);
  if (!certificate.invariants->is_free_of_rank(target_rank)) {
    certificate.verdict = Verdict::Refuted;
    return certificate;
  }
  SimplifyResult simplified = tietze_simplify(p, budget);
  certificate.trace = std::move(simplified.trace);
  certificate.budget_spent = simplified.moves_applied;
  certificate.verdict =
      (simplified.presentation.relators().empty() &&
       simplified.presentation.generators().size() == target_rank)
          ? Verdict::Certified
          : Verdict::Inconclusive;
  return certificate;
}

Certificate certify_trivial(const Presentation& p, long budget) {
  return certify_free(p, 0, budget);
}

namespace {

// Reduced words over `alphabet` of the given length, in lexicographic order
// of (generator, sign with + first), without immediate cancellations.
void enumerate_conjugators(const Alphabet& alphabet, int length,
                           std::vector<int32_t>& prefix,
                           std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(Word::reduce(alphabet, prefix));
    return;
  }
  for (int g = 0; g < alphabet.size(); ++g)
    for (int sign = 0; sign < 2; ++sign) {
      const int32_t code = sign == 0 ? g + 1 : -(g + 1);
      if (!prefix.empty() && prefix.back() == -code) continue;
      prefix.push_back(code);
      enumerate_conjugators(alphabet, length, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

std::optional<std::vector<ConjugateFactor>> in_normal_closure(
    const Word& w, const std::vector<Word>& relators, int max_factors,
    int max_conjugator, long node_budget) {
  if (w.empty()) return std::vector<ConjugateFactor>{};
  if (relators.empty()) return std::nullopt;
  const Alphabet& alphabet = w.alphabet();

  size_t max_relator = 0;
  for (const Word& r : relators) max_relator = std::max(max_relator, r.codes().size());
  const size_t length_cap =
      w.codes().size() + 2 * static_cast<size_t>(max_conjugator) + max_relator;

  std::vector<Word> conjugators;
  for (int length = 0; length <= max_conjugator; ++length) {
    std::vector<int32_t> prefix;
    enumerate_conjugators(alphabet, length, prefix, conjugators);
  }

  using State = std::vector<int32_t>;
  std::map<State, std::pair<State, ConjugateFactor>> parent;
  std::set<State> frontier{w.codes()};
  parent[w.codes()] = {w.codes(), {}};

  auto reconstruct = [&](State state) {
    std::vector<ConjugateFactor> factors;
    while (state != w.codes()) {
      auto& [prev, factor] = parent.at(state);
      factors.push_back(factor);
      state = prev;
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
  };

  for (int level = 1; level <= max_factors; ++level) {
    std::set<State> next;
    for (const State& state : frontier) {
      const Word current = Word::reduce(alphabet, state);
      for (int r = 0; r < static_cast<int>(relators.size()); ++r) {
        for (int inverted = 0; inverted < 2; ++inverted) {
          const Word base = inverted ? relators[static_cast<size_t>(r)].inverse()
                                     : relators[static_cast<size_t>(r)];
          for (const Word& u : conjugators) {
            if (--node_budget < 0) return std::nullopt;
            // factor f = u base u^-1;  successor = f^-1 * current
            const Word successor = concat(
                concat(concat(u, base.inverse()), u.inverse()), current);
            if (successor.codes().size() > length_cap) continue;
            if (parent.contains(successor.codes())) continue;
            ConjugateFactor factor{u, r, inverted != 0};
            parent[successor.codes()] = {state, factor};
            if (successor.empty()) return reconstruct(successor.codes());
            next.insert(successor.codes());
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace trisect
