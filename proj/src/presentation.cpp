#include "trisect/presentation.hpp"

#include <algorithm>
#include <cstdlib>

namespace trisect {

Presentation::Presentation(std::string label, Alphabet generators,
                           std::vector<Word> relators)
    : label_(std::move(label)), generators_(std::move(generators)) {
  for (const Word& r : relators) {
    if (!r.alphabet().same(generators_))
      throw Error("relator over wrong alphabet in presentation '" + label_ + "'");
    Word reduced = r.cyclically_reduced();
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

namespace {

bool rotation_or_inverse_equal(const std::vector<int32_t>& a,
                               const std::vector<int32_t>& b) {
  if (a.size() != b.size()) return false;
  const size_t n = a.size();
  if (n == 0) return true;
  for (size_t shift = 0; shift < n; ++shift) {
    bool plain = true, inverted = true;
    for (size_t i = 0; i < n && (plain || inverted); ++i) {
      const int32_t rotated = b[(i + shift) % n];
      if (a[i] != rotated) plain = false;
      if (a[i] != -b[(shift + n - 1 - i) % n]) inverted = false;
    }
    if (plain || inverted) return true;
  }
  return false;
}

}  // namespace

bool Presentation::same_shape(const Presentation& other) const {
  if (generators_.size() != other.generators_.size()) return false;
  if (relators_.size() != other.relators_.size()) return false;
  for (size_t i = 0; i < relators_.size(); ++i)
    if (!rotation_or_inverse_equal(relators_[i].codes(), other.relators_[i].codes()))
      return false;
  return true;
}

bool Presentation::operator==(const Presentation& other) const {
  if (generators_.names() != other.generators_.names()) return false;
  if (relators_.size() != other.relators_.size()) return false;
  for (size_t i = 0; i < relators_.size(); ++i)
    if (relators_[i].codes() != other.relators_[i].codes()) return false;
  return true;
}

Presentation std_surface(int genus, int boundary) {
  if (genus < 0 || boundary < 0) throw Error("std_surface needs g >= 0 and b >= 0");
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  for (int j = 1; j <= boundary; ++j) names.push_back("w" + std::to_string(j));
  Alphabet alphabet(std::move(names));

  Word relator(alphabet);
  for (int i = 0; i < genus; ++i)
    relator = concat(relator, commutator(Word::letter(alphabet, 2 * i),
                                         Word::letter(alphabet, 2 * i + 1)));
  Word boundary_product(alphabet);
  for (int j = 0; j < boundary; ++j)
    boundary_product = concat(boundary_product, Word::letter(alphabet, 2 * genus + j));
  relator = concat(relator, boundary_product.inverse());

  const std::string label =
      "S_" + std::to_string(genus) + "^" + std::to_string(boundary);
  return Presentation(label, alphabet, {relator});
}

Presentation std_compression(int genus, int page_genus, int boundary) {
  if (genus < 0 || page_genus < 0 || boundary < 0 || genus < page_genus)
    throw Error("std_compression needs g >= p >= 0 and b >= 0");
  if (boundary == 0 && page_genus != 0)
    throw Error("std_compression with b = 0 needs p = 0");
  std::vector<std::string> names;
  for (int i = 1; i <= genus - page_genus; ++i) names.push_back("d" + std::to_string(i));
  for (int i = 1; i <= page_genus; ++i) {
    names.push_back("z" + std::to_string(i));
    names.push_back("h" + std::to_string(i));
  }
  for (int j = 1; j <= boundary; ++j) names.push_back("o" + std::to_string(j));
  Alphabet alphabet(std::move(names));

  std::vector<Word> relators;
  if (boundary >= 1) {
    const int zeta0 = genus - page_genus;
    Word relator(alphabet);
    for (int i = 0; i < page_genus; ++i)
      relator = concat(relator, commutator(Word::letter(alphabet, zeta0 + 2 * i),
                                           Word::letter(alphabet, zeta0 + 2 * i + 1)));
    Word boundary_product(alphabet);
    const int omega0 = genus + page_genus;
    for (int j = 0; j < boundary; ++j)
      boundary_product = concat(boundary_product, Word::letter(alphabet, omega0 + j));
    relators.push_back(concat(relator, boundary_product.inverse()));
  }

  const std::string label = "C_{" + std::to_string(genus) + "," +
                            std::to_string(page_genus) + "}^" +
                            std::to_string(boundary);
  return Presentation(label, alphabet, std::move(relators));
}

FreeBasisRewrite free_basis_rewrite(const Presentation& p) {
  const Alphabet& gens = p.generators();
  FreeBasisRewrite out;

  if (p.relators().empty()) {
    out.basis = gens;
    for (int g = 0; g < gens.size(); ++g)
      out.images.push_back(Word::letter(gens, g));
    return out;
  }
  if (p.relators().size() != 1)
    throw Error("free_basis_rewrite: presentation '" + p.label() +
                "' is not of the standard single-relator shape");

  const Word& relator = p.relators()[0];
  std::vector<int> occurrences(static_cast<size_t>(gens.size()), 0);
  for (int32_t code : relator.codes()) ++occurrences[static_cast<size_t>(std::abs(code) - 1)];

  int eliminated = -1;
  for (int g = gens.size() - 1; g >= 0; --g)
    if (occurrences[static_cast<size_t>(g)] == 1) {
      eliminated = g;
      break;
    }
  if (eliminated < 0)
    throw Error("free_basis_rewrite: no generator occurs exactly once in the relator of '" +
                p.label() + "'");

  // relator = a g^s b  =>  g^s = a^-1 b^-1.
  const auto& codes = relator.codes();
  size_t pos = 0;
  while (std::abs(codes[pos]) - 1 != eliminated) ++pos;
  const int sign = codes[pos] > 0 ? +1 : -1;
  std::vector<int32_t> solved;
  for (size_t i = pos; i-- > 0;) solved.push_back(-codes[i]);
  for (size_t i = codes.size(); i-- > pos + 1;) solved.push_back(-codes[i]);
  Word solved_word = Word::reduce(gens, solved);
  if (sign < 0) solved_word = solved_word.inverse();

  std::vector<std::string> basis_names;
  std::vector<int> to_basis(static_cast<size_t>(gens.size()), -1);
  for (int g = 0; g < gens.size(); ++g)
    if (g != eliminated) {
      to_basis[static_cast<size_t>(g)] = static_cast<int>(basis_names.size());
      basis_names.push_back(gens.name(g));
    }
  out.basis = Alphabet(std::move(basis_names));
  out.eliminated = eliminated;

  auto remap = [&](const Word& w) {
    std::vector<int32_t> raw;
    raw.reserve(w.codes().size());
    for (int32_t code : w.codes()) {
      const int g = std::abs(code) - 1;
      const int b = to_basis[static_cast<size_t>(g)];
      raw.push_back(code > 0 ? b + 1 : -(b + 1));
    }
    return Word::reduce(out.basis, raw);
  };

  for (int g = 0; g < gens.size(); ++g) {
    if (g == eliminated)
      out.images.push_back(remap(solved_word));
    else
      out.images.push_back(Word::letter(out.basis, to_basis[static_cast<size_t>(g)]));
  }
  return out;
}

AbelianizationWitness abelianize_with_witness(const Presentation& p) {
  const int n = p.generators().size();
  IntMatrix matrix;
  for (const Word& relator : p.relators()) {
    std::vector<BigInt> row(static_cast<size_t>(n), 0);
    for (int32_t code : relator.codes())
      row[static_cast<size_t>(std::abs(code) - 1)] += (code > 0 ? 1 : -1);
    matrix.push_back(std::move(row));
  }

  AbelianizationWitness out;
  out.matrix = matrix;
  if (matrix.empty()) {
    out.smith.u = identity_matrix(0);
    out.smith.v = identity_matrix(n);
    out.smith.rank = 0;
  } else {
    out.smith = smith_normal_form(std::move(matrix));
  }
  out.invariants.free_rank = n - out.smith.rank;
  for (const BigInt& d : out.smith.diagonal())
    if (d >= 2) out.invariants.torsion.push_back(d);
  return out;
}

AbelianInvariants abelianize(const Presentation& p) {
  return abelianize_with_witness(p).invariants;
}

}  // namespace trisect
