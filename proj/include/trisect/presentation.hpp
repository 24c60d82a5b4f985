#pragma once

#include <string>
#include <vector>

#include "trisect/snf.hpp"
#include "trisect/word.hpp"

namespace trisect {

/// Finite presentation: ordered generator alphabet plus relators. Relators
/// are stored freely and cyclically reduced; relators reducing to the
/// identity are dropped at construction.
class Presentation {
 public:
  Presentation(std::string label, Alphabet generators, std::vector<Word> relators);

  const std::string& label() const { return label_; }
  const Alphabet& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  bool is_free_presentation() const { return relators_.empty(); }

  /// Positional comparison: equal generator counts and, relator by relator,
  /// equal letter patterns up to rotation and inversion.
  bool same_shape(const Presentation& other) const;

  /// Structural equality: generator names and relator words (labels ignored).
  bool operator==(const Presentation& other) const;

 private:
  std::string label_;
  Alphabet generators_;
  std::vector<Word> relators_;
};

/// Surface group of genus g with b boundary components:
/// <x1,y1,...,xg,yg,w1,...,wb | [x1,y1]...[xg,yg] (w1...wb)^-1>.
/// For b = 0 the relator is the product of commutators alone; for
/// g = b = 0 the presentation is empty.
Presentation std_surface(int genus, int boundary);

/// Compression body group C_{g,p}^b, free of rank g+p+b-1 for b >= 1:
/// <d1..d_{g-p}, z1,h1,..,zp,hp, o1..ob | [z1,h1]...[zp,hp] (o1...ob)^-1>.
/// Requires g >= p >= 0 and b >= 1, or p = b = 0 (free of rank g).
Presentation std_compression(int genus, int page_genus, int boundary);

/// Free-basis data for presentations that are visibly free: either no
/// relators (identity rewrite) or a single relator containing some generator
/// exactly once. The eliminated generator is the last such one, which for
/// the standard shapes is the last boundary generator; its image is the word
/// the relator forces, every other generator maps to itself.
struct FreeBasisRewrite {
  Alphabet basis;
  std::vector<Word> images;  // indexed by presentation generator, over basis
  int eliminated = -1;       // generator ordinal, -1 when none
};

FreeBasisRewrite free_basis_rewrite(const Presentation& p);

AbelianInvariants abelianize(const Presentation& p);

/// Abelianization together with its exponent matrix and SNF witnesses.
struct AbelianizationWitness {
  IntMatrix matrix;  // rows = relators, columns = generators
  SmithForm smith;
  AbelianInvariants invariants;
};

AbelianizationWitness abelianize_with_witness(const Presentation& p);

}  // namespace trisect
