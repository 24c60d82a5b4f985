#pragma once

#include <string>
#include <vector>

#include "trisect/trisection.hpp"

namespace trisect {

/// Curve datum for a trisection diagram family: a freely and cyclically
/// reduced word over the surface presentation, tagged with its family name.
struct CurveWord {
  CurveWord(Word w, std::string family)
      : word(w.cyclically_reduced()), label(std::move(family)) {}

  Word word;
  std::string label;
};

/// True iff the curve word maps to the identity in the codomain free basis.
bool kernel_contains(const GroupHom& h, const Word& curve);

/// Class of the curve in H_1(surface, boundary): exponent sums over
/// x1,y1,...,xg,yg; boundary letters w_j contribute zero.
struct RelHomologyClass {
  std::vector<long> coefficients;
  bool operator==(const RelHomologyClass&) const = default;
};

RelHomologyClass rel_homology_class(const Word& curve, int genus, int boundary);

/// Exact integer independence: the matrix of classes has rank equal to the
/// number of classes. The empty family is independent.
bool independent(const std::vector<RelHomologyClass>& classes);

/// Clause-by-clause verdict for a diagram curve family. Clause (d) is a
/// necessary condition for "simple, closed, essential" only: geometric
/// simplicity is not decided here.
struct DiagramFamilyReport {
  int expected_count = 0;
  int actual_count = 0;
  bool count_ok = false;              // (a) exactly g - p curves
  std::vector<bool> in_kernel;        // (b) per curve
  bool kernel_ok = false;
  bool independent_ok = false;        // (c) homology classes independent
  std::vector<bool> essential;        // (d) per curve: not trivial, not pure boundary
  bool essential_ok = false;
  std::vector<RelHomologyClass> classes;

  bool ok() const { return count_ok && kernel_ok && independent_ok && essential_ok; }
  /// "count", "kernel", "independence", "essential" or "" when all hold.
  std::string first_failure() const;
};

DiagramFamilyReport check_diagram_family(const GroupHom& h,
                                         const std::vector<Word>& curves,
                                         const TrisectionParams& params);

}  // namespace trisect
