#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/trisection.hpp"

namespace trisect {

// Declarative input format, one declaration per item:
//
//   group S { gens x1 y1 w1 w2; rel [x1,y1] = w1 w2; }
//   hom f1 : S -> C { x1 -> 1; y1 -> d1; w1 -> o1; w2 -> o2; }
//   trisection T (g=1, k=1, p=0, b=2) { f1 f2 f3 }
//   morphism m : T -> T { phi0 a; phi1 b; phi2 c; phi3 d; }
//   curves gamma in S ker f3 { w1^-1 y1 x1, y1 x1^-1 }
//
// Words are generator names with optional integer exponents (x^-3),
// juxtaposition or '*' for products, "1" for the identity and [u,v] for the
// commutator u v u^-1 v^-1. '#' starts a comment. Names are ASCII. Every
// reference resolves to an earlier declaration; names are unique per kind.

struct GroupDecl {
  std::string name;
  Presentation presentation;
  bool operator==(const GroupDecl& other) const;
};

struct HomDecl {
  std::string name, domain, codomain;
  GroupHom hom;
  bool operator==(const HomDecl& other) const;
};

struct CubeDecl {
  std::string name;
  std::array<std::string, 3> maps;
  TrisectionCube cube;
  bool operator==(const CubeDecl& other) const;
};

struct MorphismDecl {
  std::string name, source, target;
  std::array<std::string, 4> components;  // phi0..phi3
  CubeMorphism morphism;
  bool operator==(const MorphismDecl& other) const;
};

struct CurvesDecl {
  std::string name, group, hom;
  std::vector<Word> words;
  bool operator==(const CurvesDecl& other) const;
};

class Document {
 public:
  using Item = std::variant<GroupDecl, HomDecl, CubeDecl, MorphismDecl, CurvesDecl>;

  const std::vector<Item>& items() const { return items_; }
  bool empty() const { return items_.empty(); }

  const GroupDecl* group(std::string_view name) const;
  const HomDecl* hom(std::string_view name) const;
  const CubeDecl* cube(std::string_view name) const;
  const MorphismDecl* morphism(std::string_view name) const;
  const CurvesDecl* curves(std::string_view name) const;

  /// Appends an item after checking name uniqueness within its kind.
  void add(Item item);

  bool operator==(const Document& other) const { return items_ == other.items_; }

 private:
  std::vector<Item> items_;
};

/// Throws ParseError with a 1-based source position on syntax errors,
/// duplicate names, unresolved references, unknown generators, or images
/// missing for a domain generator.
Document parse_document(std::string_view text);

/// Canonical rendering; parse_document(serialize(d)) == d.
std::string serialize(const Document& doc);

/// Standalone word parser over a fixed alphabet (same syntax as the DSL).
Word parse_word_text(std::string_view text, const Alphabet& alphabet);

}  // namespace trisect
