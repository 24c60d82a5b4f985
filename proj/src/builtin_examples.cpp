#include "trisect/builtin_examples.hpp"

#include <array>

namespace trisect {

namespace {

constexpr std::string_view kB4 = R"(# Built-in: genus-1, two-boundary trisection data for the 4-ball
# (parameters g=1, k=1, p=0, b=2). f1 and f2 are the standard-position pair.
# Note: f3 sends [x1,y1] to a nontrivial commutator while w1 w2 maps to the
# identity, so the relator check refutes its well-definedness; `verify T`
# reports exactly that. The curve w1^-1 y1 x1 does map to the identity.
group S { gens x1 y1 w1 w2; rel [x1,y1] = w1 w2; }
group C { gens d1 o1 o2; rel 1 = o1 o2; }
hom f1 : S -> C { x1 -> 1; y1 -> d1; w1 -> o1; w2 -> o2; }
hom f2 : S -> C { x1 -> d1; y1 -> 1; w1 -> o1; w2 -> o2; }
hom f3 : S -> C { x1 -> d1; y1 -> o1 d1^-1; w1 -> o1; w2 -> o2; }
trisection T (g=1, k=1, p=0, b=2) { f1 f2 f3 }
curves gamma in S ker f3 { w1^-1 y1 x1 }
)";

constexpr std::string_view kS2xS2 = R"(# Built-in: genus-2, one-boundary trisection data for punctured S^2 x S^2
# (parameters g=2, k=0, p=0, b=1), with its gamma curve family exactly as
# originally stated. The relator check refutes f3 with residue
# d2^-1 d1 d2 d1^-1, and y2 x1^-1 is not in ker(f3) (its image is d2 d1^-1);
# `verify T2` and `kernel gamma` adjudicate both claims. The sibling example
# s2xs2-punctured-corrected carries the flagged y1 x1^-1 variant.
group S { gens x1 y1 x2 y2 w1; rel [x1,y1] [x2,y2] = w1; }
group C { gens d1 d2 o1; rel 1 = o1; }
hom f1 : S -> C { x1 -> 1; y1 -> d1; x2 -> 1; y2 -> d2; w1 -> o1; }
hom f2 : S -> C { x1 -> d1; y1 -> 1; x2 -> d2; y2 -> 1; w1 -> o1; }
hom f3 : S -> C { x1 -> d1; y1 -> d1; x2 -> d2^-1 d1 d2; y2 -> d2; w1 -> o1; }
trisection T2 (g=2, k=0, p=0, b=1) { f1 f2 f3 }
curves gamma in S ker f3 { y1 w1^-1 y2 x2^-1 y2^-1, y2 x1^-1 }
)";

constexpr std::string_view kS2xS2Corrected =
    R"(# Built-in: the s2xs2-punctured data with the second gamma curve replaced
# by the candidate correction y1 x1^-1, which does map to the identity under
# f3. The variant is offered as a flagged suggestion only; the original
# words ship unchanged in s2xs2-punctured.
group S { gens x1 y1 x2 y2 w1; rel [x1,y1] [x2,y2] = w1; }
group C { gens d1 d2 o1; rel 1 = o1; }
hom f1 : S -> C { x1 -> 1; y1 -> d1; x2 -> 1; y2 -> d2; w1 -> o1; }
hom f2 : S -> C { x1 -> d1; y1 -> 1; x2 -> d2; y2 -> 1; w1 -> o1; }
hom f3 : S -> C { x1 -> d1; y1 -> d1; x2 -> d2^-1 d1 d2; y2 -> d2; w1 -> o1; }
trisection T2 (g=2, k=0, p=0, b=1) { f1 f2 f3 }
curves gamma in S ker f3 { y1 w1^-1 y2 x2^-1 y2^-1, y1 x1^-1 }
)";

constexpr std::string_view kClosedTrivial =
    R"(# Built-in: the closed (0,0) trisection of the trivial group. Both
# presentations are empty, every check is vacuous, and chi = 2.
group S { gens ; }
group H { gens ; }
hom f1 : S -> H { }
hom f2 : S -> H { }
hom f3 : S -> H { }
trisection T (g=0, k=0, p=0, b=0) { f1 f2 f3 }
)";

constexpr std::array<BuiltinExample, 4> kExamples{{
    {"b4", "4-ball, (1,1;0,2)", kB4},
    {"s2xs2-punctured", "punctured S^2 x S^2, (2,0;0,1), as originally stated", kS2xS2},
    {"s2xs2-punctured-corrected",
     "punctured S^2 x S^2 with the flagged y1 x1^-1 curve variant", kS2xS2Corrected},
    {"closed-trivial", "closed (0,0) trisection of the trivial group", kClosedTrivial},
}};

}  // namespace

std::span<const BuiltinExample> builtin_examples() { return kExamples; }

const BuiltinExample* find_builtin(std::string_view name) {
  for (const auto& example : kExamples)
    if (example.name == name) return &example;
  return nullptr;
}

}  // namespace trisect
