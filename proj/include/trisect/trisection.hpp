#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trisect/hom.hpp"

namespace trisect {

/// Parameters (g, k; p, b) of a relative trisection.
struct TrisectionParams {
  int genus = 0;        // g
  int handles = 0;      // k
  int page_genus = 0;   // p
  int boundary = 0;     // b

  /// Requires g >= k >= 0, g >= p >= 0 and either b > 0 or p = b = 0.
  void validate() const;
  bool closed() const { return page_genus == 0 && boundary == 0; }
  bool operator==(const TrisectionParams&) const = default;
};

/// chi = 2 + g - 3k for closed parameters.
int euler_characteristic_closed(int genus, int handles);

/// Commutative cube data: three maps from one surface presentation to one
/// sector presentation, both of the standard shapes for the parameters.
/// Only structure is checked here; the axioms are checked by verify_cube.
class TrisectionCube {
 public:
  TrisectionCube(std::string name, TrisectionParams params, GroupHom f1,
                 GroupHom f2, GroupHom f3);

  const std::string& name() const { return name_; }
  const TrisectionParams& params() const { return params_; }
  const Presentation& surface() const { return maps_[0].domain(); }
  const Presentation& sector() const { return maps_[0].codomain(); }
  /// 1-based, matching the report labels.
  const GroupHom& map(int i) const { return maps_[static_cast<size_t>(i - 1)]; }

 private:
  std::string name_;
  TrisectionParams params_;
  std::vector<GroupHom> maps_;
};

/// The standard-position pair on S_g^b -> C_{g,0}^b:
/// f1: x_i -> 1, y_i -> d_i, w_j -> o_j and f2: x_i -> d_i, y_i -> 1,
/// w_j -> o_j. Requires g >= 1 or b >= 1.
std::pair<GroupHom, GroupHom> standard_pair(int genus, int boundary);

/// Closed-case cube (g, k; 0, 0) over S_g -> H_g; the boundary condition is
/// vacuous there.
TrisectionCube embed_closed(std::string name, int genus, int handles, GroupHom f1,
                            GroupHom f2, GroupHom f3);

/// Colimit presentation of the cube: three retagged sector copies plus the
/// identifications f_i(s)#i = f_j(s)#j over all pairs i < j and all surface
/// generators.
Presentation total_group(const TrisectionCube& cube);

struct MapVerdicts {
  Certificate well_defined;
  bool surjective = false;
  bool boundary_condition = false;
};

struct FaceVerdicts {
  int left = 0, right = 0;  // 1-based map indices
  Presentation presentation;
  Certificate freeness;     // certify_free against rank k
};

struct TotalVerdicts {
  Presentation presentation;
  Certificate triviality;   // certify_trivial; informational, never gates
  AbelianInvariants invariants;
};

enum class Overall { Pass, Fail, Inconclusive };
std::string to_string(Overall o);

struct VerificationReport {
  TrisectionParams params;
  std::array<MapVerdicts, 3> maps;
  std::vector<FaceVerdicts> faces;  // (1,2), (1,3), (2,3)
  std::optional<TotalVerdicts> total;
  std::optional<int> euler_characteristic;  // closed cubes only
  Overall overall = Overall::Inconclusive;
  std::string failure;                      // first failing check, empty when none
  std::vector<std::string> inconclusive;    // checks that ran out of budget
};

/// Runs every axiom check: well-definedness, surjectivity and the boundary
/// condition per map, freeness of rank k for each pushout face, and the
/// total group with a triviality certificate or abelianization report. The
/// checks are independent; jobs > 1 runs them concurrently with the report
/// assembled in fixed order.
VerificationReport verify_cube(const TrisectionCube& cube, long budget, int jobs = 1);

/// Morphism of cubes: phi0 on surfaces, phi1..phi3 on sectors.
class CubeMorphism {
 public:
  CubeMorphism(std::string name, TrisectionCube source, TrisectionCube target,
               GroupHom phi0, GroupHom phi1, GroupHom phi2, GroupHom phi3);

  const std::string& name() const { return name_; }
  const TrisectionCube& source() const { return source_; }
  const TrisectionCube& target() const { return target_; }
  const GroupHom& phi0() const { return components_[0]; }
  /// phi(0) = surface component, phi(1..3) = sector components.
  const GroupHom& phi(int i) const { return components_[static_cast<size_t>(i)]; }

 private:
  std::string name_;
  TrisectionCube source_;
  TrisectionCube target_;
  std::vector<GroupHom> components_;
};

struct MorphismReport {
  std::array<Certificate, 4> components;  // phi0..phi3
  Verdict verdict = Verdict::Inconclusive;
  struct Mismatch {
    int map = 0;  // 1-based face map index
    std::string generator;
    Word lhs, rhs;
  };
  std::optional<Mismatch> mismatch;  // first commutativity failure
};

/// Certified iff all four components are well-defined and, for each i and
/// each surface generator s, target.f_i(phi0(s)) = phi_i(source.f_i(s)) in
/// the sector free basis. For closed surfaces, phi0 well-definedness is
/// decided only up to a bounded normal-closure search (may be Inconclusive).
MorphismReport verify_morphism(const CubeMorphism& m, long budget);

}  // namespace trisect
