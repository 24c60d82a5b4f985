#include "trisect/trisection.hpp"

#include <cstdlib>
#include <future>

namespace trisect {

void TrisectionParams::validate() const {
  if (genus < 0 || handles < 0 || page_genus < 0 || boundary < 0)
    throw Error("trisection parameters must be nonnegative");
  if (genus < handles) throw Error("trisection parameters need g >= k");
  if (genus < page_genus) throw Error("trisection parameters need g >= p");
  if (boundary == 0 && page_genus != 0)
    throw Error("trisection parameters need b > 0 or p = b = 0");
}

int euler_characteristic_closed(int genus, int handles) {
  if (genus < 0 || handles < 0 || genus < handles)
    throw Error("euler_characteristic_closed needs g >= k >= 0");
  return 2 + genus - 3 * handles;
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::Pass:
      return "Pass";
    case Overall::Fail:
      return "Fail";
    default:
      return "Inconclusive";
  }
}

TrisectionCube::TrisectionCube(std::string name, TrisectionParams params, GroupHom f1,
                               GroupHom f2, GroupHom f3)
    : name_(std::move(name)), params_(params) {
  params_.validate();
  maps_.push_back(std::move(f1));
  maps_.push_back(std::move(f2));
  maps_.push_back(std::move(f3));
  for (int i = 1; i < 3; ++i) {
    if (!(maps_[static_cast<size_t>(i)].domain() == maps_[0].domain()))
      throw Error("cube '" + name_ + "': maps must share one surface presentation");
    if (!(maps_[static_cast<size_t>(i)].codomain() == maps_[0].codomain()))
      throw Error("cube '" + name_ + "': maps must share one sector presentation");
  }
  if (!maps_[0].domain().same_shape(std_surface(params_.genus, params_.boundary)))
    throw Error("cube '" + name_ + "': surface presentation does not match S_" +
                std::to_string(params_.genus) + "^" + std::to_string(params_.boundary));
  if (!maps_[0].codomain().same_shape(
          std_compression(params_.genus, params_.page_genus, params_.boundary)))
    throw Error("cube '" + name_ + "': sector presentation does not match C_{" +
                std::to_string(params_.genus) + "," + std::to_string(params_.page_genus) +
                "}^" + std::to_string(params_.boundary));
}

std::pair<GroupHom, GroupHom> standard_pair(int genus, int boundary) {
  if (genus < 1 && boundary < 1) throw Error("standard_pair needs g >= 1 or b >= 1");
  const Presentation surface = std_surface(genus, boundary);
  const Presentation sector = std_compression(genus, 0, boundary);
  const Alphabet& cod = sector.generators();

  std::vector<Word> first, second;
  for (int i = 0; i < genus; ++i) {
    first.push_back(Word(cod));                 // x_i -> 1
    first.push_back(Word::letter(cod, i));      // y_i -> d_i
    second.push_back(Word::letter(cod, i));     // x_i -> d_i
    second.push_back(Word(cod));                // y_i -> 1
  }
  for (int j = 0; j < boundary; ++j) {
    first.push_back(Word::letter(cod, genus + j));   // w_j -> o_j
    second.push_back(Word::letter(cod, genus + j));
  }
  return {GroupHom("f1", surface, sector, std::move(first)),
          GroupHom("f2", surface, sector, std::move(second))};
}

TrisectionCube embed_closed(std::string name, int genus, int handles, GroupHom f1,
                            GroupHom f2, GroupHom f3) {
  return TrisectionCube(std::move(name), TrisectionParams{genus, handles, 0, 0},
                        std::move(f1), std::move(f2), std::move(f3));
}

namespace {

Word retag(const Word& w, int offset, const Alphabet& target) {
  std::vector<int32_t> raw;
  raw.reserve(w.codes().size());
  for (int32_t code : w.codes())
    raw.push_back(code > 0 ? code + offset : code - offset);
  return Word::reduce(target, raw);
}

}  // namespace

Presentation total_group(const TrisectionCube& cube) {
  const Presentation& sector = cube.sector();
  const int n = sector.generators().size();

  std::vector<std::string> names;
  for (int copy = 1; copy <= 3; ++copy)
    for (const auto& name : sector.generators().names())
      names.push_back(name + "#" + std::to_string(copy));
  Alphabet alphabet(std::move(names));

  std::vector<Word> relators;
  for (int copy = 0; copy < 3; ++copy)
    for (const Word& r : sector.relators())
      relators.push_back(retag(r, copy * n, alphabet));
  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  for (const auto& [i, j] : pairs)
    for (int s = 0; s < cube.surface().generators().size(); ++s)
      relators.push_back(
          concat(retag(cube.map(i).image(s), (i - 1) * n, alphabet),
                 retag(cube.map(j).image(s), (j - 1) * n, alphabet).inverse()));

  return Presentation("total(" + cube.name() + ")", alphabet, std::move(relators));
}

VerificationReport verify_cube(const TrisectionCube& cube, long budget, int jobs) {
  VerificationReport report;
  report.params = cube.params();

  auto map_check = [&cube](int i) {
    const GroupHom& h = cube.map(i);
    MapVerdicts out;
    out.well_defined = validate_hom(h);
    out.surjective = check_surjective(h);
    out.boundary_condition = check_boundary_condition(h, cube.params().boundary);
    return out;
  };
  auto face_check = [&cube, budget](int left, int right) {
    Presentation po = pushout(cube.map(left), cube.map(right));
    Certificate freeness = certify_free(po, cube.params().handles, budget);
    return FaceVerdicts{left, right, std::move(po), std::move(freeness)};
  };
  auto total_check = [&cube, budget]() {
    Presentation total = total_group(cube);
    Certificate triviality = certify_trivial(total, budget);
    AbelianInvariants invariants = abelianize(total);
    return TotalVerdicts{std::move(total), std::move(triviality), std::move(invariants)};
  };

  const std::array<std::pair<int, int>, 3> pairs{{{1, 2}, {1, 3}, {2, 3}}};
  if (jobs > 1) {
    std::array<std::future<MapVerdicts>, 3> map_futures;
    std::array<std::future<FaceVerdicts>, 3> face_futures;
    for (int i = 0; i < 3; ++i)
      map_futures[static_cast<size_t>(i)] =
          std::async(std::launch::async, map_check, i + 1);
    for (int i = 0; i < 3; ++i)
      face_futures[static_cast<size_t>(i)] = std::async(
          std::launch::async, face_check, pairs[static_cast<size_t>(i)].first,
          pairs[static_cast<size_t>(i)].second);
    auto total_future = std::async(std::launch::async, total_check);
    for (int i = 0; i < 3; ++i)
      report.maps[static_cast<size_t>(i)] = map_futures[static_cast<size_t>(i)].get();
    for (int i = 0; i < 3; ++i)
      report.faces.push_back(face_futures[static_cast<size_t>(i)].get());
    report.total = total_future.get();
  } else {
    for (int i = 0; i < 3; ++i) report.maps[static_cast<size_t>(i)] = map_check(i + 1);
    for (const auto& [left, right] : pairs) report.faces.push_back(face_check(left, right));
    report.total = total_check();
  }

  if (cube.params().closed())
    report.euler_characteristic =
        euler_characteristic_closed(cube.params().genus, cube.params().handles);

  auto fail = [&report](std::string message) {
    if (report.failure.empty()) report.failure = std::move(message);
  };
  for (int i = 0; i < 3; ++i) {
    const auto& mv = report.maps[static_cast<size_t>(i)];
    const std::string tag = "[" + std::to_string(i + 1) + "]";
    if (mv.well_defined.verdict == Verdict::Refuted)
      fail("well_defined" + tag + ": relator image " + mv.well_defined.witness_word->str());
    if (!mv.surjective) fail("surjective" + tag);
    if (!mv.boundary_condition) fail("boundary_condition" + tag);
  }
  for (const auto& face : report.faces) {
    const std::string tag =
        "pushout_free[(" + std::to_string(face.left) + "," + std::to_string(face.right) + ")]";
    if (face.freeness.verdict == Verdict::Refuted)
      fail(tag + ": abelianization " + face.freeness.invariants->str());
    else if (face.freeness.verdict == Verdict::Inconclusive)
      report.inconclusive.push_back(tag);
  }
  report.overall = !report.failure.empty()
                       ? Overall::Fail
                       : (report.inconclusive.empty() ? Overall::Pass : Overall::Inconclusive);
  return report;
}

CubeMorphism::CubeMorphism(std::string name, TrisectionCube source, TrisectionCube target,
                           GroupHom phi0, GroupHom phi1, GroupHom phi2, GroupHom phi3)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  components_.push_back(std::move(phi0));
  components_.push_back(std::move(phi1));
  components_.push_back(std::move(phi2));
  components_.push_back(std::move(phi3));
  if (!(components_[0].domain() == source_.surface()) ||
      !(components_[0].codomain() == target_.surface()))
    throw Error("morphism '" + name_ + "': phi0 must map the source surface to the target surface");
  for (int i = 1; i <= 3; ++i)
    if (!(components_[static_cast<size_t>(i)].domain() == source_.sector()) ||
        !(components_[static_cast<size_t>(i)].codomain() == target_.sector()))
      throw Error("morphism '" + name_ + "': phi" + std::to_string(i) +
                  " must map the source sector to the target sector");
}

namespace {

// Necessary condition for w in ncl(relators): the exponent vector of w lies
// in the integer row span of the relators' exponent vectors.
bool abelian_member(const Word& w, const std::vector<Word>& relators) {
  const int n = w.alphabet().size();
  IntMatrix a;
  for (const Word& r : relators) {
    std::vector<BigInt> row(static_cast<size_t>(n), 0);
    for (int32_t code : r.codes())
      row[static_cast<size_t>(std::abs(code) - 1)] += (code > 0 ? 1 : -1);
    a.push_back(std::move(row));
  }
  std::vector<BigInt> v(static_cast<size_t>(n), 0);
  for (int32_t code : w.codes())
    v[static_cast<size_t>(std::abs(code) - 1)] += (code > 0 ? 1 : -1);

  const SmithForm smith = smith_normal_form(a);
  // x A = v solvable over Z iff (v V)_i is divisible by d_i for i < rank and
  // zero past the rank.
  std::vector<BigInt> transformed(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) transformed[static_cast<size_t>(j)] += v[static_cast<size_t>(i)] * smith.v[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int j = 0; j < n; ++j) {
    if (j < smith.rank) {
      if (transformed[static_cast<size_t>(j)] % smith.d[static_cast<size_t>(j)][static_cast<size_t>(j)] != 0) return false;
    } else if (transformed[static_cast<size_t>(j)] != 0) {
      return false;
    }
  }
  return true;
}

// Well-definedness for maps whose codomain may be a closed surface
// presentation: exact when the codomain rewrites to a free basis, otherwise
// a homology test plus a bounded normal-closure search.
Certificate validate_surface_map(const GroupHom& h, long budget) {
  bool exact = h.codomain().is_free_presentation();
  if (!exact && h.codomain().relators().size() == 1) {
    const Word& relator = h.codomain().relators()[0];
    for (int g = 0; g < h.codomain().generators().size() && !exact; ++g) {
      int count = 0;
      for (int32_t code : relator.codes())
        if (std::abs(code) - 1 == g) ++count;
      exact = count == 1;
    }
  }
  if (exact) return validate_hom(h);

  Certificate certificate;
  certificate.verdict = Verdict::Certified;
  for (const Word& relator : h.domain().relators()) {
    const Word image = substitute(relator, h.images(), h.codomain().generators());
    if (image.empty()) continue;
    if (!abelian_member(image, h.codomain().relators())) {
      certificate.verdict = Verdict::Refuted;
      certificate.witness_word = image;
      return certificate;
    }
    auto found = in_normal_closure(image, h.codomain().relators(), 4, 6, budget * 20);
    if (!found) certificate.verdict = Verdict::Inconclusive;
  }
  return certificate;
}

}  // namespace

MorphismReport verify_morphism(const CubeMorphism& m, long budget) {
  MorphismReport report;
  report.components[0] = validate_surface_map(m.phi0(), budget);
  for (int i = 1; i <= 3; ++i)
    report.components[static_cast<size_t>(i)] = validate_hom(m.phi(i));

  for (int i = 1; i <= 3 && !report.mismatch; ++i) {
    const GroupHom& target_map = m.target().map(i);
    const GroupHom& source_map = m.source().map(i);
    for (int s = 0; s < m.source().surface().generators().size(); ++s) {
      const Word lhs = target_map.apply_in_basis(m.phi0().image(s));
      const Word rhs = m.phi(i).apply_in_basis(source_map.image(s));
      if (!(lhs == rhs)) {
        report.mismatch = MorphismReport::Mismatch{
            i, m.source().surface().generators().name(s), lhs, rhs};
        break;
      }
    }
  }

  bool refuted = report.mismatch.has_value();
  bool inconclusive = false;
  for (const auto& certificate : report.components) {
    if (certificate.verdict == Verdict::Refuted) refuted = true;
    if (certificate.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  report.verdict = refuted ? Verdict::Refuted
                           : (inconclusive ? Verdict::Inconclusive : Verdict::Certified);
  return report;
}

}  // namespace trisect
