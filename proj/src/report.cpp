#include "trisect/report.hpp"

#include <sstream>

#include "trisect/fold.hpp"

namespace trisect {

namespace {

Json json_of(const BigInt& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

Json json_of_word(const Word& w) { return w.str(); }

std::string yesno(bool value) { return value ? "yes" : "no"; }

// (g, b) with 2g + b generators and the standard relator, when the
// presentation has that shape.
std::optional<std::pair<int, int>> infer_surface_params(const Presentation& p) {
  const int n = p.generators().size();
  for (int genus = 0; 2 * genus <= n; ++genus) {
    const int boundary = n - 2 * genus;
    if (boundary < 0) break;
    if (p.same_shape(std_surface(genus, boundary))) return std::make_pair(genus, boundary);
  }
  return std::nullopt;
}

}  // namespace

Json json_of(const AbelianInvariants& invariants) {
  Json out;
  out["free_rank"] = invariants.free_rank;
  Json torsion = Json::array();
  for (const auto& d : invariants.torsion) torsion.push_back(json_of(d));
  out["torsion"] = std::move(torsion);
  return out;
}

Json json_of(const TietzeMove& move) {
  Json out;
  switch (move.kind) {
    case TietzeMove::Kind::EliminateGenerator:
      out["move"] = "eliminate_generator";
      out["generator"] = move.generator;
      out["relator"] = move.relator;
      out["replacement"] = move.replacement.str();
      break;
    case TietzeMove::Kind::ShortenRelator:
      out["move"] = "shorten_relator";
      out["relator"] = move.relator;
      out["source"] = move.source;
      out["source_inverted"] = move.source_inverted;
      out["rotation"] = move.rotation;
      out["offset"] = move.offset;
      out["match_length"] = move.match_length;
      break;
    case TietzeMove::Kind::RemoveRelator: {
      out["move"] = "remove_relator";
      out["relator"] = move.relator;
      Json witness = Json::array();
      for (const auto& factor : move.witness) {
        Json f;
        f["conjugator"] = factor.conjugator.str();
        f["relator"] = factor.relator;
        f["inverted"] = factor.inverted;
        witness.push_back(std::move(f));
      }
      out["witness"] = std::move(witness);
      break;
    }
  }
  return out;
}

Json json_of(const Certificate& certificate) {
  Json out;
  out["verdict"] = to_string(certificate.verdict);
  Json trace = Json::array();
  for (const auto& move : certificate.trace) trace.push_back(json_of(move));
  out["trace"] = std::move(trace);
  out["invariants"] =
      certificate.invariants ? json_of(*certificate.invariants) : Json(nullptr);
  out["witness"] =
      certificate.witness_word ? json_of_word(*certificate.witness_word) : Json(nullptr);
  out["budget_spent"] = certificate.budget_spent;
  return out;
}

Json json_of(const Presentation& presentation) {
  Json out;
  out["label"] = presentation.label();
  out["generators"] = presentation.generators().names();
  Json relators = Json::array();
  for (const Word& r : presentation.relators()) relators.push_back(r.str());
  out["relators"] = std::move(relators);
  return out;
}

Json json_of(const TrisectionCube& cube, const VerificationReport& report, long budget) {
  Json out;
  out["command"] = "verify";
  out["cube"] = cube.name();
  Json params;
  params["g"] = report.params.genus;
  params["k"] = report.params.handles;
  params["p"] = report.params.page_genus;
  params["b"] = report.params.boundary;
  out["params"] = std::move(params);
  out["budget"] = budget;

  Json maps = Json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& verdicts = report.maps[static_cast<size_t>(i)];
    Json m;
    m["name"] = cube.map(i + 1).name();
    m["well_defined"] = json_of(verdicts.well_defined);
    m["surjective"] = verdicts.surjective;
    m["boundary_condition"] = verdicts.boundary_condition;
    maps.push_back(std::move(m));
  }
  out["maps"] = std::move(maps);

  Json faces = Json::array();
  for (const auto& face : report.faces) {
    Json f;
    f["pair"] = Json::array({face.left, face.right});
    f["presentation"] = json_of(face.presentation);
    f["certificate"] = json_of(face.freeness);
    faces.push_back(std::move(f));
  }
  out["faces"] = std::move(faces);

  if (report.total) {
    Json total;
    total["presentation"] = json_of(report.total->presentation);
    total["certificate"] = json_of(report.total->triviality);
    total["abelian_invariants"] = json_of(report.total->invariants);
    out["total_group"] = std::move(total);
  } else {
    out["total_group"] = nullptr;
  }
  out["chi"] =
      report.euler_characteristic ? Json(*report.euler_characteristic) : Json(nullptr);
  out["inconclusive"] = report.inconclusive;
  out["failure"] = report.failure.empty() ? Json(nullptr) : Json(report.failure);
  out["overall"] = to_string(report.overall);
  return out;
}

Json json_of(const MorphismReport& report) {
  Json out;
  Json components = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json c;
    c["name"] = "phi" + std::to_string(i);
    c["certificate"] = json_of(report.components[static_cast<size_t>(i)]);
    components.push_back(std::move(c));
  }
  out["components"] = std::move(components);
  out["commutes"] = !report.mismatch.has_value();
  if (report.mismatch) {
    Json m;
    m["map"] = report.mismatch->map;
    m["generator"] = report.mismatch->generator;
    m["lhs"] = report.mismatch->lhs.str();
    m["rhs"] = report.mismatch->rhs.str();
    out["mismatch"] = std::move(m);
  } else {
    out["mismatch"] = nullptr;
  }
  out["verdict"] = to_string(report.verdict);
  return out;
}

namespace {

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

std::string certificate_summary(const Certificate& certificate) {
  std::ostringstream out;
  out << to_string(certificate.verdict);
  if (certificate.verdict == Verdict::Refuted) {
    if (certificate.witness_word)
      out << " [witness " << certificate.witness_word->str() << "]";
    else if (certificate.invariants)
      out << " [abelianization " << certificate.invariants->str() << "]";
  }
  return out.str();
}

}  // namespace

RunResult run_verify(const Document& doc, const std::string& cube_name,
                     const RunOptions& options) {
  const CubeDecl* decl = doc.cube(cube_name);
  if (!decl) throw Error("unknown trisection '" + cube_name + "'");
  const VerificationReport report = verify_cube(decl->cube, options.budget, options.jobs);

  RunResult result;
  switch (report.overall) {
    case Overall::Pass:
      result.exit_code = 0;
      break;
    case Overall::Fail:
      result.exit_code = 1;
      break;
    case Overall::Inconclusive:
      result.exit_code = 2;
      break;
  }
  if (options.json) {
    result.output = dump(json_of(decl->cube, report, options.budget));
    return result;
  }

  std::ostringstream out;
  out << "cube " << decl->cube.name() << " (g=" << report.params.genus
      << ", k=" << report.params.handles << ", p=" << report.params.page_genus
      << ", b=" << report.params.boundary << ")\n";
  for (int i = 0; i < 3; ++i) {
    const auto& verdicts = report.maps[static_cast<size_t>(i)];
    out << "map " << decl->cube.map(i + 1).name()
        << ": well_defined=" << certificate_summary(verdicts.well_defined)
        << " surjective=" << yesno(verdicts.surjective)
        << " boundary_condition=" << yesno(verdicts.boundary_condition) << "\n";
  }
  for (const auto& face : report.faces) {
    out << "face (" << face.left << "," << face.right
        << "): " << certificate_summary(face.freeness);
    if (face.freeness.verdict == Verdict::Certified)
      out << " free of rank " << report.params.handles << " (moves "
          << face.freeness.budget_spent << ")";
    out << "\n";
  }
  if (report.total) {
    out << "total group: " << certificate_summary(report.total->triviality)
        << (report.total->triviality.verdict == Verdict::Certified ? " trivial" : "")
        << ", abelianization " << report.total->invariants.str() << "\n";
  }
  if (report.euler_characteristic) out << "chi: " << *report.euler_characteristic << "\n";
  out << "overall: " << to_string(report.overall);
  if (!report.failure.empty()) out << " (" << report.failure << ")";
  if (!report.inconclusive.empty()) {
    out << " (inconclusive:";
    for (const auto& check : report.inconclusive) out << ' ' << check;
    out << ")";
  }
  out << "\n";
  result.output = out.str();
  return result;
}

RunResult run_pushout(const Document& doc, const std::string& left,
                      const std::string& right, const RunOptions& options) {
  const HomDecl* f = doc.hom(left);
  if (!f) throw Error("unknown hom '" + left + "'");
  const HomDecl* g = doc.hom(right);
  if (!g) throw Error("unknown hom '" + right + "'");
  const Presentation po = pushout(f->hom, g->hom);
  const AbelianInvariants invariants = abelianize(po);

  RunResult result;
  if (options.json) {
    Json out;
    out["command"] = "pushout";
    out["left"] = left;
    out["right"] = right;
    out["presentation"] = json_of(po);
    out["abelian_invariants"] = json_of(invariants);
    result.output = dump(out);
    return result;
  }
  std::ostringstream out;
  out << "pushout of " << left << ", " << right << ":\n";
  out << "  generators:";
  for (const auto& name : po.generators().names()) out << ' ' << name;
  out << "\n";
  for (const Word& r : po.relators()) out << "  rel " << r.str() << " = 1\n";
  out << "  abelianization: " << invariants.str() << "\n";
  result.output = out.str();
  return result;
}

RunResult run_abelianize(const Document& doc, const std::string& group,
                         const RunOptions& options) {
  const GroupDecl* decl = doc.group(group);
  if (!decl) throw Error("unknown group '" + group + "'");
  const AbelianInvariants invariants = abelianize(decl->presentation);

  RunResult result;
  if (options.json) {
    Json out;
    out["command"] = "abelianize";
    out["group"] = group;
    out["free_rank"] = invariants.free_rank;
    Json torsion = Json::array();
    for (const auto& d : invariants.torsion) torsion.push_back(json_of(d));
    out["torsion"] = std::move(torsion);
    result.output = dump(out);
    return result;
  }
  result.output = group + ": " + invariants.str() + "\n";
  return result;
}

RunResult run_fold(const Document& doc, const std::string& hom, const RunOptions&) {
  const HomDecl* decl = doc.hom(hom);
  if (!decl) throw Error("unknown hom '" + hom + "'");
  const FoldedGraph graph =
      FoldedGraph::fold(decl->hom.codomain_basis().basis, decl->hom.images_in_basis());
  return RunResult{0, graph.to_dot()};
}

RunResult run_kernel(const Document& doc, const std::string& curves,
                     const RunOptions& options) {
  const CurvesDecl* decl = doc.curves(curves);
  if (!decl) throw Error("unknown curve family '" + curves + "'");
  const HomDecl* hom = doc.hom(decl->hom);
  const GroupDecl* group = doc.group(decl->group);

  const auto surface = infer_surface_params(group->presentation);
  if (!surface)
    throw Error("group '" + decl->group + "' is not a standard surface presentation");
  const auto [genus, boundary] = *surface;

  // Clause (a) needs p, which lives on a cube; use the first declared cube
  // built on this hom, when any.
  std::optional<int> expected_count;
  for (const auto& item : doc.items()) {
    if (const CubeDecl* cube = std::get_if<CubeDecl>(&item)) {
      const auto& maps = cube->maps;
      if (std::find(maps.begin(), maps.end(), decl->hom) != maps.end()) {
        expected_count = cube->cube.params().genus - cube->cube.params().page_genus;
        break;
      }
    }
  }

  std::vector<bool> in_kernel, essential;
  std::vector<RelHomologyClass> classes;
  for (const Word& raw : decl->words) {
    const Word curve = raw.cyclically_reduced();
    in_kernel.push_back(kernel_contains(hom->hom, curve));
    bool pure_boundary = true;
    for (int32_t code : curve.codes())
      if (std::abs(code) - 1 < 2 * genus) pure_boundary = false;
    essential.push_back(!curve.empty() && !pure_boundary);
    classes.push_back(rel_homology_class(curve, genus, boundary));
  }
  const bool independent_ok = independent(classes);
  const bool kernel_ok =
      std::all_of(in_kernel.begin(), in_kernel.end(), [](bool b) { return b; });
  const bool essential_ok =
      std::all_of(essential.begin(), essential.end(), [](bool b) { return b; });
  const bool count_ok =
      !expected_count || static_cast<int>(decl->words.size()) == *expected_count;
  const bool all_ok = kernel_ok && essential_ok && independent_ok && count_ok;

  RunResult result;
  result.exit_code = all_ok ? 0 : 1;
  if (options.json) {
    Json out;
    out["command"] = "kernel";
    out["curves"] = curves;
    out["group"] = decl->group;
    out["hom"] = decl->hom;
    out["genus"] = genus;
    out["boundary"] = boundary;
    out["expected_count"] = expected_count ? Json(*expected_count) : Json(nullptr);
    Json family = Json::array();
    for (size_t i = 0; i < decl->words.size(); ++i) {
      Json c;
      c["word"] = decl->words[i].str();
      c["in_kernel"] = static_cast<bool>(in_kernel[i]);
      c["homology"] = classes[i].coefficients;
      c["essential"] = static_cast<bool>(essential[i]);
      family.push_back(std::move(c));
    }
    out["family"] = std::move(family);
    out["independent"] = independent_ok;
    out["count_ok"] = expected_count ? Json(count_ok) : Json(nullptr);
    out["overall"] = all_ok;
    result.output = dump(out);
    return result;
  }
  std::ostringstream out;
  out << "curves " << curves << " in ker(" << decl->hom << "):\n";
  for (size_t i = 0; i < decl->words.size(); ++i) {
    out << "  " << decl->words[i].str() << ": in_kernel=" << yesno(in_kernel[i])
        << " essential=" << yesno(essential[i]) << " homology=(";
    for (size_t j = 0; j < classes[i].coefficients.size(); ++j) {
      if (j) out << ',';
      out << classes[i].coefficients[j];
    }
    out << ")\n";
  }
  out << "independent: " << yesno(independent_ok) << "\n";
  if (expected_count)
    out << "count: " << decl->words.size() << " of " << *expected_count
        << " expected -> " << yesno(count_ok) << "\n";
  result.output = out.str();
  return result;
}

RunResult run_morphism(const Document& doc, const std::string& name,
                       const RunOptions& options) {
  const MorphismDecl* decl = doc.morphism(name);
  if (!decl) throw Error("unknown morphism '" + name + "'");
  const MorphismReport report = verify_morphism(decl->morphism, options.budget);

  RunResult result;
  switch (report.verdict) {
    case Verdict::Certified:
      result.exit_code = 0;
      break;
    case Verdict::Refuted:
      result.exit_code = 1;
      break;
    case Verdict::Inconclusive:
      result.exit_code = 2;
      break;
  }
  if (options.json) {
    Json out;
    out["command"] = "morphism";
    out["name"] = name;
    Json body = json_of(report);
    for (auto& [key, value] : body.items()) out[key] = value;
    result.output = dump(out);
    return result;
  }
  std::ostringstream out;
  out << "morphism " << name << ":\n";
  for (int i = 0; i < 4; ++i)
    out << "  phi" << i << ": "
        << certificate_summary(report.components[static_cast<size_t>(i)]) << "\n";
  out << "  commutes: " << yesno(!report.mismatch.has_value()) << "\n";
  if (report.mismatch)
    out << "  mismatch at f" << report.mismatch->map << " on generator "
        << report.mismatch->generator << ": " << report.mismatch->lhs.str()
        << " != " << report.mismatch->rhs.str() << "\n";
  out << "verdict: " << to_string(report.verdict) << "\n";
  result.output = out.str();
  return result;
}

RunResult run_chi(int genus, int handles, const RunOptions& options) {
  const int chi = euler_characteristic_closed(genus, handles);
  RunResult result;
  if (options.json) {
    Json out;
    out["command"] = "chi";
    out["g"] = genus;
    out["k"] = handles;
    out["chi"] = chi;
    result.output = dump(out);
  } else {
    result.output = std::to_string(chi) + "\n";
  }
  return result;
}

}  // namespace trisect
