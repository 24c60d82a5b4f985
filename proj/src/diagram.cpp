#include "trisect/diagram.hpp"

#include <cstdlib>

namespace trisect {

bool kernel_contains(const GroupHom& h, const Word& curve) {
  if (!curve.alphabet().same(h.domain().generators()))
    throw Error("curve word over wrong alphabet in kernel_contains");
  return h.apply_in_basis(curve).empty();
}

RelHomologyClass rel_homology_class(const Word& curve, int genus, int boundary) {
  if (curve.alphabet().size() != 2 * genus + boundary)
    throw Error("curve word is not over a genus-" + std::to_string(genus) + ", " +
                std::to_string(boundary) + "-boundary surface presentation");
  RelHomologyClass out;
  out.coefficients.assign(static_cast<size_t>(2 * genus), 0);
  for (int32_t code : curve.codes()) {
    const int g = std::abs(code) - 1;
    if (g < 2 * genus) out.coefficients[static_cast<size_t>(g)] += code > 0 ? 1 : -1;
  }
  return out;
}

bool independent(const std::vector<RelHomologyClass>& classes) {
  if (classes.empty()) return true;
  const size_t width = classes[0].coefficients.size();
  IntMatrix matrix;
  for (const auto& c : classes) {
    if (c.coefficients.size() != width)
      throw Error("homology classes of unequal length");
    std::vector<BigInt> row;
    row.reserve(width);
    for (long x : c.coefficients) row.emplace_back(x);
    matrix.push_back(std::move(row));
  }
  return matrix_rank(std::move(matrix)) == static_cast<int>(classes.size());
}

std::string DiagramFamilyReport::first_failure() const {
  if (!count_ok) return "count";
  if (!kernel_ok) return "kernel";
  if (!independent_ok) return "independence";
  if (!essential_ok) return "essential";
  return "";
}

DiagramFamilyReport check_diagram_family(const GroupHom& h,
                                         const std::vector<Word>& curves,
                                         const TrisectionParams& params) {
  params.validate();
  DiagramFamilyReport report;
  report.expected_count = params.genus - params.page_genus;
  report.actual_count = static_cast<int>(curves.size());
  report.count_ok = report.actual_count == report.expected_count;

  report.kernel_ok = true;
  report.essential_ok = true;
  for (const Word& raw : curves) {
    const Word curve = raw.cyclically_reduced();
    const bool in_ker = kernel_contains(h, curve);
    report.in_kernel.push_back(in_ker);
    report.kernel_ok = report.kernel_ok && in_ker;

    bool pure_boundary = true;
    for (int32_t code : curve.codes())
      if (std::abs(code) - 1 < 2 * params.genus) pure_boundary = false;
    const bool essential = !curve.empty() && !pure_boundary;
    report.essential.push_back(essential);
    report.essential_ok = report.essential_ok && essential;

    report.classes.push_back(
        rel_homology_class(curve, params.genus, params.boundary));
  }
  report.independent_ok = independent(report.classes);
  return report;
}

}  // namespace trisect
