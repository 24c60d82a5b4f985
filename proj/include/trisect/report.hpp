#pragma once

#include <json.hpp>

#include <string>

#include "trisect/dsl.hpp"

namespace trisect {

// Reports serialize with stable key order and no floating point, so equal
// inputs produce byte-identical output regardless of --jobs.
using Json = nlohmann::ordered_json;

Json json_of(const AbelianInvariants& invariants);
Json json_of(const TietzeMove& move);
Json json_of(const Certificate& certificate);
Json json_of(const Presentation& presentation);
Json json_of(const TrisectionCube& cube, const VerificationReport& report, long budget);
Json json_of(const MorphismReport& report);

struct RunOptions {
  long budget = 10000;
  int jobs = 1;
  bool json = false;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Full axiom report for a declared trisection.
/// Exit code: 0 = Pass, 1 = Fail, 2 = Inconclusive.
RunResult run_verify(const Document& doc, const std::string& cube, const RunOptions& options);

RunResult run_pushout(const Document& doc, const std::string& left,
                      const std::string& right, const RunOptions& options);
RunResult run_abelianize(const Document& doc, const std::string& group,
                         const RunOptions& options);

/// DOT rendering of the folded graph of a hom's rewritten images.
RunResult run_fold(const Document& doc, const std::string& hom, const RunOptions& options);

/// Kernel membership, homology vectors and independence for a curve family;
/// exit code 0 when every reported clause holds.
RunResult run_kernel(const Document& doc, const std::string& curves,
                     const RunOptions& options);

/// Exit code mirrors the verdict like run_verify.
RunResult run_morphism(const Document& doc, const std::string& name,
                       const RunOptions& options);

RunResult run_chi(int genus, int handles, const RunOptions& options);

}  // namespace trisect
