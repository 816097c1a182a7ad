#pragma once

// ReportDocument construction and re-verification.

#include <string>
#include <string_view>

#include "toric/corpus.hpp"
#include "toric/klyachko.hpp"
#include "toric/verifier.hpp"
#include "toric_cli/documents.hpp"

namespace toric::cli {

inline constexpr std::string_view kToolName = "toric-check";
std::string_view tool_version();

/// {"tool", "version", "command"}.
json report_header(std::string_view command);

/// [{"weight": [..], "basis": [[..], ..]}, ..]; bases are primitive
/// integer rows of the canonical echelon basis.
json certificate_to_json(const DecompositionCertificate& certificate);
DecompositionCertificate certificate_from_json(const Cone& cone, const json& j);

struct Verdict {
  json report;
  bool affirmative = false;
};

Verdict smoothness_report(const Document& doc);
Verdict local_freeness_report(const Document& doc);
Verdict agreement_report(const Document& doc);

/// The ray must be a ray of the document.
json sections_report(const Document& doc, const LatticeVector& ray, const Weight& weight);

json sweep_report(const SweepSummary& summary, const GeneratorConfig& config);

/// Re-derives every verdict in a report produced by this tool and re-runs
/// verify_certificate on every certificate. Throws DocumentError when the
/// report cannot be read.
Verdict recheck_report(const json& report);

}  // namespace toric::cli
