#pragma once

// JSON, CSV (RFC 4180) and plain-text renderings of verification reports.

#include "poincare/verify.hpp"

#include <string>

namespace poincare {

enum class ReportFormat { Json, Csv, Text };

/// "json", "csv" or "text"; throws ValidationError otherwise.
ReportFormat parse_format(const std::string& s);

/// { suite, config, records: [...], summary: {passed, failed, flagged} }.
std::string render_json(const VerificationReport& report);
/// One row per record; indices and point as "name=value" lists joined by ';'.
std::string render_csv(const VerificationReport& report);
std::string render_text(const VerificationReport& report);
std::string render(const VerificationReport& report, ReportFormat format);

/// Known analytic explanation of a flagged record, empty when there is none.
std::string flagged_note(const std::string& record_name);

/// Quote a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(const std::string& s);
/// Shortest round-trip decimal form of a double ("nan"/"inf" when not finite).
std::string format_double(double v);

}  // namespace poincare
