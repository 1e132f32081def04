#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/identities.hpp"

namespace mzv {

enum class ReportFormat { json, csv, table };

std::optional<ReportFormat> format_from_name(std::string_view name);

// One line per report. json is a single object with keys
// id, params, residual, tolerance, pass; params keeps the order
// l, n, r, part, D, index, x, y, z and omits what is unset.
std::string render_report(const IdentityReport& r, ReportFormat f);

// Trailing summary: count, pass/fail split, max residual.
std::string render_summary(const std::vector<IdentityReport>& rs,
                           ReportFormat f);

// Full dump: header (csv/table), one line per report, then the summary.
void write_reports(std::ostream& os, const std::vector<IdentityReport>& rs,
                   ReportFormat f);

}  // namespace mzv
