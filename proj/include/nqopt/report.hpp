#pragma once

#include <string>
#include <vector>

#include "nqopt/harness.hpp"

namespace nqopt {

struct ReportDocument {
  std::string text;                   // aligned tables for the terminal
  std::string csv;                    // same numbers, machine readable
  std::vector<std::string> warnings;  // missing cells and the like
};

// Renders the benchmark report from final-phase summaries: one overview grid
// of algorithms x sizes (min cost / min NFE per cell) followed by a per-size
// breakdown of min/avg/max for both metrics. Cells with no data are left
// blank and reported in warnings.
ReportDocument render_report(const std::vector<SummaryRow>& summaries);

}  // namespace nqopt
