#ifndef LPTERM_REPORT_HPP
#define LPTERM_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lpterm/analyzer.hpp"

namespace lpterm {

/// `query<TAB>VERDICT<TAB>nodes<TAB>cuts`. Reports that stopped on an error
/// carry FLOUNDERING or RESOURCE_EXCEEDED in the verdict column.
std::string tsv_line(const AnalysisReport& r);

/// Clause labels in the abort window use `p` for naming.
nlohmann::json to_json(const AnalysisReport& r, const Program& p);
nlohmann::json to_json(const std::vector<AnalysisReport>& rs, const Program& p);

}  // namespace lpterm

#endif  // LPTERM_REPORT_HPP
