#pragma once

// Versioned JSON documents. Schemas are described in docs/formats.md.

#include <string>

#include "atdelfi/analysis.hpp"
#include "atdelfi/card.hpp"
#include "atdelfi/metrics.hpp"
#include "atdelfi/simulator.hpp"

namespace atdelfi::io {

inline constexpr std::string_view kGraphSchema = "atdelfi.graph/1";
inline constexpr std::string_view kAnalysisSchema = "atdelfi.analysis/1";
inline constexpr std::string_view kTraceSchema = "atdelfi.trace/1";
inline constexpr std::string_view kCardSchema = "atdelfi.card/1";
inline constexpr std::string_view kReportSchema = "atdelfi.report/1";
inline constexpr std::string_view kStatsSchema = "atdelfi.stats/1";

std::string graph_json(const graph::MechanicGraph& g);
std::string analysis_json(const analysis::AnalysisResult& a);
std::string trace_json(const sim::EventTrace& t);
/// Inverse of trace_json. Throws std::runtime_error on schema mismatch.
sim::EventTrace trace_from_json(const std::string& text);
std::string card_json(const card::CardDocument& c);
std::string stats_json(const metrics::StatsRecord& s, const std::string& game);
std::string report_json(const metrics::CorpusReport& r);

}  // namespace atdelfi::io
