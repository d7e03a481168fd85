#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "wfc/analysis.hpp"
#include "wfc/pipeline.hpp"

namespace wfc {

// Pinned numeric formatting for text reports ("%.12g").
std::string format_double(double v);

// word<TAB>count<TAB>relfreq, no header.
void write_frequency_tsv(std::ostream& out, const FrequencyTable& table);
nlohmann::json frequency_json(const FrequencyTable& table);

// label<TAB>top<TAB>word<TAB>count<TAB>relfreq and
// label<TAB>distinct<TAB>word<TAB>score records.
void write_compare_tsv(std::ostream& out, const FrequencyTable& table,
                       const DistinctivenessReport& report);
nlohmann::json compare_json(const FrequencyTable& table, const DistinctivenessReport& report);

// timing<TAB>stage<TAB>nanoseconds, one line per stage plus total.
void write_timings_tsv(std::ostream& out, const StageTimings& timings);

}  // namespace wfc
