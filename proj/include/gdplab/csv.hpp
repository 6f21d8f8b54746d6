#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "gdplab/measurement.hpp"
#include "gdplab/paths.hpp"

namespace gdplab {

// Shortest representation that parses back to the same double; '.' decimal,
// no thousands separators. Keeps CSV output byte-deterministic.
std::string format_double(double value);

// Schema: year,sector,T,L,N,Y,P,W,nominal_gdp — one row per sector-year.
void write_records_csv(std::ostream& out, const SimulationRun& run);

// Re-ingest the measurement-relevant columns of a records CSV.
// Throws std::runtime_error with a line diagnostic on malformed input.
RunSeries read_records_csv(std::istream& in);

// Schema: year,policy,g.
void write_growth_csv(std::ostream& out, std::span<const GrowthSeries> series);

} // namespace gdplab
