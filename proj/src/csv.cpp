#include "gdplab/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace gdplab {

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buffer, ptr);
}

void write_records_csv(std::ostream& out, const SimulationRun& run) {
    out << "year,sector,T,L,N,Y,P,W,nominal_gdp\n";
    for (std::size_t i = 0; i < run.series.records.size(); ++i) {
        const YearRecord& record = run.series.records[i];
        const EquilibriumState& state = run.states[i];
        for (std::size_t a = 0; a < run.series.sectors.size(); ++a) {
            out << record.year << ',' << run.series.sectors[a] << ','
                << format_double(run.tech[i][a]) << ',' << format_double(state.labor[a]) << ','
                << format_double(state.capital_units[a]) << ',' << format_double(state.output[a])
                << ',' << format_double(state.price[a]) << ',' << format_double(record.wage) << ','
                << format_double(record.nominal_gdp) << '\n';
        }
    }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

double parse_field(const std::string& field, std::size_t line_number, const char* column) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::runtime_error("records csv line " + std::to_string(line_number) + ": bad " +
                                 column + " value '" + field + "'");
    return value;
}

} // namespace

RunSeries read_records_csv(std::istream& in) {
    std::string line;
    std::size_t line_number = 0;

    if (!std::getline(in, line)) throw std::runtime_error("records csv is empty");
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "year,sector,T,L,N,Y,P,W,nominal_gdp")
        throw std::runtime_error("records csv line 1: unexpected header '" + line + "'");

    RunSeries series;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::vector<std::string> fields = split_line(line);
        if (fields.size() != 9)
            throw std::runtime_error("records csv line " + std::to_string(line_number) +
                                     ": expected 9 fields, got " + std::to_string(fields.size()));

        const int year = static_cast<int>(parse_field(fields[0], line_number, "year"));
        const std::string& sector = fields[1];

        if (series.records.empty() || series.records.back().year != year) {
            if (!series.records.empty() && year <= series.records.back().year)
                throw std::runtime_error("records csv line " + std::to_string(line_number) +
                                         ": years must increase");
            series.records.push_back(YearRecord{year, {}, {}, 0.0, 0.0});
        }
        YearRecord& record = series.records.back();

        const std::size_t position = record.quantities.size();
        if (series.records.size() == 1) {
            for (const std::string& seen : series.sectors)
                if (seen == sector)
                    throw std::runtime_error("records csv line " + std::to_string(line_number) +
                                             ": duplicate sector '" + sector + "'");
            series.sectors.push_back(sector);
        } else {
            if (position >= series.sectors.size() || series.sectors[position] != sector)
                throw std::runtime_error("records csv line " + std::to_string(line_number) +
                                         ": sector order differs from first year");
        }

        record.quantities.push_back(parse_field(fields[5], line_number, "Y"));
        record.prices.push_back(parse_field(fields[6], line_number, "P"));
        record.wage = parse_field(fields[7], line_number, "W");
        record.nominal_gdp = parse_field(fields[8], line_number, "nominal_gdp");
    }

    if (series.records.empty()) throw std::runtime_error("records csv has no data rows");
    for (const YearRecord& record : series.records)
        if (record.quantities.size() != series.sectors.size())
            throw std::runtime_error("records csv: year " + std::to_string(record.year) +
                                     " is missing sectors");
    return series;
}

void write_growth_csv(std::ostream& out, std::span<const GrowthSeries> series) {
    out << "year,policy,g\n";
    for (const GrowthSeries& one : series) {
        const std::string label = one.policy.label();
        for (const GrowthEntry& entry : one.entries)
            out << entry.year << ',' << label << ',' << format_double(entry.rate) << '\n';
    }
}

} // namespace gdplab
