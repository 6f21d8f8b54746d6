#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gdplab {

// Thrown when the economy cannot satisfy the per-capita subsistence minima:
// the subsistence labor shares sum to >= 1 and no feasible allocation exists.
class InfeasibleSubsistence : public std::runtime_error {
public:
    InfeasibleSubsistence(double share_sum, std::optional<int> year = std::nullopt)
        : std::runtime_error(make_message(share_sum, year)),
          share_sum_(share_sum),
          year_(year) {}

    double share_sum() const noexcept { return share_sum_; }
    std::optional<int> year() const noexcept { return year_; }

private:
    static std::string make_message(double share_sum, std::optional<int> year) {
        std::string msg = "infeasible subsistence: shares sum to " + std::to_string(share_sum) + " >= 1";
        if (year) msg += " at year " + std::to_string(*year);
        return msg;
    }

    double share_sum_;
    std::optional<int> year_;
};

class MissingYear : public std::out_of_range {
public:
    explicit MissingYear(int year, const std::string& what = "year not present in series")
        : std::out_of_range(what + ": " + std::to_string(year)), year_(year) {}

    int year() const noexcept { return year_; }

private:
    int year_;
};

// A base-year policy resolved to a year outside the series.
class MissingBaseYear : public MissingYear {
public:
    explicit MissingBaseYear(int year)
        : MissingYear(year, "base year not present in series") {}
};

class SectorMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace gdplab
