#include "permdes/report_json.hpp"

#include <cstdio>
#include <cstdlib>

namespace permdes {

std::string decimal12(double value)
{
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

double round12(double value)
{
    return std::strtod(decimal12(value).c_str(), nullptr);
}

namespace {

template <typename T>
nlohmann::json optional_value(const std::optional<T>& value)
{
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const StrengthReport& report)
{
    nlohmann::json moments = nlohmann::json::array();
    for (const auto& m : report.moments) {
        moments.push_back({{"i", m.i}, {"design", to_fraction(m.design)}, {"space", to_fraction(m.space)}});
    }
    return {{"n", report.n},
            {"size", report.size},
            {"strength", report.strength},
            {"moments", moments},
            {"is_one_design", report.is_one_design}};
}

nlohmann::json to_json(const BoundReport& report)
{
    return {{"n", report.n},
            {"size", report.size},
            {"strength", report.strength},
            {"transitivity", report.transitivity},
            {"s", optional_value(report.s)},
            {"bounds",
             {{"thm1", optional_value(report.thm1)},
              {"thm2", optional_value(report.thm2)},
              {"cw", optional_value(report.cw)},
              {"krasikov_floor", optional_value(report.krasikov_floor)}}},
            {"tightest", optional_value(report.tightest)},
            {"exact_radius", optional_value(report.exact_radius)},
            {"radius_mode", optional_value(report.radius_mode)},
            {"witness", report.witness ? nlohmann::json(report.witness->to_string()) : nlohmann::json(nullptr)},
            {"caveats", report.caveats},
            {"violations", report.violations}};
}

nlohmann::json to_json(const RadiusResult& result, std::optional<double> seconds)
{
    nlohmann::json out{{"radius", result.radius},
                       {"witness", result.witness.to_string()},
                       {"enumerated", result.enumerated},
                       {"mode", to_string(result.mode)},
                       {"notes", result.notes}};
    if (seconds) {
        out["seconds"] = round12(*seconds);
    }
    return out;
}

nlohmann::json to_json(const AnnihilationReport& report)
{
    return {{"n", report.n},
            {"t", report.t},
            {"s", report.s},
            {"trials", report.trials},
            {"seed", report.seed},
            {"root", round12(static_cast<double>(report.root))},
            {"max_abs_residual", round12(static_cast<double>(report.max_abs_residual))},
            {"tolerance", round12(static_cast<double>(report.tolerance))},
            {"worst_point", report.worst_point.to_string()},
            {"passed", report.passed}};
}

nlohmann::json to_json(const OrthogonalityReport& report)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"r", e.r}, {"s", e.s}, {"value", to_fraction(e.value)}});
    }
    return {{"n", report.n}, {"rmax", report.rmax}, {"passed", true}, {"entries", entries}};
}

}  // namespace permdes
