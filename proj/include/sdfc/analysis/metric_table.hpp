#ifndef SDFC_ANALYSIS_METRIC_TABLE_HPP
#define SDFC_ANALYSIS_METRIC_TABLE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sdfc {

// One long-format result row. task 0 = not task specific.
struct MetricRow {
    std::string method;
    std::string paradigm;
    double lr = 0.0;
    std::uint64_t seed = 0;
    int task = 0;
    std::string metric;
    std::optional<double> value;  // written as NA when empty
};

inline constexpr const char* kMetricCsvHeader = "method,paradigm,lr,seed,task,metric,value";

// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

void write_metric_csv(std::ostream& out, const std::vector<MetricRow>& rows);
void write_metric_csv(const std::filesystem::path& path, const std::vector<MetricRow>& rows);
std::vector<MetricRow> read_metric_csv(const std::filesystem::path& path);

} // namespace sdfc

#endif // SDFC_ANALYSIS_METRIC_TABLE_HPP
