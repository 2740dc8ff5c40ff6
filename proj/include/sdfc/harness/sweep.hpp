#ifndef SDFC_HARNESS_SWEEP_HPP
#define SDFC_HARNESS_SWEEP_HPP

#include "sdfc/analysis/metric_table.hpp"
#include "sdfc/harness/run.hpp"

#include <functional>
#include <json.hpp>

namespace sdfc {

struct RunSpec {
    ExperimentConfig cfg;  // resolved, lr set
    std::uint64_t seed = 0;
    std::string label;
};

// Every (LR, seed) pair of cfg's grid.
std::vector<RunSpec> lr_sweep_specs(const ExperimentConfig& cfg);
// Every (threshold, seed) pair at cfg.lr.
std::vector<RunSpec> early_stop_specs(const ExperimentConfig& cfg);
// Every (grid value, LR, seed) triple.
std::vector<RunSpec> grid_specs(const ExperimentConfig& cfg);
// One run per seed at cfg.lr.
std::vector<RunSpec> single_specs(const ExperimentConfig& cfg);

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const RunRecord&)>;

// Runs specs on up to `jobs` worker threads. Results come back in spec order.
std::vector<RunRecord> run_all(const std::vector<RunSpec>& specs, const RunData& data, int jobs,
                               const ProgressFn& progress = {});

std::vector<MetricRow> to_rows(const RunRecord& rec);
std::vector<MetricRow> to_rows(const std::vector<RunRecord>& recs);

// Rows sorted by (method, paradigm, lr, seed, metric, task).
void sort_rows(std::vector<MetricRow>& rows);

struct WindowSummary {
    double mean = 0.0;
    std::size_t start = 0;  // index of the first LR in the best window
};

// Maximum over contiguous windows of the window-mean. Throws
// std::invalid_argument when fewer values than `window` are given.
WindowSummary best_window(const std::vector<double>& values, std::size_t window);

// Per (method, paradigm) group: per-LR mean/std of final accuracy over seeds
// (failed runs excluded and counted), the best-window summary when the grid
// is long enough, the peak, the mean cumulative-accuracy series per LR and
// the mean of any other task-averaged metric.
nlohmann::json summarize(const std::vector<MetricRow>& rows, std::size_t window);

} // namespace sdfc

#endif // SDFC_HARNESS_SWEEP_HPP
