#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace neofuzzy {

/// Root mean square of `errors`. Throws std::invalid_argument when empty.
double rmse(std::span<const double> errors);

/// Exponentially weighted mean squared error with bias correction.
///
/// update() folds a residual in as ew <- decay*ew + (1-decay)*residual^2;
/// value() divides the raw accumulator by 1 - decay^samples so early reads
/// are unbiased (the first residual reads back as exactly residual^2).
class RunningError {
public:
    /// decay must lie in (0,1).
    explicit RunningError(double decay);

    void update(double residual);

    /// Bias-corrected estimate; 0 before the first sample.
    double value() const;

    double raw() const noexcept { return raw_; }
    double decay() const noexcept { return decay_; }
    double decay_pow() const noexcept { return decay_pow_; }
    std::int64_t samples() const noexcept { return samples_; }

    /// Rebuilds a tracker from persisted state (snapshot restore).
    static RunningError restore(double decay, double raw, std::int64_t samples, double decay_pow);

private:
    double decay_;
    double raw_ = 0.0;
    double decay_pow_ = 1.0;  // decay^samples, kept incrementally
    std::int64_t samples_ = 0;
};

/// One cascade growth event: the sample index at which a layer was added
/// and the resulting stack depth.
struct GrowthEvent {
    std::int64_t sample_index;
    std::int64_t depth;
};

/// Train/test error summary in the shape of the paper's comparison tables.
/// RMSE values are on the normalized [0,1] scale; the *_denorm twins are in
/// original series units. wall_seconds covers the training pass only and is
/// deliberately excluded from determinism comparisons.
struct EvalReport {
    double rmse_train = 0.0;
    double rmse_test = 0.0;
    double rmse_train_denorm = 0.0;
    double rmse_test_denorm = 0.0;
    double rmse_train_online = 0.0;  // streamed one-step-ahead RMSE of the training pass
    std::int64_t n_train = 0;
    std::int64_t n_test = 0;
    double wall_seconds = 0.0;
    std::int64_t parameter_count = 0;
    std::vector<GrowthEvent> growth_log;
};

/// Report serialization: structured text (JSON) and an aligned terminal table.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& text);
std::string render_table(const EvalReport& report);

}  // namespace neofuzzy
