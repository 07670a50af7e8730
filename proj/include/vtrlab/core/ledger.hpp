#pragma once

// Episode-indexed run record: pseudo-regret accounting plus the per-epoch
// rows the adaptive algorithms emit (class selection, active coordinates,
// norm estimates) and simulation-only coverage counters.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "vtrlab/core/mdp.hpp"

namespace vtrlab {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class Phase : int { main = 0, support = 1 };

struct EpisodeRow {
    std::int64_t episode = 0; // 1-based, global within the run
    int epoch = -1;
    Phase phase = Phase::main;
    int selected_class = 0;          // 1-based; 0 when not applicable
    std::uint64_t active_coords = 0; // bitmask; 0 when not applicable
    double b_estimate = kNaN;
    double instant_regret = 0.0;
    double cum_regret = 0.0;
    double beta = kNaN;
    double lambda_min = kNaN;
};

/// Per-epoch model-selection row (general nested families).
struct SelectionRecord {
    int epoch = 0;
    std::vector<double> statistics; // T_m, one per class; empty at epoch 1
    double gamma = kNaN;
    int selected = 0; // 1-based class index
    bool fallback_anomaly = false;
};

/// Per-epoch support-estimation row (dimension-adaptive linear algorithm).
struct DimEpochRecord {
    int epoch = 0;
    std::uint64_t active_coords = 0;
    std::int64_t regret_episodes = 0;
    std::int64_t support_episodes = 0;
    double sup_norm_error = kNaN; // ||theta_hat - theta*||_inf at epoch start
    bool threshold_anomaly = false;
};

/// Per-epoch norm-refinement row (norm-adaptive linear algorithm).
struct NormEpochRecord {
    int epoch = 0;
    std::int64_t episodes = 0;
    double delta_i = kNaN;
    double b_current = kNaN;
    double b_next = kNaN;
    bool theta_star_in_ellipsoid = false;
};

class RunLedger {
public:
    explicit RunLedger(bool keep_rows = true) : keep_rows_(keep_rows) {}

    void set_optimal_value(double v_star_1) { v_star_1_ = v_star_1; }
    double optimal_value() const { return v_star_1_; }

    /// Append one episode.  `row.instant_regret` is taken as given; the
    /// cumulative column is maintained here.
    void append(EpisodeRow row);

    std::int64_t episodes() const { return episodes_; }
    double cumulative_regret() const { return cum_; }
    std::span<const double> instant_regret() const { return instant_; }
    std::span<const double> cumulative_curve() const { return cum_curve_; }
    const std::vector<EpisodeRow>& rows() const { return rows_; }
    bool keeps_rows() const { return keep_rows_; }

    std::vector<SelectionRecord> selections;
    std::vector<DimEpochRecord> dim_epochs;
    std::vector<NormEpochRecord> norm_epochs;

    // Simulation-only diagnostics, filled when the runner knows the truth.
    std::int64_t truth_member_episodes = 0; // episodes with P* (or theta*) in the set
    bool truth_member_all = true;
    double realized_delta_hat = std::numeric_limits<double>::infinity();

    void note_truth_membership(bool member) {
        if (member)
            ++truth_member_episodes;
        else
            truth_member_all = false;
    }

private:
    bool keep_rows_;
    std::int64_t episodes_ = 0;
    double cum_ = 0.0;
    double v_star_1_ = kNaN;
    std::vector<double> instant_;
    std::vector<double> cum_curve_;
    std::vector<EpisodeRow> rows_;
};

/// Pseudo-regret bookkeeping: evaluates the played policy exactly under the
/// true kernel and appends V*_1(s_1) - V_1^pi(s_1) (clamped at zero against
/// rounding) together with the caller's row annotations.  The optimal value
/// must have been stored with set_optimal_value first.
double record_regret(RunLedger& ledger, const EpisodicMdp& mdp, const Policy& policy,
                     EpisodeRow annotations = {});

} // namespace vtrlab
