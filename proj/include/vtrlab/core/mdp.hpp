#pragma once

// Finite episodic MDPs: dense row-stochastic transition tables, tabular
// rewards in [0,1], a fixed initial state, and trajectory sampling.

#include <cstdint>
#include <span>
#include <vector>

#include "vtrlab/core/rng.hpp"

namespace vtrlab {

/// Dense (s,a) -> distribution-over-next-states table.  Rows are normalized
/// at construction; negative entries are rejected.  Row sums stay within
/// 1e-9 of one.
class TransitionKernel {
public:
    TransitionKernel() = default;
    TransitionKernel(int n_states, int n_actions, std::vector<double> rows);

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }

    std::span<const double> row(int s, int a) const {
        return {probs_.data() + static_cast<std::size_t>(s * n_actions_ + a) * n_states_,
                static_cast<std::size_t>(n_states_)};
    }

    /// (P V)(s,a): expectation of V under the row distribution.
    double expected_value(int s, int a, std::span<const double> v) const;

    std::span<const double> flat() const { return probs_; }

    bool operator==(const TransitionKernel& other) const = default;

    static constexpr double kRowSumTolerance = 1e-9;

private:
    int n_states_ = 0;
    int n_actions_ = 0;
    std::vector<double> probs_;
};

class EpisodicMdp {
public:
    EpisodicMdp(int n_states, int n_actions, int horizon, std::vector<double> reward,
                TransitionKernel true_kernel, int initial_state);

    int n_states() const { return n_states_; }
    int n_actions() const { return n_actions_; }
    int horizon() const { return horizon_; }
    int initial_state() const { return initial_state_; }
    const TransitionKernel& true_kernel() const { return true_kernel_; }

    double reward(int s, int a) const {
        return reward_[static_cast<std::size_t>(s) * n_actions_ + a];
    }
    std::span<const double> reward_flat() const { return reward_; }

private:
    int n_states_;
    int n_actions_;
    int horizon_;
    std::vector<double> reward_; // [s*A + a]
    TransitionKernel true_kernel_;
    int initial_state_;
};

/// Nonstationary deterministic policy: one action per (step, state),
/// steps indexed 0..H-1.
class Policy {
public:
    Policy() = default;
    Policy(int horizon, int n_states) : horizon_(horizon), n_states_(n_states),
        actions_(static_cast<std::size_t>(horizon) * n_states, 0) {}
    Policy(int horizon, int n_states, std::vector<int> actions, int n_actions);

    int action(int h, int s) const {
        return actions_[static_cast<std::size_t>(h) * n_states_ + s];
    }
    void set_action(int h, int s, int a) {
        actions_[static_cast<std::size_t>(h) * n_states_ + s] = a;
    }
    int horizon() const { return horizon_; }
    int n_states() const { return n_states_; }

    bool operator==(const Policy& other) const = default;

private:
    int horizon_ = 0;
    int n_states_ = 0;
    std::vector<int> actions_;
};

/// State values per (step, state); step index runs 0..H with row H the
/// all-zero terminal row.
class ValueTable {
public:
    ValueTable() = default;
    ValueTable(int horizon, int n_states)
        : horizon_(horizon), n_states_(n_states),
          values_(static_cast<std::size_t>(horizon + 1) * n_states, 0.0) {}

    double at(int h, int s) const {
        return values_[static_cast<std::size_t>(h) * n_states_ + s];
    }
    void set(int h, int s, double v) {
        values_[static_cast<std::size_t>(h) * n_states_ + s] = v;
    }
    std::span<const double> step(int h) const {
        return {values_.data() + static_cast<std::size_t>(h) * n_states_,
                static_cast<std::size_t>(n_states_)};
    }
    std::span<double> step_mut(int h) {
        return {values_.data() + static_cast<std::size_t>(h) * n_states_,
                static_cast<std::size_t>(n_states_)};
    }
    int horizon() const { return horizon_; }
    int n_states() const { return n_states_; }

private:
    int horizon_ = 0;
    int n_states_ = 0;
    std::vector<double> values_;
};

/// Action values per (step, state, action), steps 0..H-1.
class QTable {
public:
    QTable() = default;
    QTable(int horizon, int n_states, int n_actions)
        : horizon_(horizon), n_states_(n_states), n_actions_(n_actions),
          values_(static_cast<std::size_t>(horizon) * n_states * n_actions, 0.0) {}

    double at(int h, int s, int a) const {
        return values_[(static_cast<std::size_t>(h) * n_states_ + s) * n_actions_ + a];
    }
    void set(int h, int s, int a, double v) {
        values_[(static_cast<std::size_t>(h) * n_states_ + s) * n_actions_ + a] = v;
    }

private:
    int horizon_ = 0;
    int n_states_ = 0;
    int n_actions_ = 0;
    std::vector<double> values_;
};

struct TrajectoryStep {
    int state;
    int action;
    double reward;
    int next_state;
};

struct Trajectory {
    std::int64_t episode_index = 0;
    std::vector<TrajectoryStep> steps;
};

/// Roll one episode under the true kernel.  Deterministic given the rng
/// stream state; consumes exactly H uniforms.
Trajectory sample_episode(const EpisodicMdp& mdp, const Policy& policy, Rng& rng,
                          std::int64_t episode_index = 0);

} // namespace vtrlab
