#pragma once

// Exact finite-horizon dynamic programming under a known kernel: optimal
// value tables with a greedy policy, and policy evaluation.

#include <span>

#include "vtrlab/core/mdp.hpp"

namespace vtrlab {

struct PlanResult {
    ValueTable values;
    QTable q;
    Policy policy;
};

/// Backward recursion Q_h = r + P V_{h+1}, V_h = max_a Q_h, V_{H+1} = 0.
/// Argmax ties break toward the lowest action index.
PlanResult value_iteration(const TransitionKernel& kernel, std::span<const double> reward,
                           int horizon);

inline PlanResult value_iteration(const EpisodicMdp& mdp) {
    return value_iteration(mdp.true_kernel(), mdp.reward_flat(), mdp.horizon());
}

/// Exact V_h^pi for a fixed policy under the given kernel.
ValueTable policy_value(const TransitionKernel& kernel, std::span<const double> reward,
                        int horizon, const Policy& policy);

inline ValueTable policy_value(const EpisodicMdp& mdp, const Policy& policy) {
    return policy_value(mdp.true_kernel(), mdp.reward_flat(), mdp.horizon(), policy);
}

} // namespace vtrlab
