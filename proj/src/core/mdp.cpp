#include "vtrlab/core/mdp.hpp"

#include <cmath>
#include <string>

#include "vtrlab/core/error.hpp"
#include "vtrlab/vec/ops.hpp"

namespace vtrlab {

TransitionKernel::TransitionKernel(int n_states, int n_actions, std::vector<double> rows)
    : n_states_(n_states), n_actions_(n_actions), probs_(std::move(rows)) {
    if (n_states <= 0 || n_actions <= 0)
        throw ConfigError("TransitionKernel: state/action counts must be positive");
    const std::size_t expected =
        static_cast<std::size_t>(n_states) * n_actions * n_states;
    if (probs_.size() != expected)
        throw ConfigError("TransitionKernel: expected " + std::to_string(expected) +
                          " entries, got " + std::to_string(probs_.size()));
    for (int s = 0; s < n_states_; ++s) {
        for (int a = 0; a < n_actions_; ++a) {
            double* r = probs_.data() + static_cast<std::size_t>(s * n_actions_ + a) * n_states_;
            double total = 0.0;
            for (int s2 = 0; s2 < n_states_; ++s2) {
                if (r[s2] < 0.0)
                    throw ConfigError("TransitionKernel: negative probability at (s=" +
                                      std::to_string(s) + ", a=" + std::to_string(a) + ")");
                total += r[s2];
            }
            if (total <= 0.0)
                throw ConfigError("TransitionKernel: zero row at (s=" + std::to_string(s) +
                                  ", a=" + std::to_string(a) + ")");
            if (std::abs(total - 1.0) > kRowSumTolerance) {
                for (int s2 = 0; s2 < n_states_; ++s2) r[s2] /= total;
            }
        }
    }
}

double TransitionKernel::expected_value(int s, int a, std::span<const double> v) const {
    return vec::dot(row(s, a), v);
}

EpisodicMdp::EpisodicMdp(int n_states, int n_actions, int horizon, std::vector<double> reward,
                         TransitionKernel true_kernel, int initial_state)
    : n_states_(n_states), n_actions_(n_actions), horizon_(horizon),
      reward_(std::move(reward)), true_kernel_(std::move(true_kernel)),
      initial_state_(initial_state) {
    if (n_states <= 0 || n_actions <= 0 || horizon <= 0)
        throw ConfigError("EpisodicMdp: sizes must be positive");
    if (initial_state < 0 || initial_state >= n_states)
        throw ConfigError("EpisodicMdp: initial state out of range");
    if (reward_.size() != static_cast<std::size_t>(n_states) * n_actions)
        throw ConfigError("EpisodicMdp: reward table size mismatch");
    for (double r : reward_)
        if (r < 0.0 || r > 1.0) throw ConfigError("EpisodicMdp: rewards must lie in [0,1]");
    if (true_kernel_.n_states() != n_states || true_kernel_.n_actions() != n_actions)
        throw ConfigError("EpisodicMdp: kernel shape mismatch");
}

Policy::Policy(int horizon, int n_states, std::vector<int> actions, int n_actions)
    : horizon_(horizon), n_states_(n_states), actions_(std::move(actions)) {
    if (actions_.size() != static_cast<std::size_t>(horizon) * n_states)
        throw ConfigError("Policy: action table size mismatch");
    for (int a : actions_)
        if (a < 0 || a >= n_actions) throw ConfigError("Policy: action index out of range");
}

Trajectory sample_episode(const EpisodicMdp& mdp, const Policy& policy, Rng& rng,
                          std::int64_t episode_index) {
    Trajectory traj;
    traj.episode_index = episode_index;
    traj.steps.reserve(mdp.horizon());
    int s = mdp.initial_state();
    for (int h = 0; h < mdp.horizon(); ++h) {
        const int a = policy.action(h, s);
        const int s2 = rng.categorical(mdp.true_kernel().row(s, a));
        traj.steps.push_back({s, a, mdp.reward(s, a), s2});
        s = s2;
    }
    return traj;
}

} // namespace vtrlab
