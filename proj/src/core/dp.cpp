#include "vtrlab/core/dp.hpp"

#include "vtrlab/vec/ops.hpp"

namespace vtrlab {

PlanResult value_iteration(const TransitionKernel& kernel, std::span<const double> reward,
                           int horizon) {
    const int S = kernel.n_states();
    const int A = kernel.n_actions();
    PlanResult out{ValueTable(horizon, S), QTable(horizon, S, A), Policy(horizon, S)};
    for (int h = horizon - 1; h >= 0; --h) {
        const auto v_next = out.values.step(h + 1);
        for (int s = 0; s < S; ++s) {
            double best = -1.0;
            int best_a = 0;
            for (int a = 0; a < A; ++a) {
                const double q = reward[static_cast<std::size_t>(s) * A + a] +
                                 vec::dot(kernel.row(s, a), v_next);
                out.q.set(h, s, a, q);
                if (q > best) {
                    best = q;
                    best_a = a;
                }
            }
            out.values.set(h, s, best);
            out.policy.set_action(h, s, best_a);
        }
    }
    return out;
}

ValueTable policy_value(const TransitionKernel& kernel, std::span<const double> reward,
                        int horizon, const Policy& policy) {
    const int S = kernel.n_states();
    const int A = kernel.n_actions();
    ValueTable values(horizon, S);
    for (int h = horizon - 1; h >= 0; --h) {
        const auto v_next = values.step(h + 1);
        for (int s = 0; s < S; ++s) {
            const int a = policy.action(h, s);
            values.set(h, s, reward[static_cast<std::size_t>(s) * A + a] +
                                 vec::dot(kernel.row(s, a), v_next));
        }
    }
    return values;
}

} // namespace vtrlab
