#include "vtrlab/core/ledger.hpp"

#include <cmath>

#include "vtrlab/core/dp.hpp"
#include "vtrlab/core/error.hpp"

namespace vtrlab {

void RunLedger::append(EpisodeRow row) {
    ++episodes_;
    cum_ += row.instant_regret;
    row.episode = episodes_;
    row.cum_regret = cum_;
    instant_.push_back(row.instant_regret);
    cum_curve_.push_back(cum_);
    if (keep_rows_) rows_.push_back(row);
}

double record_regret(RunLedger& ledger, const EpisodicMdp& mdp, const Policy& policy,
                     EpisodeRow annotations) {
    if (std::isnan(ledger.optimal_value()))
        throw ConfigError("record_regret: optimal value not set on ledger");
    const ValueTable v_pi = policy_value(mdp, policy);
    double gap = ledger.optimal_value() - v_pi.at(0, mdp.initial_state());
    if (gap < 0.0) gap = 0.0; // exact DP gap; negatives can only be rounding
    annotations.instant_regret = gap;
    ledger.append(annotations);
    return gap;
}

} // namespace vtrlab
