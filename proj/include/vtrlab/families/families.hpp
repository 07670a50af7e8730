#pragma once

// Nested finite transition-model families with a prescribed realizability
// index, plus the separation scan that certifies how far non-realizable
// kernels sit from the truth on a probe set of value functions.

#include <span>
#include <vector>

#include "vtrlab/core/mdp.hpp"
#include "vtrlab/core/rng.hpp"

namespace vtrlab {

/// Ordered union of all families; family m is the prefix of length size(m).
/// The true kernel sits at star_index(), inside family m_star and no smaller
/// family.
class NestedModelFamilies {
public:
    NestedModelFamilies(std::vector<TransitionKernel> kernels, std::vector<int> sizes,
                        int m_star, int star_index, double claimed_delta,
                        std::vector<std::vector<double>> probe_values);

    int num_families() const { return static_cast<int>(sizes_.size()); }
    int size(int m) const { return sizes_[m - 1]; } // m is 1-based
    int union_size() const { return static_cast<int>(kernels_.size()); }
    int m_star() const { return m_star_; }
    int star_index() const { return star_index_; }
    double claimed_delta() const { return claimed_delta_; }

    const TransitionKernel& kernel(int i) const { return kernels_[i]; }
    std::span<const TransitionKernel> family(int m) const {
        return {kernels_.data(), static_cast<std::size_t>(sizes_[m - 1])};
    }
    std::span<const TransitionKernel> all_kernels() const { return kernels_; }

    /// Exact table-equality membership test.
    bool contains(int m, const TransitionKernel& k) const;

    const std::vector<std::vector<double>>& probe_values() const { return probe_values_; }

private:
    std::vector<TransitionKernel> kernels_;
    std::vector<int> sizes_;
    int m_star_;
    int star_index_;
    double claimed_delta_;
    std::vector<std::vector<double>> probe_values_;
};

struct SeparationEntry {
    int kernel_index; // index into the union list; always below family m*-1's end
    int value_index;  // index into the scanned value-function list
    double min_sq_gap; // min over (s,a) of ((PV)(s,a) - (P*V)(s,a))^2
};

struct SeparationReport {
    std::vector<SeparationEntry> entries;
    double delta_hat; // min over entries; +infinity when there is nothing to scan
};

struct FamilyGenOptions {
    double tv_radius = 0.2;        // distractor distance from the true kernel
    long attempt_budget = 100000;  // candidate kernels before giving up
    int max_refine_rounds = 4;     // probe-set fixed-point iterations
};

/// Generate nested families around mdp's true kernel.  Families below m_star
/// hold kernels whose probe separation is at least target_delta; families at
/// and above m_star hold the true kernel plus nearby distractors.  When
/// probe_values is empty the probes default to the optimal value functions
/// (all steps) of every kernel in the largest family.  Throws
/// GenerationError when the attempt budget runs out.
NestedModelFamilies build_nested_families(const EpisodicMdp& mdp, int M, int m_star,
                                          double target_delta, std::vector<int> sizes,
                                          std::vector<std::vector<double>> probe_values,
                                          Rng& rng, FamilyGenOptions options = {});

/// Exhaustive (kernel below m*, value function, state, action) scan.
SeparationReport verify_separation(const NestedModelFamilies& families,
                                   const TransitionKernel& true_kernel,
                                   std::span<const std::vector<double>> value_functions);

/// Single-value-function variant used for the a posteriori check against the
/// value functions a learner actually produced.
double min_sq_gap_below_mstar(const NestedModelFamilies& families,
                              const TransitionKernel& true_kernel,
                              std::span<const double> value);

} // namespace vtrlab
