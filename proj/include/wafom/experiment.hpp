// Random-net experiments: the ratio study of err/W over uniformly random
// generating matrices, random search for low-merit nets, and the timing
// comparison of the merit evaluators.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wafom/merit.hpp"
#include "wafom/net.hpp"
#include "wafom/walsh.hpp"

namespace wafom {

enum class SearchCriterion { kWafom, kErrExp };

struct ExperimentConfig {
    std::size_t s;
    std::size_t m;
    unsigned n = 32;
    Weights u; // defaults to u_j = 2 for all j
    std::size_t q = 1024;
    std::uint64_t seed = 0;
    SearchCriterion criterion = SearchCriterion::kWafom;

    ExperimentConfig(std::size_t s, std::size_t m, std::uint64_t seed);

    void validate() const;
};

struct ExperimentRecord {
    std::size_t trial;
    std::uint64_t net_seed; // reproduces the net in isolation
    double wafom;
    double err;
    double ratio; // err / wafom; NaN when not defined
    bool ratio_defined;
};

// Matrix seed of a single trial: the trial-th output of a SplitMix64 stream
// started at the experiment seed.
std::uint64_t trial_seed(std::uint64_t experiment_seed, std::size_t trial);

// Ratios below this wafom threshold are marked undefined instead of
// dividing a near-zero truncated merit.
double ratio_wafom_threshold(unsigned n);

// q records, deterministic given the seed. WAFOM is evaluated through the
// lookup tables (cross-checked against the plain per-point product on the
// first trial); the error through direct point summation.
std::vector<ExperimentRecord> run_ratio_experiment(const ExperimentConfig &cfg);

// Header: trial,seed,wafom,err,ratio,log2_wafom,log2_ratio.
// Values carry 17 significant digits; undefined entries print as nan.
void write_experiment_csv(std::ostream &out,
                          const std::vector<ExperimentRecord> &records);

struct SearchResult {
    NetParams best;
    double best_score;
    std::size_t best_trial;
    std::uint64_t best_seed;
};

// Scores q random candidates by cfg.criterion and returns the minimizer;
// ties go to the lower trial index.
SearchResult random_search(const ExperimentConfig &cfg);

struct BenchResult {
    std::size_t s, m, q;
    unsigned n, chunk_bits;
    double naive_seconds;       // wafom via the per-point product
    double lookup_seconds;      // wafom via tables (excluding build)
    double err_seconds;         // exponential-error evaluation
    double table_build_seconds; // per-u precomputation, reported separately
    std::size_t naive_mults_per_point;
    std::size_t lookup_mults_per_point;
    double max_lookup_naive_diff; // consistency across the q nets
    bool sandwich_ok;             // B*W <= err <= A*W within truncation slack
};

// Times the three evaluators over the same q random nets.
BenchResult bench_compare(const ExperimentConfig &cfg, unsigned chunk_bits);

} // namespace wafom
