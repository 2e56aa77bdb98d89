#include "wafom/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "wafom/constants.hpp"
#include "wafom/errors.hpp"
#include "wafom/exp_error.hpp"
#include "wafom/rng.hpp"

namespace wafom {

namespace {

constexpr unsigned kExperimentChunkBits = 8;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

ExperimentConfig::ExperimentConfig(std::size_t s_, std::size_t m_,
                                   std::uint64_t seed_)
    : s(s_), m(m_), u(Weights::uniform(s_, 2.0)), seed(seed_) {}

void ExperimentConfig::validate() const {
    if (q < 1) throw DomainError("ExperimentConfig: q must be >= 1");
    if (m < 1 || n < m)
        throw DimensionError("ExperimentConfig: requires n >= m >= 1");
    if (u.size() != s)
        throw DimensionError("ExperimentConfig: weight count must equal s");
}

std::uint64_t trial_seed(std::uint64_t experiment_seed, std::size_t trial) {
    return SplitMix64::at(experiment_seed, trial);
}

double ratio_wafom_threshold(unsigned n) {
    return std::ldexp(1.0, -static_cast<int>(n) + 6);
}

std::vector<ExperimentRecord> run_ratio_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    const WafomTables tables(cfg.u, cfg.n, kExperimentChunkBits);
    const double threshold = ratio_wafom_threshold(cfg.n);
    std::vector<ExperimentRecord> records;
    records.reserve(cfg.q);
    for (std::size_t t = 0; t < cfg.q; ++t) {
        const std::uint64_t net_seed = trial_seed(cfg.seed, t);
        const NetParams net = random_net(cfg.s, cfg.n, cfg.m, net_seed);
        const PointSet points = generate_points_graycode(net);
        const double w = tables.evaluate(points);
        if (t == 0) {
            const double w_ref = wafom_pointwise(points, cfg.u, cfg.n);
            if (std::abs(w - w_ref) > 1e-10)
                throw std::logic_error(
                    "run_ratio_experiment: lookup/pointwise cross-check failed");
        }
        const double e = err_exp(points, cfg.u);
        const bool defined = w > threshold;
        records.push_back(ExperimentRecord{
            t, net_seed, w, e,
            defined ? e / w : std::numeric_limits<double>::quiet_NaN(),
            defined});
    }
    return records;
}

void write_experiment_csv(std::ostream &out,
                          const std::vector<ExperimentRecord> &records) {
    out << "trial,seed,wafom,err,ratio,log2_wafom,log2_ratio\n";
    char buf[256];
    for (const ExperimentRecord &r : records) {
        const double log2_wafom =
            r.wafom > 0.0 ? std::log2(r.wafom)
                          : std::numeric_limits<double>::quiet_NaN();
        const double log2_ratio =
            r.ratio_defined && r.ratio > 0.0
                ? std::log2(r.ratio)
                : std::numeric_limits<double>::quiet_NaN();
        std::snprintf(buf, sizeof buf,
                      "%zu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.trial,
                      static_cast<unsigned long long>(r.net_seed), r.wafom,
                      r.err, r.ratio, log2_wafom, log2_ratio);
        out << buf;
    }
}

SearchResult random_search(const ExperimentConfig &cfg) {
    cfg.validate();
    const WafomTables tables(cfg.u, cfg.n, kExperimentChunkBits);
    double best_score = std::numeric_limits<double>::infinity();
    std::size_t best_trial = 0;
    std::uint64_t best_seed = 0;
    for (std::size_t t = 0; t < cfg.q; ++t) {
        const std::uint64_t net_seed = trial_seed(cfg.seed, t);
        const NetParams net = random_net(cfg.s, cfg.n, cfg.m, net_seed);
        const PointSet points = generate_points_graycode(net);
        const double score = cfg.criterion == SearchCriterion::kWafom
                                 ? tables.evaluate(points)
                                 : err_exp(points, cfg.u);
        if (score < best_score) {
            best_score = score;
            best_trial = t;
            best_seed = net_seed;
        }
    }
    return SearchResult{random_net(cfg.s, cfg.n, cfg.m, best_seed), best_score,
                        best_trial, best_seed};
}

BenchResult bench_compare(const ExperimentConfig &cfg, unsigned chunk_bits) {
    cfg.validate();
    BenchResult res{};
    res.s = cfg.s;
    res.m = cfg.m;
    res.q = cfg.q;
    res.n = cfg.n;
    res.chunk_bits = chunk_bits;

    auto t0 = std::chrono::steady_clock::now();
    const WafomTables tables(cfg.u, cfg.n, chunk_bits);
    res.table_build_seconds = seconds_since(t0);

    std::vector<PointSet> nets;
    nets.reserve(cfg.q);
    for (std::size_t t = 0; t < cfg.q; ++t)
        nets.push_back(generate_points_graycode(
            random_net(cfg.s, cfg.n, cfg.m, trial_seed(cfg.seed, t))));

    std::vector<double> w_naive(cfg.q), w_lookup(cfg.q), errs(cfg.q);

    t0 = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < cfg.q; ++t)
        w_naive[t] = wafom_pointwise(nets[t], cfg.u, cfg.n);
    res.naive_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < cfg.q; ++t) w_lookup[t] = tables.evaluate(nets[t]);
    res.lookup_seconds = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < cfg.q; ++t) errs[t] = err_exp(nets[t], cfg.u);
    res.err_seconds = seconds_since(t0);

    res.naive_mults_per_point = cfg.s * cfg.n;
    res.lookup_mults_per_point = tables.lookups_per_point();

    double umax = 0.0;
    for (std::size_t j = 0; j < cfg.u.size(); ++j)
        umax = std::max(umax, cfg.u[j]);
    const double slack = std::ldexp(1.0, -static_cast<int>(cfg.n) + 4) *
                         static_cast<double>(cfg.s) * std::max(1.0, umax);
    const double a = constant_A(cfg.u);
    const double b = constant_B(cfg.u);
    res.max_lookup_naive_diff = 0.0;
    res.sandwich_ok = true;
    for (std::size_t t = 0; t < cfg.q; ++t) {
        res.max_lookup_naive_diff = std::max(
            res.max_lookup_naive_diff, std::abs(w_lookup[t] - w_naive[t]));
        if (errs[t] < b * w_naive[t] - slack || errs[t] > a * w_naive[t] + slack)
            res.sandwich_ok = false;
    }
    return res;
}

} // namespace wafom
