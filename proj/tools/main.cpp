// Command-line front end: generate, evaluate, and search digital nets, run
// the random-net ratio experiment, and benchmark the merit evaluators.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 enumeration
// budget exceeded.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wafom/constants.hpp"
#include "wafom/errors.hpp"
#include "wafom/exp_error.hpp"
#include "wafom/experiment.hpp"
#include "wafom/merit.hpp"
#include "wafom/net.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_double_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size())
            throw wafom::DomainError("malformed number in list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw wafom::DomainError("empty list");
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string &text) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(text)) {
        if (v < 1 || v != static_cast<std::size_t>(v))
            throw wafom::DomainError("expected positive integers: " + text);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

wafom::Weights make_weights(std::size_t s, const std::string &u_list,
                            double u_all) {
    if (!u_list.empty()) {
        auto values = parse_double_list(u_list);
        if (values.size() != s)
            throw wafom::DimensionError("--u must list exactly s weights");
        return wafom::Weights(values);
    }
    return wafom::Weights::uniform(s, u_all);
}

int cmd_gen(std::size_t s, std::size_t n, std::size_t m, std::uint64_t seed,
            const std::string &out) {
    const wafom::NetParams net = wafom::random_net(s, n, m, seed);
    wafom::write_net_file(out, net);
    std::cout << "wrote " << out << " (s=" << s << " n=" << n << " m=" << m
              << " seed=" << seed << ")\n";
    return kExitOk;
}

int cmd_eval(const std::string &net_path, const std::string &u_list,
             double u_all, unsigned digits, const std::string &method,
             unsigned chunk_bits) {
    const wafom::NetParams net = wafom::read_net_file(net_path);
    const wafom::Weights u = make_weights(net.s, u_list, u_all);
    if (digits == 0) digits = static_cast<unsigned>(net.n);
    if (digits > net.n)
        throw wafom::DimensionError(
            "--digits may not exceed the net's precision n");

    const wafom::PointSet points = wafom::generate_points_graycode(net);
    double w = 0.0;
    if (method == "naive")
        w = wafom::wafom_pointwise(points, u, digits);
    else if (method == "lookup")
        w = wafom::wafom_lookup(points, u, digits, chunk_bits);
    else if (method == "dual")
        w = wafom::wafom_dual_sum(net, u);
    else
        throw wafom::DomainError("--method must be naive, lookup or dual");

    const double err = wafom::err_exp(points, u);
    const double a = wafom::constant_A(u);
    const double b = wafom::constant_B(u);
    std::cout << "wafom = " << fmt(w) << "\n";
    std::cout << "err = " << fmt(err) << "\n";
    std::cout << "err_normalized = " << fmt(err / a) << "\n";
    std::cout << "const_A = " << fmt(a) << "\n";
    std::cout << "const_B = " << fmt(b) << "\n";
    std::cout << "ratio = " << fmt(err / w) << "\n";
    return kExitOk;
}

int cmd_experiment(std::size_t s, std::size_t m, unsigned n,
                   const std::string &u_list, double u_all, std::size_t q,
                   std::uint64_t seed, const std::string &out) {
    wafom::ExperimentConfig cfg(s, m, seed);
    cfg.n = n;
    cfg.q = q;
    cfg.u = make_weights(s, u_list, u_all);
    const auto records = wafom::run_ratio_experiment(cfg);

    std::ofstream file(out);
    if (!file) throw wafom::ParseError("cannot open " + out + " for writing");
    wafom::write_experiment_csv(file, records);

    std::vector<double> ratios;
    for (const auto &r : records)
        if (r.ratio_defined) ratios.push_back(r.ratio);
    std::sort(ratios.begin(), ratios.end());
    std::cout << "records = " << records.size() << "\n";
    std::cout << "ratios_defined = " << ratios.size() << "\n";
    if (!ratios.empty()) {
        std::cout << "ratio_min = " << fmt(ratios.front()) << "\n";
        std::cout << "ratio_median = " << fmt(ratios[ratios.size() / 2]) << "\n";
        std::cout << "ratio_max = " << fmt(ratios.back()) << "\n";
    }
    std::cout << "const_B = " << fmt(wafom::constant_B(cfg.u)) << "\n";
    std::cout << "const_A = " << fmt(wafom::constant_A(cfg.u)) << "\n";
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_search(std::size_t s, std::size_t m, unsigned n,
               const std::string &u_list, double u_all, std::size_t q,
               std::uint64_t seed, const std::string &criterion,
               const std::string &out) {
    wafom::ExperimentConfig cfg(s, m, seed);
    cfg.n = n;
    cfg.q = q;
    cfg.u = make_weights(s, u_list, u_all);
    if (criterion == "wafom")
        cfg.criterion = wafom::SearchCriterion::kWafom;
    else if (criterion == "err")
        cfg.criterion = wafom::SearchCriterion::kErrExp;
    else
        throw wafom::DomainError("--criterion must be wafom or err");

    const wafom::SearchResult result = wafom::random_search(cfg);
    wafom::write_net_file(out, result.best);

    const wafom::PointSet points = wafom::generate_points_graycode(result.best);
    std::cout << "best_trial = " << result.best_trial << "\n";
    std::cout << "best_seed = " << result.best_seed << "\n";
    std::cout << "best_wafom = " << fmt(wafom::wafom_pointwise(points, cfg.u, n))
              << "\n";
    std::cout << "best_err = " << fmt(wafom::err_exp(points, cfg.u)) << "\n";
    std::cout << "wrote " << out << "\n";
    return kExitOk;
}

int cmd_bench(const std::string &s_list, std::size_t m, unsigned n,
              std::size_t q, unsigned chunk_bits, double u_all,
              std::uint64_t seed) {
    const auto dims = parse_size_list(s_list);
    std::vector<wafom::BenchResult> rows;
    for (std::size_t s : dims) {
        wafom::ExperimentConfig cfg(s, m, seed);
        cfg.n = n;
        cfg.q = q;
        cfg.u = wafom::Weights::uniform(s, u_all);
        rows.push_back(wafom::bench_compare(cfg, chunk_bits));
    }

    std::printf("%4s %10s %10s %10s %12s %12s %10s %10s\n", "s", "naive[s]",
                "lookup[s]", "err[s]", "naive mul/pt", "lookup mul/pt",
                "build[s]", "consistent");
    for (const auto &r : rows)
        std::printf("%4zu %10.4f %10.4f %10.4f %12zu %12zu %10.6f %10s\n", r.s,
                    r.naive_seconds, r.lookup_seconds, r.err_seconds,
                    r.naive_mults_per_point, r.lookup_mults_per_point,
                    r.table_build_seconds,
                    (r.max_lookup_naive_diff <= 1e-10 && r.sandwich_ok)
                        ? "yes"
                        : "NO");

    std::printf("\ns,m,n,q,chunk_bits,naive_seconds,lookup_seconds,err_seconds,"
                "table_build_seconds,naive_mults_per_point,"
                "lookup_mults_per_point\n");
    for (const auto &r : rows)
        std::printf("%zu,%zu,%u,%zu,%u,%.17g,%.17g,%.17g,%.17g,%zu,%zu\n", r.s,
                    r.m, r.n, r.q, r.chunk_bits, r.naive_seconds,
                    r.lookup_seconds, r.err_seconds, r.table_build_seconds,
                    r.naive_mults_per_point, r.lookup_mults_per_point);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"digital nets over GF(2): WAFOM merit, exponential-function "
                 "integration error, and their sandwich bounds"};
    app.require_subcommand(1);

    // gen
    auto *gen = app.add_subcommand("gen", "write a random net file");
    std::size_t g_s = 0, g_n = 0, g_m = 0;
    std::uint64_t g_seed = 0;
    std::string g_out;
    gen->add_option("--s", g_s, "dimension")->required();
    gen->add_option("--n", g_n, "digit precision (matrix rows)")->required();
    gen->add_option("--m", g_m, "log2 of point count (matrix cols)")->required();
    gen->add_option("--seed", g_seed, "PRNG seed")->required();
    gen->add_option("--out", g_out, "output net file")->required();

    // eval
    auto *eval = app.add_subcommand("eval", "evaluate a net file");
    std::string e_net, e_u_list, e_method = "naive";
    double e_u_all = 2.0;
    unsigned e_digits = 0, e_chunk = 8;
    eval->add_option("--net", e_net, "net file")->required();
    eval->add_option("--u", e_u_list, "comma-separated weights (s values)");
    eval->add_option("--u-all", e_u_all, "uniform weight (default 2)");
    eval->add_option("--digits", e_digits,
                     "evaluation precision (default: the net's n)");
    eval->add_option("--method", e_method, "naive | lookup | dual");
    eval->add_option("--chunk-bits", e_chunk, "lookup chunk width");

    // experiment
    auto *exp = app.add_subcommand(
        "experiment", "ratio study over uniformly random nets, CSV output");
    std::size_t x_s = 0, x_m = 0, x_q = 1024;
    unsigned x_n = 32;
    std::uint64_t x_seed = 0;
    std::string x_u_list, x_out;
    double x_u_all = 2.0;
    exp->add_option("--s", x_s, "dimension")->required();
    exp->add_option("--m", x_m, "log2 of point count")->required();
    exp->add_option("--n", x_n, "digit precision (default 32)");
    exp->add_option("--u", x_u_list, "comma-separated weights");
    exp->add_option("--u-all", x_u_all, "uniform weight (default 2)");
    exp->add_option("--q", x_q, "trial count (default 1024)");
    exp->add_option("--seed", x_seed, "experiment seed")->required();
    exp->add_option("--out", x_out, "output CSV")->required();

    // search
    auto *search =
        app.add_subcommand("search", "random search for a low-merit net");
    std::size_t r_s = 0, r_m = 0, r_q = 256;
    unsigned r_n = 32;
    std::uint64_t r_seed = 0;
    std::string r_u_list, r_out, r_criterion = "wafom";
    double r_u_all = 2.0;
    search->add_option("--s", r_s, "dimension")->required();
    search->add_option("--m", r_m, "log2 of point count")->required();
    search->add_option("--n", r_n, "digit precision (default 32)");
    search->add_option("--u", r_u_list, "comma-separated weights");
    search->add_option("--u-all", r_u_all, "uniform weight (default 2)");
    search->add_option("--q", r_q, "trial count (default 256)");
    search->add_option("--seed", r_seed, "search seed")->required();
    search->add_option("--criterion", r_criterion, "wafom | err");
    search->add_option("--out", r_out, "output net file")->required();

    // bench
    auto *bench =
        app.add_subcommand("bench", "time the merit evaluators across s");
    std::string b_s_list = "2,4,8,16";
    std::size_t b_m = 12, b_q = 4;
    unsigned b_n = 32, b_chunk = 8;
    double b_u_all = 2.0;
    std::uint64_t b_seed = 1;
    bench->add_option("--s-list", b_s_list, "comma-separated dimensions");
    bench->add_option("--m", b_m, "log2 of point count (default 12)");
    bench->add_option("--n", b_n, "digit precision (default 32)");
    bench->add_option("--q", b_q, "nets per dimension (default 4)");
    bench->add_option("--chunk-bits", b_chunk, "lookup chunk width (default 8)");
    bench->add_option("--u-all", b_u_all, "uniform weight (default 2)");
    bench->add_option("--seed", b_seed, "net seed (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(g_s, g_n, g_m, g_seed, g_out);
        if (eval->parsed())
            return cmd_eval(e_net, e_u_list, e_u_all, e_digits, e_method,
                            e_chunk);
        if (exp->parsed())
            return cmd_experiment(x_s, x_m, x_n, x_u_list, x_u_all, x_q, x_seed,
                                  x_out);
        if (search->parsed())
            return cmd_search(r_s, r_m, r_n, r_u_list, r_u_all, r_q, r_seed,
                              r_criterion, r_out);
        if (bench->parsed())
            return cmd_bench(b_s_list, b_m, b_n, b_q, b_chunk, b_u_all, b_seed);
    } catch (const wafom::ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const wafom::BudgetError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
