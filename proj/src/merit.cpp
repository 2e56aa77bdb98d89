#include "wafom/merit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "wafom/errors.hpp"
#include "wafom/summation.hpp"

namespace wafom {

double wafom_dual_sum(const NetParams &params, const Weights &u) {
    if (u.size() != params.s)
        throw DimensionError("wafom_dual_sum: weight count must equal s");
    const std::vector<MultiIndex> dual = dual_net(params);
    std::vector<std::pair<double, double>> terms; // (mu, 2^-mu)
    terms.reserve(dual.size());
    for (const MultiIndex &k : dual) {
        bool zero = true;
        for (auto c : k.components) zero &= (c == 0);
        if (zero) continue;
        terms.emplace_back(mu_weight(k, u), two_pow_neg_mu(k, u));
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto &a, const auto &b) { return a.first > b.first; });
    NeumaierSum sum;
    for (const auto &[mu, weight] : terms) sum.add(weight);
    return sum.value();
}

namespace {

unsigned truncation_shift(const PointSet &points, unsigned digits) {
    if (digits < 1 || digits > points.digits())
        throw DimensionError(
            "wafom evaluation: digits must be in [1, point precision]");
    return points.digits() - digits;
}

// Per-digit factors 1 +- u_j 2^-(i+1), laid out as [j][i][bit].
std::vector<double> digit_factors(const Weights &u, unsigned digits) {
    std::vector<double> f(u.size() * digits * 2);
    for (std::size_t j = 0; j < u.size(); ++j) {
        for (unsigned i = 1; i <= digits; ++i) {
            const double w = std::ldexp(u[j], -static_cast<int>(i) - 1);
            f[(j * digits + i - 1) * 2 + 0] = 1.0 + w;
            f[(j * digits + i - 1) * 2 + 1] = 1.0 - w;
        }
    }
    return f;
}

} // namespace

double wafom_pointwise(const PointSet &points, const Weights &u,
                       unsigned digits) {
    if (u.size() != points.dimension())
        throw DimensionError("wafom_pointwise: weight count must equal s");
    const unsigned shift = truncation_shift(points, digits);
    const std::vector<double> factors = digit_factors(u, digits);
    const std::size_t s = points.dimension();
    const std::size_t n_points = points.size();
    NeumaierSum sum;
    for (std::size_t h = 0; h < n_points; ++h) {
        const auto row = points.row(h);
        double prod = 1.0;
        for (std::size_t j = 0; j < s; ++j) {
            const std::uint64_t y = row[j] >> shift;
            const double *f = &factors[j * digits * 2];
            for (unsigned i = 0; i < digits; ++i)
                prod *= f[i * 2 + ((y >> (digits - 1 - i)) & 1u)];
        }
        sum.add(prod - 1.0);
    }
    return sum.value() / static_cast<double>(n_points);
}

WafomTables::WafomTables(const Weights &u, unsigned digits, unsigned chunk_bits)
    : s_(u.size()), digits_(digits), chunk_bits_(chunk_bits) {
    if (chunk_bits < 1 || chunk_bits > 16)
        throw DomainError("WafomTables: chunk_bits must be in [1, 16]");
    if (digits < 1)
        throw DomainError("WafomTables: digits must be >= 1");

    // Chunk c covers digit positions lo..hi; the last chunk may be short.
    for (unsigned lo = 1; lo <= digits; lo += chunk_bits) {
        const unsigned hi = std::min(lo + chunk_bits - 1, digits);
        const unsigned width = hi - lo + 1;
        chunks_.push_back(Chunk{digits - hi,
                                (std::uint64_t{1} << width) - 1,
                                std::size_t{1} << width});
    }

    std::size_t total = 0;
    for (const Chunk &c : chunks_) total += c.entries;
    table_.assign(s_ * total, 0.0);

    double *entry = table_.data();
    for (std::size_t j = 0; j < s_; ++j) {
        unsigned lo = 1;
        for (const Chunk &c : chunks_) {
            const unsigned hi = lo + static_cast<unsigned>(
                                         std::popcount(c.mask)) - 1;
            for (std::uint64_t pattern = 0; pattern < c.entries; ++pattern) {
                double prod = 1.0;
                for (unsigned i = lo; i <= hi; ++i) {
                    const double w = std::ldexp(u[j], -static_cast<int>(i) - 1);
                    const bool bit = (pattern >> (hi - i)) & 1u;
                    prod *= bit ? 1.0 - w : 1.0 + w;
                }
                *entry++ = prod;
            }
            lo = hi + 1;
        }
    }
}

double WafomTables::evaluate(const PointSet &points) const {
    if (points.dimension() != s_)
        throw DimensionError("WafomTables: point set dimension mismatch");
    const unsigned shift = truncation_shift(points, digits_);
    const std::size_t n_points = points.size();

    // Per-coordinate starting offset of each chunk table.
    std::size_t per_coord = 0;
    for (const Chunk &c : chunks_) per_coord += c.entries;

    NeumaierSum sum;
    for (std::size_t h = 0; h < n_points; ++h) {
        const auto row = points.row(h);
        double prod = 1.0;
        const double *coord_table = table_.data();
        for (std::size_t j = 0; j < s_; ++j) {
            const std::uint64_t y = row[j] >> shift;
            const double *t = coord_table;
            for (const Chunk &c : chunks_) {
                prod *= t[(y >> c.shift) & c.mask];
                t += c.entries;
            }
            coord_table += per_coord;
        }
        sum.add(prod - 1.0);
    }
    return sum.value() / static_cast<double>(n_points);
}

double wafom_lookup(const PointSet &points, const Weights &u, unsigned digits,
                    unsigned chunk_bits) {
    if (u.size() != points.dimension())
        throw DimensionError("wafom_lookup: weight count must equal s");
    return WafomTables(u, digits, chunk_bits).evaluate(points);
}

} // namespace wafom
