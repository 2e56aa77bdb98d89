#include "wafom/net.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wafom/errors.hpp"

namespace wafom {

NetParams::NetParams(std::size_t s_, std::size_t n_, std::size_t m_,
                     std::vector<BitMatrix> matrices_)
    : s(s_), n(n_), m(m_), matrices(std::move(matrices_)) {
    if (s < 1) throw DimensionError("NetParams: s must be >= 1");
    if (m < 1 || n < m) throw DimensionError("NetParams: requires n >= m >= 1");
    if (n > 64) throw DimensionError("NetParams: n is limited to 64 digits");
    if (matrices.size() != s)
        throw DimensionError("NetParams: expected s generating matrices");
    for (const auto &c : matrices)
        if (c.rows() != n || c.cols() != m)
            throw DimensionError("NetParams: all matrices must be n x m");
}

double Point::coord_real(std::size_t j) const {
    return std::ldexp(static_cast<double>(coords[j]), -static_cast<int>(digits));
}

PointSet::PointSet(std::size_t s, unsigned digits,
                   std::vector<std::uint64_t> flat)
    : s_(s), digits_(digits), flat_(std::move(flat)) {
    if (s_ == 0 || flat_.size() % s_ != 0)
        throw DimensionError("PointSet: coordinate count must be N*s");
}

Point PointSet::point(std::size_t h) const {
    const auto r = row(h);
    return Point{{r.begin(), r.end()}, digits_};
}

NetParams random_net(std::size_t s, std::size_t n, std::size_t m,
                     std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<BitMatrix> mats;
    mats.reserve(s);
    for (std::size_t j = 0; j < s; ++j) mats.push_back(random_matrix(n, m, rng));
    return NetParams(s, n, m, std::move(mats));
}

namespace {

// Column l of C_j repacked as the fixed-point increment it contributes to
// y: row i lands at bit (n - i).
std::vector<std::uint64_t> fixed_point_columns(const BitMatrix &c) {
    const std::size_t n = c.rows();
    std::vector<std::uint64_t> cols(c.cols(), 0);
    for (std::size_t l = 0; l < c.cols(); ++l)
        for (std::size_t r = 0; r < n; ++r)
            if (c.get(r, l)) cols[l] |= std::uint64_t{1} << (n - 1 - r);
    return cols;
}

} // namespace

namespace {

std::size_t point_count(const NetParams &params) {
    if (params.m >= 40)
        throw BudgetError("point set of 2^" + std::to_string(params.m) +
                          " points exceeds the generation budget");
    return std::size_t{1} << params.m;
}

} // namespace

PointSet generate_points(const NetParams &params) {
    const std::size_t nn = point_count(params);
    std::vector<std::uint64_t> flat(nn * params.s);
    for (std::size_t h = 0; h < nn; ++h) {
        BitVector hv(params.m);
        for (std::size_t i = 0; i < params.m; ++i)
            hv.set(i, (h >> i) & 1u);
        for (std::size_t j = 0; j < params.s; ++j) {
            const BitVector y = row_vec_mul(hv, params.matrices[j]);
            std::uint64_t fixed = 0;
            for (std::size_t i = 0; i < params.n; ++i)
                if (y.get(i)) fixed |= std::uint64_t{1} << (params.n - 1 - i);
            flat[h * params.s + j] = fixed;
        }
    }
    return PointSet(params.s, static_cast<unsigned>(params.n), std::move(flat));
}

PointSet generate_points_graycode(const NetParams &params) {
    const std::size_t nn = point_count(params);
    std::vector<std::uint64_t> flat(nn * params.s);
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(params.s);
    for (const auto &c : params.matrices)
        cols.push_back(fixed_point_columns(c));

    std::vector<std::uint64_t> y(params.s, 0);
    for (std::size_t t = 0;; ++t) {
        const std::size_t h = t ^ (t >> 1); // Gray index: true point index
        for (std::size_t j = 0; j < params.s; ++j) flat[h * params.s + j] = y[j];
        if (t + 1 == nn) break;
        const unsigned flipped = std::countr_zero(t + 1);
        for (std::size_t j = 0; j < params.s; ++j) y[j] ^= cols[j][flipped];
    }
    return PointSet(params.s, static_cast<unsigned>(params.n), std::move(flat));
}

BitMatrix stacked_dual_matrix(const NetParams &params) {
    // Column j*n + d of the stack is row d of C_j: the dual condition reads
    // the s digit vectors through the transposed matrices.
    BitMatrix stacked(params.m, params.n * params.s);
    for (std::size_t j = 0; j < params.s; ++j)
        for (std::size_t d = 0; d < params.n; ++d)
            for (std::size_t r = 0; r < params.m; ++r)
                stacked.set(r, j * params.n + d, params.matrices[j].get(d, r));
    return stacked;
}

std::vector<MultiIndex> dual_net(const NetParams &params) {
    const BitMatrix stacked = stacked_dual_matrix(params);
    const std::vector<BitVector> basis = kernel_basis(stacked);
    if (basis.size() > kDualBudgetBits) {
        std::ostringstream msg;
        msg << "dual_net: kernel dimension " << basis.size()
            << " exceeds the enumeration budget of " << kDualBudgetBits
            << " bits";
        throw BudgetError(msg.str());
    }

    const std::size_t count = std::size_t{1} << basis.size();
    std::vector<MultiIndex> result;
    result.reserve(count);

    const std::size_t n = params.n;
    BitVector cur(params.n * params.s);
    for (std::size_t t = 0;; ++t) {
        MultiIndex k;
        k.components.resize(params.s, 0);
        for (std::size_t j = 0; j < params.s; ++j) {
            std::uint64_t kj = 0;
            for (std::size_t d = 0; d < n; ++d)
                if (cur.get(j * n + d)) kj |= std::uint64_t{1} << d;
            k.components[j] = kj;
        }
        result.push_back(std::move(k));
        if (t + 1 == count) break;
        cur ^= basis[std::countr_zero(t + 1)];
    }
    return result;
}

void write_net(std::ostream &out, const NetParams &params) {
    out << params.s << ' ' << params.n << ' ' << params.m << '\n';
    for (std::size_t j = 0; j < params.s; ++j) {
        if (j > 0) out << '\n';
        for (std::size_t r = 0; r < params.n; ++r) {
            for (std::size_t c = 0; c < params.m; ++c)
                out << (params.matrices[j].get(r, c) ? '1' : '0');
            out << '\n';
        }
    }
}

void write_net_file(const std::filesystem::path &path,
                    const NetParams &params) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    write_net(out, params);
}

namespace {

std::string next_line(std::istream &in, bool &eof) {
    std::string line;
    if (!std::getline(in, line)) {
        eof = true;
        return {};
    }
    eof = false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace

NetParams read_net(std::istream &in) {
    bool eof = false;
    const std::string header = next_line(in, eof);
    if (eof) throw ParseError("net file: missing header line");
    std::istringstream hs(header);
    std::size_t s = 0, n = 0, m = 0;
    std::string extra;
    if (!(hs >> s >> n >> m) || (hs >> extra))
        throw ParseError("net file: header must be exactly \"s n m\"");

    std::vector<BitMatrix> mats;
    for (std::size_t j = 0; j < s; ++j) {
        if (j > 0) {
            const std::string blank = next_line(in, eof);
            if (eof || !blank.empty())
                throw ParseError("net file: expected blank line between matrices");
        }
        std::vector<std::string> rows;
        rows.reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            const std::string line = next_line(in, eof);
            if (eof)
                throw ParseError("net file: truncated matrix " +
                                 std::to_string(j + 1));
            if (line.size() != m)
                throw ParseError("net file: matrix " + std::to_string(j + 1) +
                                 " row " + std::to_string(r + 1) + " has " +
                                 std::to_string(line.size()) +
                                 " characters, expected " + std::to_string(m));
            for (char ch : line)
                if (ch != '0' && ch != '1')
                    throw ParseError("net file: entries must be '0' or '1'");
            rows.push_back(line);
        }
        try {
            mats.push_back(BitMatrix::from_rows(rows));
        } catch (const std::invalid_argument &e) {
            throw ParseError(std::string("net file: ") + e.what());
        }
    }
    // trailing blank lines are tolerated; anything else is an error
    for (;;) {
        const std::string line = next_line(in, eof);
        if (eof) break;
        if (!line.empty()) throw ParseError("net file: trailing content");
    }
    try {
        return NetParams(s, n, m, std::move(mats));
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("net file: ") + e.what());
    }
}

NetParams read_net_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return read_net(in);
}

} // namespace wafom
