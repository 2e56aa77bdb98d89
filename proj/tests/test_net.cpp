// Digital-net construction: point sets against hand evaluations, Gray-code
// equivalence, dual-net enumeration, the character-sum property behind the
// Walsh error formula, and the net file format.
#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "checks.hpp"
#include "wafom/errors.hpp"
#include "wafom/net.hpp"
#include "wafom/rng.hpp"
#include "wafom/walsh.hpp"

using namespace wafom;

namespace {

NetParams tiny_net() {
    // s=1, n=2, m=1, single column (1,0)^T: points {0, 1/2}
    return NetParams(1, 2, 1, {BitMatrix::from_rows({"1", "0"})});
}

void test_generate_points() {
    const PointSet p = generate_points(tiny_net());
    CHECK(p.size() == 2 && p.dimension() == 1 && p.digits() == 2);
    CHECK(p.coord(0, 0) == 0);
    CHECK(p.coord(1, 0) == 2); // 1/2 as a 2-digit fixed-point value
    CHECK_CLOSE(p.point(1).coord_real(0), 0.5, 0.0);

    // identity, n = m: the full dyadic grid as a multiset
    for (std::size_t n : {1, 3, 6}) {
        const NetParams grid(1, n, n, {BitMatrix::identity(n)});
        const PointSet g = generate_points(grid);
        std::vector<std::uint64_t> vals;
        for (std::size_t h = 0; h < g.size(); ++h) vals.push_back(g.coord(h, 0));
        std::sort(vals.begin(), vals.end());
        for (std::size_t i = 0; i < vals.size(); ++i) CHECK(vals[i] == i);
    }

    // all-zero matrices collapse every point to the origin
    const NetParams zero(2, 4, 3, {BitMatrix(4, 3), BitMatrix(4, 3)});
    const PointSet z = generate_points(zero);
    for (std::size_t h = 0; h < z.size(); ++h)
        CHECK(z.coord(h, 0) == 0 && z.coord(h, 1) == 0);
}

void test_graycode_equivalence() {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t s = 1 + rng.next() % 3;
        const std::size_t n = 1 + rng.next() % 10;
        const std::size_t m = 1 + rng.next() % std::min<std::size_t>(n, 8);
        const NetParams net = random_net(s, n, m, rng.next());
        const PointSet a = generate_points(net);
        const PointSet b = generate_points_graycode(net);
        CHECK(a.size() == b.size());
        bool same = true;
        for (std::size_t h = 0; h < a.size(); ++h)
            for (std::size_t j = 0; j < s; ++j)
                same = same && a.coord(h, j) == b.coord(h, j);
        CHECK(same);
    }
    const PointSet t = generate_points_graycode(tiny_net());
    CHECK(t.coord(0, 0) == 0 && t.coord(1, 0) == 2);
}

std::set<std::vector<std::uint64_t>> dual_as_set(const NetParams &net) {
    std::set<std::vector<std::uint64_t>> out;
    for (const MultiIndex &k : dual_net(net)) out.insert(k.components);
    return out;
}

void test_dual_net() {
    // hand solve: condition kappa_1 = 0, so k in {0, 2}
    const auto tiny = dual_as_set(tiny_net());
    CHECK(tiny == (std::set<std::vector<std::uint64_t>>{{0}, {2}}));

    // identity: only k = 0
    const NetParams id(1, 4, 4, {BitMatrix::identity(4)});
    CHECK(dual_as_set(id) == (std::set<std::vector<std::uint64_t>>{{0}}));

    // zero matrix: everything below 2^n is dual
    const NetParams zero(1, 3, 2, {BitMatrix(3, 2)});
    CHECK(dual_net(zero).size() == 8);

    // size = 2^(ns - rank) on random nets
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t s = 1 + rng.next() % 3;
        const std::size_t n = 1 + rng.next() % 5;
        const std::size_t m = 1 + rng.next() % std::min<std::size_t>(n, 4);
        const NetParams net = random_net(s, n, m, rng.next());
        const std::size_t r = rank(stacked_dual_matrix(net));
        CHECK(dual_net(net).size() == (std::size_t{1} << (n * s - r)));
    }

    // enumeration budget
    bool threw = false;
    try {
        dual_net(NetParams(1, 26, 1, {BitMatrix(26, 1)}));
    } catch (const BudgetError &) {
        threw = true;
    }
    CHECK(threw);
}

void test_character_property() {
    // sum of wal_k over the net is N on the dual and 0 off it
    SplitMix64 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t s = 1 + rng.next() % 3;
        const std::size_t n = 1 + rng.next() % 6;
        const std::size_t m = 1 + rng.next() % std::min<std::size_t>(n, 4);
        const NetParams net = random_net(s, n, m, rng.next());
        const PointSet pts = generate_points(net);
        const auto dual = dual_as_set(net);

        std::vector<Point> points;
        for (std::size_t h = 0; h < pts.size(); ++h)
            points.push_back(pts.point(h));

        auto char_sum = [&](const MultiIndex &k) {
            long long sum = 0;
            for (const Point &x : points) sum += walsh_function(k, x);
            return sum;
        };

        for (const auto &comps : dual) {
            const MultiIndex k{comps};
            CHECK(char_sum(k) == static_cast<long long>(pts.size()));
        }
        // off-dual indices: exhaust when small, sample otherwise
        const std::uint64_t space = std::uint64_t{1} << (n * s);
        const std::uint64_t tries = std::min<std::uint64_t>(space, 512);
        for (std::uint64_t t = 0; t < tries; ++t) {
            const std::uint64_t x =
                space <= 512 ? t : rng.next() & (space - 1);
            std::vector<std::uint64_t> comps(s);
            for (std::size_t j = 0; j < s; ++j)
                comps[j] = (x >> (j * n)) & ((std::uint64_t{1} << n) - 1);
            if (dual.count(comps)) continue;
            CHECK(char_sum(MultiIndex{comps}) == 0);
        }
    }
}

void test_net_params_validation() {
    bool threw = false;
    try {
        NetParams(1, 2, 3, {BitMatrix(2, 3)}); // n < m
    } catch (const DimensionError &) {
        threw = true;
    }
    CHECK(threw);

    threw = false;
    try {
        BitMatrix empty(2, 0); // m = 0 has no column to build
    } catch (const DimensionError &) {
        threw = true;
    }
    CHECK(threw);

    // smallest legal case: m = 1 gives two points
    CHECK(generate_points(NetParams(1, 1, 1, {BitMatrix::identity(1)})).size() ==
          2);

    threw = false;
    try {
        NetParams(2, 2, 1, {BitMatrix(2, 1)}); // one matrix missing
    } catch (const DimensionError &) {
        threw = true;
    }
    CHECK(threw);
}

void test_file_format() {
    const NetParams net = random_net(3, 5, 3, 2024);
    std::ostringstream out;
    write_net(out, net);
    std::istringstream in(out.str());
    const NetParams back = read_net(in);
    CHECK(back.s == net.s && back.n == net.n && back.m == net.m);
    for (std::size_t j = 0; j < net.s; ++j)
        CHECK(back.matrices[j] == net.matrices[j]);

    auto rejects = [](const std::string &text) {
        std::istringstream bad(text);
        try {
            read_net(bad);
        } catch (const ParseError &) {
            return true;
        }
        return false;
    };
    CHECK(rejects(""));                          // no header
    CHECK(rejects("1 2\n10\n01\n"));             // short header
    CHECK(rejects("1 2 1 9\n1\n0\n"));           // long header
    CHECK(rejects("1 2 1\n1\n"));                // missing row
    CHECK(rejects("1 2 1\n1\n2\n"));             // bad character
    CHECK(rejects("1 2 1\n1\n00\n"));            // wrong row length
    CHECK(rejects("2 2 1\n1\n0\n1\n0\n"));       // missing blank separator
    CHECK(rejects("1 2 1\n1\n0\nextra\n"));      // trailing content
    CHECK(rejects("1 1 2\n11\n"));               // n < m
    CHECK(!rejects("1 2 1\n1\n0\n"));            // minimal valid
    CHECK(!rejects("1 2 1\n1\n0\n\n\n"));        // trailing blanks tolerated
    CHECK(!rejects("2 2 1\n1\n0\n\n1\n1\n"));    // two matrices
}

} // namespace

int main() {
    test_generate_points();
    test_graycode_equivalence();
    test_dual_net();
    test_character_property();
    test_net_params_validation();
    test_file_format();
    return checks::summary("test_net");
}
