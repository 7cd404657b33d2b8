#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sph/clustering.hpp"

using sph::DistanceMatrix;

namespace {

DistanceMatrix matrix(std::vector<std::vector<double>> e) {
    DistanceMatrix m;
    for (std::size_t i = 0; i < e.size(); ++i) m.labels.push_back("p" + std::to_string(i));
    m.entries = std::move(e);
    return m;
}

// Random matrix with planted blocks: within <= 1, across >= 10.
DistanceMatrix planted(std::mt19937_64& rng, const std::vector<int>& block) {
    std::uniform_real_distribution<double> within(0.0, 1.0), across(10.0, 20.0);
    const std::size_t n = block.size();
    std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e[i][j] = e[j][i] = block[i] == block[j] ? within(rng) : across(rng);
    return matrix(e);
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("two points") {
    auto d = sph::average_linkage(matrix({{0, 3}, {3, 0}}));
    REQUIRE(d.merges.size() == 1);
    CHECK(d.merges[0].height == 3.0);
    CHECK(d.merges[0].size == 2);
}

TEST_CASE("three points") {
    auto d = sph::average_linkage(matrix({{0, 1, 10}, {1, 0, 10}, {10, 10, 0}}));
    REQUIRE(d.merges.size() == 2);
    CHECK(d.merges[0].a == 0);
    CHECK(d.merges[0].b == 1);
    CHECK(d.merges[0].height == 1.0);
    CHECK(d.merges[1].a == 2);
    CHECK(d.merges[1].b == 3);
    CHECK(d.merges[1].height == 10.0);
    CHECK(sph::cut(d, 2) == std::vector<int>{0, 0, 1});
    CHECK(sph::cut(d, 3) == std::vector<int>{0, 1, 2});
    CHECK(sph::cut(d, 1) == std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(sph::cut(d, 0), sph::Error);
    CHECK_THROWS_AS(sph::cut(d, 4), sph::Error);
}

TEST_CASE("two tight pairs merge at the mean cross distance") {
    std::vector<std::vector<double>> e{{0, 1, 7, 9}, {1, 0, 8, 12}, {7, 8, 0, 2}, {9, 12, 2, 0}};
    auto d = sph::average_linkage(matrix(e));
    CHECK(d.merges[0].height == 1.0);
    CHECK(d.merges[1].height == 2.0);
    CHECK(d.merges[2].height == oracle::mean_cross(e, {0, 1}, {2, 3}));
    CHECK(d.merges[2].size == 4);
}

TEST_CASE("ties break on smallest leaves") {
    auto d = sph::average_linkage(matrix({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
    CHECK(d.merges[0].a == 0);
    CHECK(d.merges[0].b == 1);
    // {0,1} against 2 has key (0, 2), ahead of 2 against 3.
    CHECK(d.merges[1].a == 2);
    CHECK(d.merges[1].b == 4);
    CHECK(d.warnings.empty());
}

TEST_CASE("property: heights nondecreasing and cuts refine") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 12;
        std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) e[i][j] = e[j][i] = u(rng);
        auto d = sph::average_linkage(matrix(e));
        REQUIRE(d.merges.size() == n - 1);
        for (std::size_t i = 1; i < d.merges.size(); ++i) CHECK(d.merges[i].height >= d.merges[i - 1].height);
        CHECK(d.merges.back().size == n);
        for (std::size_t k = 1; k < n; ++k) {
            auto coarse = sph::cut(d, k), fine = sph::cut(d, k + 1);
            CHECK(*std::max_element(coarse.begin(), coarse.end()) == static_cast<int>(k) - 1);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (fine[i] == fine[j]) CHECK(coarse[i] == coarse[j]);
        }
    }
}

TEST_CASE("property: permuting inputs permutes the assignment") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 3 + rng() % 9;
        std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) e[i][j] = e[j][i] = u(rng);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<double>> pe(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) pe[i][j] = e[perm[i]][perm[j]];
        const std::size_t k = 1 + rng() % n;
        auto base = sph::cut(sph::average_linkage(matrix(e)), k);
        auto permuted = sph::cut(sph::average_linkage(matrix(pe)), k);
        std::vector<int> pulled(n);
        for (std::size_t i = 0; i < n; ++i) pulled[perm[i]] = permuted[i];
        CHECK(same_partition(base, pulled));
    }
}

TEST_CASE("property: planted blocks are recovered") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> block;
        for (int b = 0; b < 3; ++b)
            for (std::size_t i = 0, sz = 1 + rng() % 5; i < sz; ++i) block.push_back(b);
        std::shuffle(block.begin(), block.end(), rng);
        CHECK(same_partition(sph::cut(sph::average_linkage(planted(rng, block)), 3), block));
    }
}

TEST_CASE("dendrogram and assignment files") {
    auto d = sph::average_linkage(matrix({{0, 1, 10}, {1, 0, 10}, {10, 10, 0}}));
    std::stringstream ss;
    sph::write_dendrogram(ss, d);
    CHECK(ss.str() == "leaves 3\n0 p0\n1 p1\n2 p2\nmerges 2\n0 1 1 2\n2 3 10 3\n");
    auto back = sph::read_dendrogram(ss);
    CHECK(back.labels == d.labels);
    CHECK(sph::cut(back, 2) == sph::cut(d, 2));

    std::istringstream bad("leaves 2\n0 a\n1 b\nmerges 1\n0 5 1 2\n");
    CHECK_THROWS_AS(sph::read_dendrogram(bad), sph::Error);

    std::ostringstream as;
    sph::write_assignment(as, {"a", "b"}, {0, 1});
    CHECK(as.str() == "label,cluster\na,0\nb,1\n");
}

TEST_CASE("too few items") {
    CHECK_THROWS_AS(sph::average_linkage(matrix({{0}})), sph::Error);
}
