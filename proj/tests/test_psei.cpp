#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdint>

#include "doctest.h"
#include "optint/bench.hpp"
#include "optint/oracle.hpp"
#include "optint/psei.hpp"

using namespace optint;
using i64 = std::int64_t;

namespace {

PairSequence<i64> plain(std::vector<i64> hits) {
    std::vector<NumberPair<i64>> pairs;
    for (const i64 h : hits) pairs.push_back({h, 1});
    return PairSequence<i64>(std::move(pairs));
}

// exhaustive best-sum interval with a length floor
template <class T>
SumInterval<T> brute_sum(const PrefixSums<T>& p, index_t min_len) {
    bool have = false;
    SumInterval<T> best;
    for (index_t i = 1; i <= p.size(); ++i) {
        for (index_t j = i + min_len - 1; j <= p.size(); ++j) {
            const T sum = p.ph(j) - p.ph(i - 1);
            if (!have || sum > best.sum) {
                best = SumInterval<T>{IndexInterval{i, j}, sum};
                have = true;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("best sum with a length floor") {
    const PrefixSums<i64> p(plain({1, -2, 3}));
    const auto a = max_hit_min_length(p, 2);
    CHECK(a.interval == IndexInterval{1, 3});
    CHECK(a.sum == 2);

    const PrefixSums<i64> single(plain({5}));
    const auto b = max_hit_min_length(single, 1);
    CHECK(b.interval == IndexInterval{1, 1});
    CHECK(b.sum == 5);

    const PrefixSums<i64> forced(plain({-1, -2}));
    const auto c = max_hit_min_length(forced, 2);
    CHECK(c.interval == IndexInterval{1, 2});
    CHECK(c.sum == -3);

    CHECK_THROWS_AS(max_hit_min_length(p, 0), std::invalid_argument);
    CHECK_THROWS_AS(max_hit_min_length(p, 4), std::invalid_argument);

    bench::Rng rng(51001);
    for (int iter = 0; iter < 2000; ++iter) {
        const index_t n = rng.range(1, 40);
        const auto d = bench::random_plain(n, rng, -10, 10);
        const PrefixSums<i64> pp(d);
        const index_t bound = rng.range(1, n);
        CHECK(max_hit_min_length(pp, bound).sum == brute_sum(pp, bound).sum);
    }
}

TEST_CASE("positive-sum eccentricity search") {
    const PrefixSums<i64> p(plain({1, -2, 3}));
    const auto a = max_ecc_positive_case(p, 2);
    CHECK(a.interval == IndexInterval{1, 3});
    CHECK(a.hit == 2);
    CHECK(a.length == 3);

    const PrefixSums<i64> two(plain({1, 1}));
    const auto b = max_ecc_positive_case(two, 1);
    CHECK(b.interval == IndexInterval{1, 2});  // 2/sqrt(2) beats 1

    const PrefixSums<i64> single(plain({5}));
    const auto c = max_ecc_positive_case(single, 1);
    CHECK(c.interval == IndexInterval{1, 1});
    CHECK(c.hit == 5);

    // precondition: some feasible interval must have a positive sum
    const PrefixSums<i64> neg(plain({-1, -2}));
    CHECK_THROWS_AS(max_ecc_positive_case(neg, 1), std::invalid_argument);
}

TEST_CASE("max consecutive sums through the min-plus kernel") {
    const auto a = max_consecutive_sums<i64>({1, -2, 3});
    CHECK(a.w == std::vector<i64>{0, 3, 1, 2});

    const auto b = max_consecutive_sums<i64>({7});
    CHECK(b.w == std::vector<i64>{0, 7});

    const auto c = max_consecutive_sums<i64>({-1, -1});
    CHECK(c.w == std::vector<i64>{0, -1, -2});

    CHECK_THROWS_AS(max_consecutive_sums<i64>({}), std::invalid_argument);

    bench::Rng rng(51002);
    for (int iter = 0; iter < 300; ++iter) {
        const index_t m = rng.range(1, 120);
        std::vector<i64> values;
        for (index_t k = 0; k < m; ++k) values.push_back(rng.range(-50, 50));
        const auto fast = max_consecutive_sums(values);
        const auto slow = oracle::brute_max_sums(values);
        CHECK(fast.w == slow.w);
        // endpoint identities
        i64 top = values[0];
        i64 total = 0;
        for (const i64 v : values) {
            top = std::max(top, v);
            total += v;
        }
        CHECK(fast.at(1) == top);
        CHECK(fast.at(m) == total);
    }
}

TEST_CASE("block schedule covers every short-enough interval") {
    // spot checks of the schedule itself
    CHECK(psei_blocks(4, 2) == std::vector<Block>{{1, 4}});
    CHECK(psei_blocks(20, 2) == std::vector<Block>{{1, 8}, {5, 12}, {9, 16}, {13, 20}, {17, 20}});

    for (index_t n = 1; n <= 200; ++n) {
        for (index_t bound = 1; bound <= n; ++bound) {
            const auto blocks = psei_blocks(n, bound);
            for (const auto& blk : blocks) CHECK(blk.length() >= bound);
            // every interval with length in [bound, 2*bound-1] sits in a block
            for (index_t start = 1; start + bound - 1 <= n; ++start) {
                const index_t len_hi = std::min(2 * bound - 1, n - start + 1);
                for (index_t len = bound; len <= len_hi; ++len) {
                    const index_t end = start + len - 1;
                    bool covered = false;
                    for (const auto& blk : blocks) {
                        if (blk.start <= start && end <= blk.end) {
                            covered = true;
                            break;
                        }
                    }
                    if (!covered) {
                        CAPTURE(n);
                        CAPTURE(bound);
                        CAPTURE(start);
                        CAPTURE(len);
                        REQUIRE(covered);
                    }
                }
            }
        }
    }
}

TEST_CASE("per-block search") {
    const PrefixSums<i64> p(plain({-1, -5, -1, -1}));
    const auto a = block_best(p, Block{1, 4}, 2);
    CHECK(a.interval == IndexInterval{3, 4});
    CHECK(a.hit == -2);
    CHECK(a.length == 2);

    // block of length exactly the bound: the single full-block interval
    const PrefixSums<i64> q(plain({1, 2}));
    const auto b = block_best(q, Block{1, 2}, 2);
    CHECK(b.interval == IndexInterval{1, 2});
    CHECK(b.hit == 3);

    // uniform positives favor the longer candidate within [L, 2L-1]
    const PrefixSums<i64> r(plain({2, 2, 2, 2}));
    const auto c = block_best(r, Block{1, 4}, 2);
    CHECK(c.interval == IndexInterval{1, 3});
    CHECK(c.length == 3);

    CHECK_THROWS_AS(block_best(q, Block{1, 2}, 3), std::invalid_argument);
}

TEST_CASE("max-eccentricity driver cases") {
    SUBCASE("zero best sum is returned as is") {
        const auto a = compute_psei<i64>(plain({0, 0}), 2);
        CHECK(a.interval == IndexInterval{1, 2});
        CHECK(a.hit == 0);
    }
    SUBCASE("positive case") {
        const auto a = compute_psei<i64>(plain({1, -2, 3}), 2);
        CHECK(a.interval == IndexInterval{1, 3});
        CHECK(a.hit == 2);
        CHECK(a.length == 3);
        CHECK(a.eccentricity() == doctest::Approx(2.0 / std::sqrt(3.0)));
    }
    SUBCASE("negative case goes through the blocks") {
        const auto a = compute_psei<i64>(plain({-1, -5, -1, -1}), 2);
        CHECK(a.interval == IndexInterval{3, 4});
        CHECK(a.hit == -2);
        CHECK(a.length == 2);
    }
    SUBCASE("usage errors") {
        CHECK_THROWS_AS(compute_psei<i64>(PairSequence<i64>({{1, 2}}), 1), std::invalid_argument);
        CHECK_THROWS_AS(compute_psei<i64>(plain({1, 2}), 0), std::invalid_argument);
        CHECK_THROWS_AS(compute_psei<i64>(plain({1, 2}), 3), std::invalid_argument);
    }
}

TEST_CASE("max-eccentricity matches brute force for every bound") {
    bench::Rng rng(51003);
    for (int iter = 0; iter < 150; ++iter) {
        const index_t n = rng.range(1, 24);
        const bool mostly_negative = rng.range(0, 2) == 0;
        const auto d = mostly_negative ? bench::random_plain(n, rng, -10, -1)
                                       : bench::random_plain(n, rng, -10, 10);
        for (index_t bound = 1; bound <= n; ++bound) {
            const auto fast = compute_psei(d, bound);
            const auto slow = oracle::brute_psei(d, bound);
            CAPTURE(n);
            CAPTURE(bound);
            CHECK(compare_ecc(fast.hit, fast.length, slow.hit, slow.length) == 0);
            CHECK(fast.interval.length() >= bound);
        }
    }
}

TEST_CASE("negative instances keep the optimum shorter than twice the bound") {
    bench::Rng rng(51004);
    int verified = 0;
    while (verified < 2000) {
        const index_t n = rng.range(2, 64);
        const index_t bound = rng.range(1, n / 2 > 0 ? n / 2 : 1);
        const auto d = bench::random_plain(n, rng, -10, 3);
        const PrefixSums<i64> p(d);
        if (max_hit_min_length(p, bound).sum >= 0) continue;
        ++verified;
        const auto opt = oracle::brute_psei(d, bound);
        CHECK(opt.length < 2 * bound);
        // and no interval at length >= 2*bound ties the optimum
        if (2 * bound <= n) {
            const auto long_only = oracle::brute_psei(d, 2 * bound);
            CHECK(compare_ecc(long_only.hit, long_only.length, opt.hit, opt.length) < 0);
        }
    }
}

TEST_CASE("the clamped score function is quasiconvex") {
    bench::Rng rng(51005);
    const auto f = [](long double len, long double h) -> long double {
        return h >= 0 ? h / sqrtl(len) : 0.0L;
    };
    for (int iter = 0; iter < 10000; ++iter) {
        const long double l1 = 1e-6L + rng.real01() * 1000000.0L;
        const long double l2 = 1e-6L + rng.real01() * 1000000.0L;
        const long double h1 = (rng.real01() * 2 - 1) * 1000000.0L;
        const long double h2 = (rng.real01() * 2 - 1) * 1000000.0L;
        const long double lam = rng.real01();
        const long double mixed =
            f(lam * l1 + (1 - lam) * l2, lam * h1 + (1 - lam) * h2);
        const long double cap = std::max(f(l1, h1), f(l2, h2));
        CHECK(static_cast<double>(mixed) <= static_cast<double>(cap) + 1e-12);
    }
}

TEST_CASE("scaling all hits scales the optimum") {
    bench::Rng rng(51006);
    for (int iter = 0; iter < 300; ++iter) {
        const index_t n = rng.range(1, 30);
        const auto d = bench::random_plain(n, rng, -10, 10);
        const index_t bound = rng.range(1, n);
        const i64 lam = rng.range(2, 7);
        std::vector<NumberPair<i64>> scaled;
        for (const auto& pr : d.pairs()) scaled.push_back({pr.h * lam, 1});
        const auto base = compute_psei(d, bound);
        const auto big = compute_psei(PairSequence<i64>(std::move(scaled)), bound);
        CHECK(big.interval == base.interval);
        CHECK(compare_ecc(big.hit, big.length, lam * base.hit, base.length) == 0);
    }
}
