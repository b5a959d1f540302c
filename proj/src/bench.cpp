#include "optint/bench.hpp"

#include <chrono>
#include <cstdio>

#include "optint/hci.hpp"
#include "optint/psei.hpp"

namespace optint::bench {

namespace {

constexpr std::uint64_t kSeed = 0x0b5ec0de5eedull;

double time_once(const std::function<void()>& work) {
    const auto t0 = std::chrono::steady_clock::now();
    work();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

PairSequence<std::int64_t> random_pairs(index_t n, Rng& rng, std::int64_t h_lo, std::int64_t h_hi,
                                        std::int64_t s_lo, std::int64_t s_hi) {
    std::vector<NumberPair<std::int64_t>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i)
        pairs.push_back({rng.range(h_lo, h_hi), rng.range(s_lo, s_hi)});
    return PairSequence<std::int64_t>(std::move(pairs));
}

PairSequence<std::int64_t> random_plain(index_t n, Rng& rng, std::int64_t h_lo, std::int64_t h_hi) {
    return random_pairs(n, rng, h_lo, h_hi, 1, 1);
}

MinPlusVector<std::int64_t> random_vector(index_t n, Rng& rng, std::int64_t lo, std::int64_t hi,
                                          int top_percent) {
    MinPlusVector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    for (index_t i = 0; i < n; ++i) {
        if (top_percent > 0 && rng.range(0, 99) < top_percent)
            out.push_back(ExtendedValue<std::int64_t>::top());
        else
            out.push_back(ExtendedValue<std::int64_t>::of(rng.range(lo, hi)));
    }
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<index_t>& sizes) {
    std::vector<BenchRow> rows;
    for (const index_t n : sizes) {
        if (n < 1) throw std::invalid_argument("bench sizes must be positive");
        const auto mix = static_cast<std::uint64_t>(n);

        {
            Rng rng(kSeed ^ (mix * 0x9e3779b97f4a7c15ull + 1));
            const auto d = random_pairs(n, rng, -10, 10, 1, 5);
            HciAnswer<std::int64_t> ans;
            rows.push_back({n, "hci", time_once([&] { ans = compute_hci<std::int64_t>(d, 10); })});
        }
        {
            Rng rng(kSeed ^ (mix * 0x9e3779b97f4a7c15ull + 2));
            const auto d = random_plain(n, rng, -10, 10);
            const index_t bound = std::min<index_t>(n, 512);
            PseiAnswer<std::int64_t> ans;
            rows.push_back({n, "psei", time_once([&] { ans = compute_psei<std::int64_t>(d, bound); })});
        }
        {
            Rng rng(kSeed ^ (mix * 0x9e3779b97f4a7c15ull + 3));
            const auto x = random_vector(n, rng, -100, 100, 2);
            const auto y = random_vector(n, rng, -100, 100, 2);
            MinPlusVector<std::int64_t> z;
            rows.push_back({n, "convolve", time_once([&] { z = blocked_convolution(x, y); })});
        }
    }
    return rows;
}

std::string render_csv(const std::vector<BenchRow>& rows) {
    std::string out;
    char buf[64];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f", row.seconds);
        out += std::to_string(row.size) + "," + row.name + "," + buf + "\n";
    }
    return out;
}

}  // namespace optint::bench
