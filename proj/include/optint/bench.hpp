#ifndef OPTINT_BENCH_HPP
#define OPTINT_BENCH_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "optint/core.hpp"
#include "optint/minplus.hpp"

// Seeded instance generation and the timing harness behind `bench`.
// Instances are a pure function of (fixed seed, size), so repeated runs
// generate identical inputs; only the timings vary.

namespace optint::bench {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // inclusive; modulo keeps the draw stable across standard libraries
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng_() % span);
    }

    double real01() {
        return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
    }

private:
    std::mt19937_64 eng_;
};

PairSequence<std::int64_t> random_pairs(index_t n, Rng& rng, std::int64_t h_lo, std::int64_t h_hi,
                                        std::int64_t s_lo, std::int64_t s_hi);
PairSequence<std::int64_t> random_plain(index_t n, Rng& rng, std::int64_t h_lo, std::int64_t h_hi);
MinPlusVector<std::int64_t> random_vector(index_t n, Rng& rng, std::int64_t lo, std::int64_t hi,
                                          int top_percent);

struct BenchRow {
    index_t size = 0;
    std::string name;
    double seconds = 0.0;
};

// hci, psei, convolve fast paths per size; see render_csv for the layout
std::vector<BenchRow> run_bench(const std::vector<index_t>& sizes);

std::string render_csv(const std::vector<BenchRow>& rows);

}  // namespace optint::bench

#endif  // OPTINT_BENCH_HPP
