#ifndef OPTINT_PSEI_HPP
#define OPTINT_PSEI_HPP

#include <stdexcept>
#include <vector>

#include "optint/core.hpp"
#include "optint/minplus.hpp"

// Max-eccentricity interval with a length lower bound, for plain sequences
// (every support 1, so support = length and ecc(i,j) = hit / sqrt(length)).
//
// Driver case split on the best hit sum among intervals of length >= L:
//   = 0  that interval is already optimal (every feasible ecc <= 0);
//   > 0  the optimum is positive, and because h/sqrt(len) (clamped at 0) is
//        quasiconvex the maximizer sits on the lower convex hull of the
//        boundary points (t, ph(t)) -- a hull sweep over right endpoints
//        finds it;
//   < 0  every feasible interval is negative, which forces the optimum to
//        be shorter than 2L, so overlapping blocks of length 4L placed
//        every 2L cover it; per block, best-sum-at-each-exact-length
//        profiles come out of the min-plus convolution kernel.

namespace optint {

template <class T>
struct SumInterval {
    IndexInterval interval;
    T sum{};
};

template <class T>
struct PseiAnswer {
    IndexInterval interval;
    T hit{};
    T length{};  // equals support for plain input

    double eccentricity() const {
        return static_cast<double>(hit) / std::sqrt(static_cast<double>(length));
    }
};

// Best-sum interval of length >= min_len, O(n) via the running minimum
// over eligible boundaries. Ties: smallest start, then earliest end.
template <class T>
SumInterval<T> max_hit_min_length(const PrefixSums<T>& p, index_t min_len) {
    if (!(1 <= min_len && min_len <= p.size()))
        throw std::invalid_argument("length bound out of range");
    index_t best_t = 0;
    T best_boundary = p.ph(0);
    SumInterval<T> best{IndexInterval{1, min_len}, p.ph(min_len) - p.ph(0)};
    for (index_t j = min_len; j <= p.size(); ++j) {
        const index_t t = j - min_len;  // boundary becoming eligible
        if (p.ph(t) < best_boundary) {
            best_boundary = p.ph(t);
            best_t = t;
        }
        const T cand = p.ph(j) - best_boundary;
        if (cand > best.sum) {
            best.sum = cand;
            best.interval = IndexInterval{best_t + 1, j};
        }
    }
    return best;
}

// Max-ecc interval of length >= min_len when some feasible interval has a
// positive sum. Sweeps right endpoints; per endpoint the candidate
// boundaries [0, j-min_len] live on an append-only lower hull whose
// vertices are scanned with the exact ecc comparator. Worst case is
// O(n * hull size); hulls of sum-bounded data stay small.
template <class T>
PseiAnswer<T> max_ecc_positive_case(const PrefixSums<T>& p, index_t min_len) {
    if (!(1 <= min_len && min_len <= p.size()))
        throw std::invalid_argument("length bound out of range");
    std::vector<index_t> hull;  // boundary indices, lower hull of (t, ph(t))
    bool have = false;
    PseiAnswer<T> best;
    for (index_t j = min_len; j <= p.size(); ++j) {
        const index_t t = j - min_len;
        // append boundary t; edge slopes strictly increasing
        while (hull.size() >= 2) {
            const index_t a = hull[hull.size() - 2];
            const index_t b = hull.back();
            if (compare_conf(p.ph(b) - p.ph(a), static_cast<T>(b - a),
                             p.ph(t) - p.ph(b), static_cast<T>(t - b)) >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(t);
        for (const index_t v : hull) {
            const T h = p.ph(j) - p.ph(v);
            const T len = static_cast<T>(j - v);
            if (!have || compare_ecc(h, len, best.hit, best.length) > 0) {
                best = PseiAnswer<T>{IndexInterval{v + 1, j}, h, len};
                have = true;
            }
        }
    }
    if (!(best.hit > T(0)))
        throw std::invalid_argument(
            "max_ecc_positive_case requires a feasible interval with positive sum");
    return best;
}

// w[len] = best sum among windows of exactly len consecutive values,
// len = 1..m. w[0] is unused.
template <class T>
struct MaxSumsProfile {
    std::vector<T> w;

    index_t size() const noexcept { return static_cast<index_t>(w.size()) - 1; }
    T at(index_t len) const { return w.at(static_cast<std::size_t>(len)); }
};

// Profile of best window sums at every exact length, through the min-plus
// kernel: with prefix sums P[0..m], feed x = P and y = -P reversed; then
// z_k = min_i (P[i] - P[i + m - k]) and w_len = -z_{m-len}.
template <class T>
MaxSumsProfile<T> max_consecutive_sums(const std::vector<T>& values,
                                       const SquareProductFn<T>& backend = naive_square_product<T>) {
    if (values.empty()) throw std::invalid_argument("max_consecutive_sums needs a non-empty input");
    const index_t m = static_cast<index_t>(values.size());
    std::vector<T> prefix(static_cast<std::size_t>(m) + 1, T(0));
    for (index_t i = 0; i < m; ++i)
        prefix[static_cast<std::size_t>(i + 1)] =
            detail::checked_add(prefix[static_cast<std::size_t>(i)], values[static_cast<std::size_t>(i)]);

    MinPlusVector<T> x, y;
    x.reserve(prefix.size());
    y.reserve(prefix.size());
    for (index_t t = 0; t <= m; ++t) x.push_back(ExtendedValue<T>::of(prefix[static_cast<std::size_t>(t)]));
    for (index_t t = m; t >= 0; --t)
        y.push_back(ExtendedValue<T>::of(detail::checked_negate(prefix[static_cast<std::size_t>(t)])));

    const MinPlusVector<T> z = blocked_convolution(x, y, backend);
    MaxSumsProfile<T> out;
    out.w.resize(static_cast<std::size_t>(m) + 1, T(0));
    for (index_t len = 1; len <= m; ++len)
        out.w[static_cast<std::size_t>(len)] =
            detail::checked_negate(z[static_cast<std::size_t>(m - len)].value);
    return out;
}

// Overlapping block schedule [2kL+1, min(2kL+4L, n)]: every interval with
// length in [L, 2L-1] fits inside at least one block, and every block is
// at least L long.
struct Block {
    index_t start = 0;
    index_t end = 0;

    index_t length() const noexcept { return end - start + 1; }

    friend bool operator==(const Block&, const Block&) = default;
};

inline std::vector<Block> psei_blocks(index_t n, index_t min_len) {
    if (!(1 <= min_len && min_len <= n)) throw std::invalid_argument("length bound out of range");
    std::vector<Block> out;
    const index_t kmax = (n - min_len) / (2 * min_len);
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (index_t k = 0; k <= kmax; ++k) {
        const index_t start = 2 * k * min_len + 1;
        const index_t end = std::min(start + 4 * min_len - 1, n);
        out.push_back(Block{start, end});
    }
    return out;
}

// Best interval inside one block with length in [min_len, 2*min_len - 1]:
// computes the block's max-sum profile, picks the best length by exact ecc
// comparison (ties: shortest), then the earliest start realizing that sum.
template <class T>
PseiAnswer<T> block_best(const PrefixSums<T>& p, const Block& block, index_t min_len,
                         const SquareProductFn<T>& backend = naive_square_product<T>) {
    const index_t m = block.length();
    if (m < min_len) throw std::invalid_argument("block shorter than the length bound");

    std::vector<T> slice;
    slice.reserve(static_cast<std::size_t>(m));
    for (index_t i = block.start; i <= block.end; ++i)
        slice.push_back(p.ph(i) - p.ph(i - 1));
    const MaxSumsProfile<T> profile = max_consecutive_sums(slice, backend);

    const index_t len_hi = std::min(2 * min_len - 1, m);
    index_t best_len = min_len;
    for (index_t len = min_len + 1; len <= len_hi; ++len) {
        if (compare_ecc(profile.at(len), static_cast<T>(len), profile.at(best_len),
                        static_cast<T>(best_len)) > 0)
            best_len = len;
    }

    // locate the earliest start achieving the profile sum; window sums are
    // recomputed exactly as the convolution formed them so the match is
    // bit-identical in floating mode too
    std::vector<T> local(static_cast<std::size_t>(m) + 1, T(0));
    for (index_t i = 0; i < m; ++i)
        local[static_cast<std::size_t>(i + 1)] =
            detail::checked_add(local[static_cast<std::size_t>(i)], slice[static_cast<std::size_t>(i)]);
    for (index_t a = 0; a + best_len <= m; ++a) {
        const T sum = detail::checked_negate(
            local[static_cast<std::size_t>(a)] -
            local[static_cast<std::size_t>(a + best_len)]);
        if (sum == profile.at(best_len)) {
            const index_t start = block.start + a;
            return PseiAnswer<T>{IndexInterval{start, start + best_len - 1}, profile.at(best_len),
                                 static_cast<T>(best_len)};
        }
    }
    throw std::logic_error("profile sum not realized by any window");  // unreachable
}

// Max-ecc interval of length >= min_len over a plain sequence.
template <class T>
PseiAnswer<T> compute_psei(const PairSequence<T>& d, index_t min_len,
                           const SquareProductFn<T>& backend = naive_square_product<T>) {
    if (!d.plain())
        throw std::invalid_argument("eccentricity search requires a plain sequence (all supports 1)");
    if (!(1 <= min_len && min_len <= d.size()))
        throw std::invalid_argument("length bound out of range");

    const PrefixSums<T> p(d);
    const SumInterval<T> top = max_hit_min_length(p, min_len);
    if (top.sum == T(0))
        return PseiAnswer<T>{top.interval, top.sum, static_cast<T>(top.interval.length())};
    if (top.sum > T(0)) return max_ecc_positive_case(p, min_len);

    bool have = false;
    PseiAnswer<T> best;
    for (const Block& block : psei_blocks(d.size(), min_len)) {
        const PseiAnswer<T> cand = block_best(p, block, min_len, backend);
        if (!have || compare_ecc(cand.hit, cand.length, best.hit, best.length) > 0) {
            best = cand;
            have = true;
        }
    }
    return best;
}

}  // namespace optint

#endif  // OPTINT_PSEI_HPP
