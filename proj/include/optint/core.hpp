#ifndef OPTINT_CORE_HPP
#define OPTINT_CORE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Core representation for number-pair sequences: the pairs themselves,
// prefix sums giving O(1) interval scores, and exact order comparators
// for confidence (hit/support) and eccentricity (hit/sqrt(support)).
//
// Positions are 1-based; prefix boundaries are 0-based (boundary t holds
// the sum of the first t elements), so hit(i,j) = ph(j) - ph(i-1).

namespace optint {

using index_t = std::int64_t;

// Raised when an input sequence carries a non-positive support value.
class validation_error : public std::runtime_error {
public:
    validation_error(const std::string& what, index_t position)
        : std::runtime_error(what), position_(position) {}

    // 1-based position of the offending pair
    index_t position() const noexcept { return position_; }

private:
    index_t position_;
};

template <class T>
struct NumberPair {
    T h;  // hit value
    T s;  // support value, must be > 0

    friend bool operator==(const NumberPair&, const NumberPair&) = default;
};

// 1-based inclusive interval [start, end]
struct IndexInterval {
    index_t start = 0;
    index_t end = 0;

    index_t length() const noexcept { return end - start + 1; }

    friend bool operator==(const IndexInterval&, const IndexInterval&) = default;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow while accumulating sums");
    return out;
}

inline double checked_add(double a, double b) { return a + b; }

inline std::int64_t checked_negate(std::int64_t v) {
    if (v == std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer overflow while negating");
    return -v;
}

inline double checked_negate(double v) { return -v; }

inline int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
inline int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// a*b as three 64-bit limbs (low to high), a up to 128 bits, b up to 64 bits
inline std::array<std::uint64_t, 3> mul_u128_u64(unsigned __int128 a, std::uint64_t b) {
    const unsigned __int128 lo = static_cast<unsigned __int128>(static_cast<std::uint64_t>(a)) * b;
    const unsigned __int128 mid = (a >> 64) * b + (lo >> 64);
    return {static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(mid),
            static_cast<std::uint64_t>(mid >> 64)};
}

inline int compare_u192(const std::array<std::uint64_t, 3>& a,
                        const std::array<std::uint64_t, 3>& b) {
    for (int k = 2; k >= 0; --k) {
        if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    }
    return 0;
}

inline unsigned __int128 abs_u128(std::int64_t v) {
    const auto u = static_cast<std::uint64_t>(v);
    return v < 0 ? static_cast<unsigned __int128>(~u) + 1 : static_cast<unsigned __int128>(u);
}

}  // namespace detail

// Ordering of h1/s1 vs h2/s2 (s1, s2 > 0). Exact-integer overload works by
// cross-multiplication in 128-bit integers, so ties are decided without
// rounding; the floating overload compares the quotients directly.
inline int compare_conf(std::int64_t h1, std::int64_t s1, std::int64_t h2, std::int64_t s2) {
    const __int128 lhs = static_cast<__int128>(h1) * s2;
    const __int128 rhs = static_cast<__int128>(h2) * s1;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline int compare_conf(double h1, double s1, double h2, double s2) {
    const double lhs = h1 / s1;
    const double rhs = h2 / s2;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Ordering of h1/sqrt(l1) vs h2/sqrt(l2) (l1, l2 > 0). The exact-integer
// overload never takes a square root: opposite signs are decided by sign,
// and equal signs by comparing h1^2*l2 with h2^2*l1 (reversed when both
// values are negative). Products are tracked in 192-bit arithmetic.
inline int compare_ecc(std::int64_t h1, std::int64_t l1, std::int64_t h2, std::int64_t l2) {
    const int sg1 = detail::sign_of(h1);
    const int sg2 = detail::sign_of(h2);
    if (sg1 != sg2) return sg1 < sg2 ? -1 : 1;
    if (sg1 == 0) return 0;
    const unsigned __int128 q1 = detail::abs_u128(h1) * detail::abs_u128(h1);
    const unsigned __int128 q2 = detail::abs_u128(h2) * detail::abs_u128(h2);
    const int mag = detail::compare_u192(detail::mul_u128_u64(q1, static_cast<std::uint64_t>(l2)),
                                         detail::mul_u128_u64(q2, static_cast<std::uint64_t>(l1)));
    return sg1 > 0 ? mag : -mag;
}

inline int compare_ecc(double h1, double l1, double h2, double l2) {
    const double lhs = h1 / std::sqrt(l1);
    const double rhs = h2 / std::sqrt(l2);
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// An ordered sequence of (h, s) pairs, validated on construction: every
// support must be positive. "plain" means every support equals one.
// Immutable after construction.
template <class T>
class PairSequence {
public:
    PairSequence() = default;

    explicit PairSequence(std::vector<NumberPair<T>> pairs) : pairs_(std::move(pairs)) {
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (!(pairs_[k].s > T(0)))
                throw validation_error(
                    "support must be positive (position " + std::to_string(k + 1) + ")",
                    static_cast<index_t>(k + 1));
            if (pairs_[k].s != T(1)) plain_ = false;
        }
    }

    index_t size() const noexcept { return static_cast<index_t>(pairs_.size()); }
    bool empty() const noexcept { return pairs_.empty(); }
    bool plain() const noexcept { return plain_; }

    // 1-based access
    const NumberPair<T>& at(index_t i) const { return pairs_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<NumberPair<T>>& pairs() const noexcept { return pairs_; }

private:
    std::vector<NumberPair<T>> pairs_;
    bool plain_ = true;
};

template <class T>
PairSequence<T> validate_sequence(std::vector<NumberPair<T>> pairs) {
    return PairSequence<T>(std::move(pairs));
}

// Prefix sums over hits and supports. Extending by one pair is O(1), so the
// same type backs both offline and streaming use. ps() is strictly
// increasing because supports are positive.
template <class T>
class PrefixSums {
public:
    PrefixSums() : ph_{T(0)}, ps_{T(0)} {}

    explicit PrefixSums(const PairSequence<T>& d) : PrefixSums() {
        ph_.reserve(d.pairs().size() + 1);
        ps_.reserve(d.pairs().size() + 1);
        for (const auto& p : d.pairs()) append(p);
    }

    void append(const NumberPair<T>& p) {
        // invariant: the total |h| mass stays representable, which bounds
        // every interval difference taken downstream
        abs_hit_ = detail::checked_add(abs_hit_, p.h < T(0) ? detail::checked_negate(p.h) : p.h);
        ph_.push_back(detail::checked_add(ph_.back(), p.h));
        ps_.push_back(detail::checked_add(ps_.back(), p.s));
    }

    index_t size() const noexcept { return static_cast<index_t>(ph_.size()) - 1; }

    // boundary reads, t in [0, n]; unchecked hot path
    T ph(index_t t) const { return ph_[static_cast<std::size_t>(t)]; }
    T ps(index_t t) const { return ps_[static_cast<std::size_t>(t)]; }

    T hit(index_t i, index_t j) const {
        check_range(i, j);
        return ph_[static_cast<std::size_t>(j)] - ph_[static_cast<std::size_t>(i - 1)];
    }

    T sup(index_t i, index_t j) const {
        check_range(i, j);
        return ps_[static_cast<std::size_t>(j)] - ps_[static_cast<std::size_t>(i - 1)];
    }

private:
    void check_range(index_t i, index_t j) const {
        if (!(1 <= i && i <= j && j <= size()))
            throw std::out_of_range("interval [" + std::to_string(i) + "," + std::to_string(j) +
                                    "] out of range for n=" + std::to_string(size()));
    }

    std::vector<T> ph_;
    std::vector<T> ps_;
    T abs_hit_{};
};

template <class T>
PrefixSums<T> build_prefix_sums(const PairSequence<T>& d) {
    return PrefixSums<T>(d);
}

enum class ScoreKind { support, hit, confidence, eccentricity };

// O(1) interval score as a displayable number; range-checked.
template <class T>
double score(const PrefixSums<T>& p, index_t i, index_t j, ScoreKind kind) {
    const double h = static_cast<double>(p.hit(i, j));
    const double s = static_cast<double>(p.sup(i, j));
    switch (kind) {
        case ScoreKind::support: return s;
        case ScoreKind::hit: return h;
        case ScoreKind::confidence: return h / s;
        case ScoreKind::eccentricity: return h / std::sqrt(s);
    }
    throw std::invalid_argument("unknown score kind");
}

}  // namespace optint

#endif  // OPTINT_CORE_HPP
