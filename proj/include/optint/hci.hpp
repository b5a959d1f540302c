#ifndef OPTINT_HCI_HPP
#define OPTINT_HCI_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "optint/core.hpp"

// Maximum-confidence interval subject to a hit-sum lower bound.
//
// The solver runs in two cooperating pieces, both incremental so the same
// code drives the offline and the streaming entry points:
//
//   RightmostPartnerScan  per right endpoint q, the largest start p whose
//                         interval [p,q] meets the hit bound ("rightmost
//                         partner"), or -1 when an earlier endpoint already
//                         reached further (such q can never host the
//                         optimum and is skipped).
//   BestPartnerSearch     given the monotone window [l, u] of admissible
//                         starts, the start maximizing conf(start, q).
//
// Hit bounds below zero are handled by normalize_negative_lh: either the
// bound is slack (some hit is non-negative) and resets to zero, or every
// hit is negative and the instance flips into a support-capped
// max-confidence problem solved by max_conf_support_capped.

namespace optint {

// R[i] for i in 1..n: the rightmost partner of i (0 = sentinel only) when i
// is a "good" index, -1 otherwise. Entries != -1 are non-decreasing.
struct RmpResult {
    std::vector<index_t> r;  // r[0] unused

    index_t at(index_t i) const { return r.at(static_cast<std::size_t>(i)); }
    index_t size() const noexcept { return static_cast<index_t>(r.size()) - 1; }
};

// Incremental rightmost-partner computation. Feed indices 1, 2, ... in
// order; each step is amortized O(1).
//
// The candidate queue keeps starts whose boundary sums ph(c-1) are strictly
// increasing front to back: a start with a boundary no smaller than a later
// one can never be the rightmost partner of any future endpoint, so it is
// pruned before insertion. Position 0 acts as a sentinel partner whose hit
// value is defined as the bound itself.
template <class T>
class RightmostPartnerScan {
public:
    RightmostPartnerScan(const PrefixSums<T>& prefix, T hit_bound)
        : prefix_(&prefix), hit_bound_(hit_bound) {
        if (hit_bound < T(0))
            throw std::invalid_argument(
                "rightmost-partner scan requires a non-negative hit bound; "
                "normalize the bound first");
    }

    // Process index i (consecutive from 1); prefix sums must already cover i.
    // Returns r_i for good indices, -1 for bad ones.
    index_t step(index_t i) {
        if (i != next_)
            throw std::invalid_argument("rightmost-partner scan indices must be consecutive");
        if (i > prefix_->size())
            throw std::invalid_argument("rightmost-partner scan ran past the prefix sums");
        ++next_;

        const PrefixSums<T>& p = *prefix_;
        // prune dominated candidates: later start, boundary not larger
        while (cand_.size() > head_ && p.ph(cand_.back() - 1) >= p.ph(i - 1)) cand_.pop_back();
        cand_.push_back(i);

        const bool rhat_qualifies =
            rhat_ == 0 ? true : p.ph(i) - p.ph(rhat_ - 1) >= hit_bound_;
        const bool front_qualifies = p.ph(i) - p.ph(cand_[head_] - 1) >= hit_bound_;
        if (!rhat_qualifies && !front_qualifies) return -1;

        while (cand_.size() > head_ && p.ph(i) - p.ph(cand_[head_] - 1) >= hit_bound_) {
            rhat_ = cand_[head_];
            ++head_;
        }
        return rhat_;
    }

    index_t rightmost_so_far() const noexcept { return rhat_; }

private:
    const PrefixSums<T>* prefix_;
    T hit_bound_;
    std::vector<index_t> cand_;
    std::size_t head_ = 0;
    index_t rhat_ = 0;
    index_t next_ = 1;
};

// Rightmost partners for the whole sequence, O(n).
template <class T>
RmpResult compute_rmp(const PrefixSums<T>& prefix, T hit_bound) {
    RightmostPartnerScan<T> scan(prefix, hit_bound);
    RmpResult out;
    out.r.resize(static_cast<std::size_t>(prefix.size()) + 1, -1);
    out.r[0] = 0;
    for (index_t i = 1; i <= prefix.size(); ++i)
        out.r[static_cast<std::size_t>(i)] = scan.step(i);
    return out;
}

// Largest z in [x, y] minimizing conf(x, z); ties go to the larger z.
// Direct linear scan; serves as the reference evaluation of the jump
// target used by the best-partner search.
template <class T>
index_t min_conf_endpoint(const PrefixSums<T>& p, index_t x, index_t y) {
    if (!(1 <= x && x <= y && y <= p.size()))
        throw std::invalid_argument("min_conf_endpoint range out of bounds");
    index_t best = x;
    for (index_t z = x + 1; z <= y; ++z) {
        if (compare_conf(p.ph(z) - p.ph(x - 1), p.ps(z) - p.ps(x - 1),
                         p.ph(best) - p.ph(x - 1), p.ps(best) - p.ps(x - 1)) <= 0)
            best = z;
    }
    return best;
}

// Session answering a run of queries: the largest start in [max(l,1), u]
// maximizing conf(start, q), where l is the start returned by the previous
// query and u never decreases. Returns 0 when u = 0 (sentinel-only window).
//
// Confidence of [p, q] equals the slope from boundary point
// (ps(p-1), ph(p-1)) to (ps(q), ph(q)), so the maximizing start for any
// query lies on the lower convex hull of the window's boundary points. The
// hull is kept as a deque over boundary indices with strictly increasing
// edge slopes; a query walks the front forward while the first hull edge is
// no steeper than the chord to the query point, which lands on the largest
// maximizer. Starts passed over leave the window for good (l is
// non-decreasing), so every boundary enters and leaves the deque at most
// once: a run of calls is O(u_k + k) total.
//
// The sentinel start 0 has conf(0, q) = -inf by convention and is never
// evaluated: while l = 0 and u >= 1 the walk simply begins at start 1.
template <class T>
class BestPartnerSearch {
public:
    explicit BestPartnerSearch(const PrefixSums<T>& prefix) : prefix_(&prefix) {}

    index_t step(index_t u, index_t q) {
        if (u < last_u_)
            throw std::invalid_argument("best-partner window end must be non-decreasing");
        if (u != 0 && u < left_)
            throw std::invalid_argument("best-partner window end below current left edge");
        if (u > q || q > prefix_->size())
            throw std::invalid_argument("best-partner query out of range");
        last_u_ = u;
        if (u == 0) return 0;

        for (index_t t = appended_ + 1; t <= u - 1; ++t) append_boundary(t);

        const PrefixSums<T>& p = *prefix_;
        while (hull_.size() - head_ >= 2) {
            const index_t f = hull_[head_];
            const index_t s = hull_[head_ + 1];
            // advance while the hull edge from f is no steeper than the chord to q
            if (compare_conf(p.ph(s) - p.ph(f), p.ps(s) - p.ps(f),
                             p.ph(q) - p.ph(f), p.ps(q) - p.ps(f)) <= 0)
                ++head_;
            else
                break;
        }
        left_ = hull_[head_] + 1;
        return left_;
    }

    index_t left() const noexcept { return left_; }

private:
    void append_boundary(index_t t) {
        const PrefixSums<T>& p = *prefix_;
        // keep edge slopes strictly increasing; collinear middle points drop
        // so the edge always reaches the farthest point of equal slope
        while (hull_.size() - head_ >= 2) {
            const index_t a = hull_[hull_.size() - 2];
            const index_t b = hull_.back();
            if (compare_conf(p.ph(b) - p.ph(a), p.ps(b) - p.ps(a),
                             p.ph(t) - p.ph(b), p.ps(t) - p.ps(b)) >= 0)
                hull_.pop_back();
            else
                break;
        }
        hull_.push_back(t);
        appended_ = t;
    }

    const PrefixSums<T>* prefix_;
    std::vector<index_t> hull_;
    std::size_t head_ = 0;
    index_t appended_ = -1;
    index_t left_ = 0;
    index_t last_u_ = 0;
};

template <class T>
index_t best_step(BestPartnerSearch<T>& session, index_t u, index_t q) {
    return session.step(u, q);
}

// Result of a constrained max-confidence search. When no interval meets the
// bound the interval is absent and the confidence reads as -inf.
template <class T>
struct HciAnswer {
    std::optional<IndexInterval> interval;
    T hit{};
    T support{1};

    bool found() const noexcept { return interval.has_value(); }

    double confidence() const {
        if (!interval) return -std::numeric_limits<double>::infinity();
        return static_cast<double>(hit) / static_cast<double>(support);
    }

    // value comparison (equal confidences), not endpoint comparison
    friend bool same_value(const HciAnswer& a, const HciAnswer& b) {
        if (a.found() != b.found()) return false;
        if (!a.found()) return true;
        return compare_conf(a.hit, a.support, b.hit, b.support) == 0;
    }
};

// Maximum confidence among intervals whose support stays at or below the
// cap, or absent when no interval fits. Quadratic window scan: feasible
// starts per endpoint form a suffix since supports are positive. Adequate
// for the all-negative-hit reduction; not meant for large n.
template <class T>
HciAnswer<T> max_conf_support_capped(const PairSequence<T>& d, T support_cap) {
    if (!(support_cap > T(0)))
        throw std::invalid_argument("support cap must be positive");
    const PrefixSums<T> p(d);
    HciAnswer<T> best;
    for (index_t j = 1; j <= p.size(); ++j) {
        for (index_t i = j; i >= 1; --i) {
            const T s = p.ps(j) - p.ps(i - 1);
            if (s > support_cap) break;
            const T h = p.ph(j) - p.ph(i - 1);
            if (!best.interval || compare_conf(h, s, best.hit, best.support) > 0) {
                best.interval = IndexInterval{i, j};
                best.hit = h;
                best.support = s;
            }
        }
    }
    return best;
}

enum class LhStrategy {
    unchanged,       // bound already non-negative
    reset_to_zero,   // negative bound, some non-negative hit: bound is slack
    support_capped,  // all hits negative: flip into a support-capped instance
};

template <class T>
struct LhNormalization {
    LhStrategy strategy = LhStrategy::unchanged;
    T hit_bound{};                            // effective bound for the first two strategies
    std::optional<PairSequence<T>> reduced;   // (s_i, -h_i) instance
    T support_cap{};                          // cap for the reduced instance
};

// Negative-bound normalization. With any non-negative hit present, every
// interval ending at such an element meets a negative bound, so resetting
// to zero is safe. With all hits negative, maximizing conf subject to
// hit >= L_h is the same as maximizing it subject to
// sum(-h) <= -L_h over the flipped pairs (s_i, -h_i).
template <class T>
LhNormalization<T> normalize_negative_lh(const PairSequence<T>& d, T hit_bound) {
    if (hit_bound >= T(0)) return {LhStrategy::unchanged, hit_bound, std::nullopt, T{}};
    bool any_nonneg = false;
    for (const auto& pr : d.pairs()) {
        if (pr.h >= T(0)) {
            any_nonneg = true;
            break;
        }
    }
    if (any_nonneg) return {LhStrategy::reset_to_zero, T(0), std::nullopt, T{}};
    std::vector<NumberPair<T>> flipped;
    flipped.reserve(d.pairs().size());
    for (const auto& pr : d.pairs())
        flipped.push_back(NumberPair<T>{pr.s, detail::checked_negate(pr.h)});
    return {LhStrategy::support_capped, hit_bound, PairSequence<T>(std::move(flipped)),
            detail::checked_negate(hit_bound)};
}

// Max-confidence interval with hit sum >= hit_bound, O(n) for
// hit_bound >= 0. Negative bounds are normalized first. Ties on the
// optimal value resolve to the earliest right endpoint with the
// search-selected start.
template <class T>
HciAnswer<T> compute_hci(const PairSequence<T>& d, T hit_bound) {
    if (hit_bound < T(0)) {
        const auto norm = normalize_negative_lh(d, hit_bound);
        if (norm.strategy == LhStrategy::reset_to_zero) return compute_hci(d, T(0));
        HciAnswer<T> capped = max_conf_support_capped(*norm.reduced, norm.support_cap);
        if (!capped.interval) return {};
        const PrefixSums<T> p(d);
        HciAnswer<T> out;
        out.interval = capped.interval;
        out.hit = p.hit(capped.interval->start, capped.interval->end);
        out.support = p.sup(capped.interval->start, capped.interval->end);
        return out;
    }

    const PrefixSums<T> p(d);
    const RmpResult rmp = compute_rmp(p, hit_bound);
    BestPartnerSearch<T> search(p);
    HciAnswer<T> best;
    for (index_t q = 1; q <= p.size(); ++q) {
        const index_t r = rmp.at(q);
        if (r < 0) continue;
        const index_t l = search.step(r, q);
        if (l == 0) continue;
        const T h = p.ph(q) - p.ph(l - 1);
        const T s = p.ps(q) - p.ps(l - 1);
        if (!best.interval || compare_conf(h, s, best.hit, best.support) > 0) {
            best.interval = IndexInterval{l, q};
            best.hit = h;
            best.support = s;
        }
    }
    return best;
}

// Streaming variant: push pairs one at a time; after each push the current
// answer matches compute_hci on the prefix seen so far. Requires a
// non-negative bound (the all-negative reduction needs the whole sequence).
template <class T>
class OnlineHci {
public:
    explicit OnlineHci(T hit_bound)
        : hit_bound_(hit_bound), scan_(prefix_, hit_bound), search_(prefix_) {
        if (hit_bound < T(0))
            throw std::invalid_argument(
                "streaming search requires a non-negative hit bound; "
                "use compute_hci for negative bounds");
    }

    OnlineHci(const OnlineHci&) = delete;
    OnlineHci& operator=(const OnlineHci&) = delete;

    const HciAnswer<T>& push(const NumberPair<T>& pair) {
        if (!(pair.s > T(0)))
            throw validation_error(
                "support must be positive (position " + std::to_string(prefix_.size() + 1) + ")",
                prefix_.size() + 1);
        prefix_.append(pair);
        const index_t q = prefix_.size();
        const index_t r = scan_.step(q);
        if (r >= 0) {
            const index_t l = search_.step(r, q);
            if (l >= 1) {
                const T h = prefix_.ph(q) - prefix_.ph(l - 1);
                const T s = prefix_.ps(q) - prefix_.ps(l - 1);
                if (!best_.interval || compare_conf(h, s, best_.hit, best_.support) > 0) {
                    best_.interval = IndexInterval{l, q};
                    best_.hit = h;
                    best_.support = s;
                }
            }
        }
        return best_;
    }

    const HciAnswer<T>& answer() const noexcept { return best_; }
    index_t size() const noexcept { return prefix_.size(); }

private:
    PrefixSums<T> prefix_;  // must precede scan_/search_, which point at it
    T hit_bound_;
    RightmostPartnerScan<T> scan_;
    BestPartnerSearch<T> search_;
    HciAnswer<T> best_;
};

}  // namespace optint

#endif  // OPTINT_HCI_HPP
