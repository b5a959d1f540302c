#ifndef OPTINT_ORACLE_HPP
#define OPTINT_ORACLE_HPP

#include <vector>

#include "optint/core.hpp"
#include "optint/hci.hpp"
#include "optint/minplus.hpp"
#include "optint/psei.hpp"

// Brute-force reference implementations, each a direct transcription of a
// definition. They share nothing with the fast paths beyond the core
// types, so a disagreement always implicates the fast path. Quadratic or
// worse on purpose; the CLI --check hook bounds them to n <= 2000.

namespace optint::oracle {

// exhaustive max-confidence interval with hit >= bound (any sign of bound)
template <class T>
HciAnswer<T> brute_hci(const PairSequence<T>& d, T hit_bound) {
    HciAnswer<T> best;
    const index_t n = d.size();
    std::vector<T> ph(static_cast<std::size_t>(n) + 1, T(0));
    std::vector<T> ps(static_cast<std::size_t>(n) + 1, T(0));
    for (index_t i = 1; i <= n; ++i) {
        ph[static_cast<std::size_t>(i)] = ph[static_cast<std::size_t>(i - 1)] + d.at(i).h;
        ps[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(i - 1)] + d.at(i).s;
    }
    for (index_t j = 1; j <= n; ++j) {
        for (index_t i = 1; i <= j; ++i) {
            const T h = ph[static_cast<std::size_t>(j)] - ph[static_cast<std::size_t>(i - 1)];
            if (h < hit_bound) continue;
            const T s = ps[static_cast<std::size_t>(j)] - ps[static_cast<std::size_t>(i - 1)];
            if (!best.interval || compare_conf(h, s, best.hit, best.support) > 0) {
                best.interval = IndexInterval{i, j};
                best.hit = h;
                best.support = s;
            }
        }
    }
    return best;
}

// exhaustive max-eccentricity interval with length >= min_len (plain input)
template <class T>
PseiAnswer<T> brute_psei(const PairSequence<T>& d, index_t min_len) {
    if (!d.plain()) throw std::invalid_argument("brute_psei requires a plain sequence");
    if (!(1 <= min_len && min_len <= d.size()))
        throw std::invalid_argument("length bound out of range");
    bool have = false;
    PseiAnswer<T> best;
    for (index_t i = 1; i <= d.size(); ++i) {
        T h = T(0);
        for (index_t j = i; j <= d.size(); ++j) {
            h = h + d.at(j).h;
            const index_t len = j - i + 1;
            if (len < min_len) continue;
            if (!have || compare_ecc(h, static_cast<T>(len), best.hit, best.length) > 0) {
                best = PseiAnswer<T>{IndexInterval{i, j}, h, static_cast<T>(len)};
                have = true;
            }
        }
    }
    return best;
}

// per-index partner scan: r_i and the good/bad classification
template <class T>
RmpResult brute_rmp(const PrefixSums<T>& p, T hit_bound) {
    const index_t n = p.size();
    RmpResult out;
    out.r.resize(static_cast<std::size_t>(n) + 1, -1);
    out.r[0] = 0;
    std::vector<index_t> r(static_cast<std::size_t>(n) + 1, 0);
    index_t running_max = 0;
    for (index_t q = 1; q <= n; ++q) {
        index_t rq = 0;  // position 0 is a partner of every q
        for (index_t start = q; start >= 1; --start) {
            if (p.ph(q) - p.ph(start - 1) >= hit_bound) {
                rq = start;
                break;
            }
        }
        r[static_cast<std::size_t>(q)] = rq;
        running_max = std::max(running_max, rq);
        out.r[static_cast<std::size_t>(q)] = (rq == running_max) ? rq : -1;
    }
    return out;
}

// exhaustive largest minimizer of conf(x, .) over [x, y]
template <class T>
index_t brute_phi(const PrefixSums<T>& p, index_t x, index_t y) {
    index_t best = x;
    for (index_t z = x; z <= y; ++z) {
        if (compare_conf(p.ph(z) - p.ph(x - 1), p.ps(z) - p.ps(x - 1),
                         p.ph(best) - p.ph(x - 1), p.ps(best) - p.ps(x - 1)) <= 0)
            best = z;
    }
    return best;
}

// exhaustive largest maximizer of conf(., q) over [max(l,1), u]; 0 when u = 0
template <class T>
index_t brute_best(const PrefixSums<T>& p, index_t l, index_t u, index_t q) {
    if (u == 0) return 0;
    index_t best = std::max<index_t>(l, 1);
    for (index_t start = best; start <= u; ++start) {
        if (compare_conf(p.ph(q) - p.ph(start - 1), p.ps(q) - p.ps(start - 1),
                         p.ph(q) - p.ph(best - 1), p.ps(q) - p.ps(best - 1)) >= 0)
            best = start;
    }
    return best;
}

// exhaustive max-confidence interval with support <= cap
template <class T>
HciAnswer<T> brute_conf_capped(const PairSequence<T>& d, T support_cap) {
    HciAnswer<T> best;
    for (index_t i = 1; i <= d.size(); ++i) {
        T h = T(0);
        T s = T(0);
        for (index_t j = i; j <= d.size(); ++j) {
            h = h + d.at(j).h;
            s = s + d.at(j).s;
            if (s > support_cap) break;
            if (!best.interval || compare_conf(h, s, best.hit, best.support) > 0) {
                best.interval = IndexInterval{i, j};
                best.hit = h;
                best.support = s;
            }
        }
    }
    return best;
}

// definitional min-plus convolution
template <class T>
MinPlusVector<T> brute_convolution(const MinPlusVector<T>& x, const MinPlusVector<T>& y) {
    if (x.empty() || x.size() != y.size())
        throw std::invalid_argument("convolution needs equal non-empty lengths");
    MinPlusVector<T> z(x.size(), ExtendedValue<T>::top());
    for (std::size_t k = 0; k < x.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            if (x[i].is_top || y[k - i].is_top) continue;
            const T cand = x[i].value + y[k - i].value;
            if (z[k].is_top || cand < z[k].value) z[k] = ExtendedValue<T>::of(cand);
        }
    }
    return z;
}

// all-windows max at each exact length, O(m^2)
template <class T>
MaxSumsProfile<T> brute_max_sums(const std::vector<T>& values) {
    if (values.empty()) throw std::invalid_argument("brute_max_sums needs a non-empty input");
    const index_t m = static_cast<index_t>(values.size());
    MaxSumsProfile<T> out;
    out.w.resize(static_cast<std::size_t>(m) + 1, T(0));
    std::vector<char> have(static_cast<std::size_t>(m) + 1, 0);
    for (index_t a = 0; a < m; ++a) {
        T sum = T(0);
        for (index_t len = 1; a + len <= m; ++len) {
            sum = sum + values[static_cast<std::size_t>(a + len - 1)];
            auto& slot = out.w[static_cast<std::size_t>(len)];
            if (!have[static_cast<std::size_t>(len)] || sum > slot) {
                slot = sum;
                have[static_cast<std::size_t>(len)] = 1;
            }
        }
    }
    return out;
}

}  // namespace optint::oracle

#endif  // OPTINT_ORACLE_HPP
