#include "cubrank/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "cubrank/errors.hpp"
#include "cubrank/linkage.hpp"

namespace cubrank {

BigInt AbelianPGroup::order() const {
    int total = 0;
    for (int e : partition) total += e;
    return bigint_pow(BigInt(p), static_cast<unsigned>(total));
}

double eta(int s, int p) {
    assert(s >= 0 && p >= 2);
    BigRational prod = 1;
    BigInt pk = 1;
    for (int i = 1; i <= s; ++i) {
        pk *= p;
        prod *= BigRational(pk - 1, pk);
    }
    return prod.convert_to<double>();
}

double eta_infinity(int p, double tol) {
    assert(p >= 2 && tol > 0);
    double prod = 1.0;
    double pinv = 1.0 / p;
    double term = 1.0;
    for (int i = 1;; ++i) {
        term *= pinv;  // p^{-i}
        prod *= (1.0 - term);
        // Remaining factors lie within [1 - sum_{j>i} p^{-j}, 1].
        double tail = term * pinv / (1.0 - pinv);
        if (tail < tol) return prod;
        if (i > 4096) throw InternalInvariantError("eta_infinity: tail bound failed to converge");
    }
}

double predicted_density(int s, int p, DensityVariant variant) {
    assert(s >= 0);
    double denom;
    if (variant == DensityVariant::gerth) {
        denom = eta(s, p) * eta(s + 1, p) * std::pow(static_cast<double>(p), s * (s + 1));
    } else {
        denom = eta(s, p) * eta(s, p) * std::pow(static_cast<double>(p), s * s);
    }
    return eta_infinity(p) / denom;
}

PredictedMoment predicted_moment(int k, int p) {
    assert(k >= 1);
    BigInt m = count_subspaces(k + 1, p) - count_subspaces(k, p);
    PredictedMoment result;
    result.p_rank_moment = m;
    result.size_moment = BigRational(m, bigint_pow(BigInt(p), static_cast<unsigned>(k)));
    return result;
}

double consistency_moments_vs_density(int p, int k, int s_max) {
    double acc = 0.0;
    for (int s = 0; s <= s_max; ++s) {
        acc += predicted_density(s, p) * std::pow(static_cast<double>(p), k * s);
    }
    acc *= std::pow(static_cast<double>(p), k);
    double target = predicted_moment(k, p).p_rank_moment.convert_to<double>();
    return std::abs(acc - target);
}

HomSurCounts hom_and_sur_counts(const AbelianPGroup& g, int k) {
    assert(k >= 0);
    for (std::size_t i = 1; i < g.partition.size(); ++i) {
        assert(g.partition[i - 1] >= g.partition[i]);
    }
    const int rk = g.rank();
    HomSurCounts out;
    out.hom_count = bigint_pow(BigInt(g.p), static_cast<unsigned>(k * rk));
    out.sur_by_rank.resize(k + 1);
    for (int i = 0; i <= k; ++i) {
        if (i > rk) {
            out.sur_by_rank[i] = 0;
            continue;
        }
        // Surjections factor through G/pG: count surjective linear maps
        // F_p^{rk} -> F_p^i.
        BigInt count = 1;
        BigInt prk = bigint_pow(BigInt(g.p), static_cast<unsigned>(rk));
        for (int j = 0; j < i; ++j) {
            count *= prk - bigint_pow(BigInt(g.p), static_cast<unsigned>(j));
        }
        out.sur_by_rank[i] = count;
    }
    return out;
}

BigInt aut_order(const AbelianPGroup& g) {
    // Hillar-Rhea: with exponents e_1 <= ... <= e_n,
    //   |Aut| = prod_k (p^{d_k} - p^{k-1})
    //         * prod_j p^{e_j (n - d_j)}
    //         * prod_i p^{(e_i - 1)(n - c_i + 1)}
    // where d_k / c_k are the largest / smallest index with the same exponent.
    std::vector<int> e = g.partition;
    std::sort(e.begin(), e.end());
    const int n = static_cast<int>(e.size());
    if (n == 0) return 1;
    const BigInt p(g.p);
    BigInt result = 1;
    for (int kk = 1; kk <= n; ++kk) {
        int d = kk;
        while (d < n && e[d] == e[kk - 1]) ++d;  // 1-based largest same-exponent index
        result *= bigint_pow(p, static_cast<unsigned>(d)) - bigint_pow(p, static_cast<unsigned>(kk - 1));
    }
    for (int j = 1; j <= n; ++j) {
        int d = j;
        while (d < n && e[d] == e[j - 1]) ++d;
        result *= bigint_pow(p, static_cast<unsigned>(e[j - 1] * (n - d)));
    }
    for (int i = 1; i <= n; ++i) {
        int c = i;
        while (c > 1 && e[c - 2] == e[i - 1]) --c;  // 1-based smallest same-exponent index
        result *= bigint_pow(p, static_cast<unsigned>((e[i - 1] - 1) * (n - c + 1)));
    }
    return result;
}

double cl_measure(const AbelianPGroup& a, int u) {
    assert(u >= 0);
    BigInt denom = aut_order(a) * bigint_pow(a.order(), static_cast<unsigned>(u));
    return eta_infinity(a.p) / denom.convert_to<double>();
}

}  // namespace cubrank
