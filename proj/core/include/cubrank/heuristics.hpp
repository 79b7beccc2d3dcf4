#pragma once

#include <vector>

#include "cubrank/numeric.hpp"

namespace cubrank {

/// Finite abelian p-group given by its nonincreasing partition of exponents:
/// the group is the direct sum of Z/p^{lambda_i}.
struct AbelianPGroup {
    int p = 3;
    std::vector<int> partition;  // nonincreasing, entries >= 1

    int rank() const { return static_cast<int>(partition.size()); }
    BigInt order() const;
};

/// Partial Euler product: product over i = 1..s of (1 - p^{-i}).
/// Exact rational evaluated in double precision; eta(0, p) = 1.
double eta(int s, int p);

/// Limit of the product above, truncated when the tail bound drops below tol.
double eta_infinity(int p, double tol = 1e-12);

/// Weighting of the rank distribution: `gerth` is the real-quadratic-shaped
/// law governing the invariant computed by this library; `imaginary` is the
/// u = 0 companion, exposed for cross-checking the N(k,p)-moment constants.
enum class DensityVariant { gerth, imaginary };

/// Density of rank s:
///   gerth:     eta_inf(p) / (eta_s(p) * eta_{s+1}(p) * p^{s(s+1)})
///   imaginary: eta_inf(p) / (eta_s(p)^2 * p^{s^2})
double predicted_density(int s, int p, DensityVariant variant = DensityVariant::gerth);

struct PredictedMoment {
    BigInt p_rank_moment;     // average of p^{k * rank}: N(k+1,p) - N(k,p)
    BigRational size_moment;  // the same divided by p^k
};

/// Predicted k-th moment in both normalizations, exact.
PredictedMoment predicted_moment(int k, int p);

/// | p^k * sum_{s<=s_max} predicted_density(s,p) * p^{ks}  -  p_rank_moment |.
/// Cross-validates the rank densities against the closed-form moments.
double consistency_moments_vs_density(int p, int k, int s_max);

struct HomSurCounts {
    BigInt hom_count;                  // p^{k * rank}
    std::vector<BigInt> sur_by_rank;   // |Sur(G, (Z/p)^i)| for i = 0..k
};

/// Homomorphism and surjection counts from G to (Z/p)^k; they satisfy
/// hom_count = sum_i n(k, i, p) * sur_by_rank[i].
HomSurCounts hom_and_sur_counts(const AbelianPGroup& g, int k);

/// Order of the automorphism group of a finite abelian p-group.
BigInt aut_order(const AbelianPGroup& g);

/// Cohen-Lenstra measure eta_inf(p) / (|Aut A| * |A|^u).
double cl_measure(const AbelianPGroup& a, int u);

}  // namespace cubrank
