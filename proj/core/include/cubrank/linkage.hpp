#pragma once

#include <cstdint>
#include <vector>

#include "cubrank/fp_linalg.hpp"
#include "cubrank/numeric.hpp"

namespace cubrank {

/// Element of (Z/p^2)^k. Each coordinate u in [0, p^2) splits base p as
/// u = u1*p + u2; the pairing below only ever sees the digit pairs.
struct IndexVector {
    int p = 3;
    int k = 1;
    std::vector<int> coords;  // k values in [0, p^2)

    int high_digit(int i) const { return coords[i] / p; }  // u_{i1}
    int low_digit(int i) const { return coords[i] % p; }   // u_{i2}

    /// Mixed-radix encoding of the coordinates, used for canonical set order.
    long long encode() const;
    static IndexVector decode(long long code, int p, int k);

    friend bool operator==(const IndexVector& a, const IndexVector& b) {
        return a.p == b.p && a.k == b.k && a.coords == b.coords;
    }
};

/// Sum over i of u_{i1} * (v_{i2} - u_{i2}) mod p.
/// Throws DimensionMismatchError when u and v disagree on (p, k).
int phi_k(const IndexVector& u, const IndexVector& v);

/// True iff phi_k(u, v) = 0 and phi_k(v, u) = 0 for all u, v in the set.
bool is_unlinked_set(const std::vector<IndexVector>& set);

enum class UnlinkedEnumMethod {
    brute,     // exhaustive maximal-set search over all p^{2k} elements
    subspace,  // subspace characterization: V = p(V)^perp (+) p(V), translated
};

/// All maximal unlinked subsets of (Z/p^2)^k, each as a sorted vector of
/// encodings, the whole collection sorted. Both methods return identical
/// collections; brute throws TooLargeError when p^{2k} > 729.
std::vector<std::vector<long long>> enumerate_maximal_unlinked_sets(int p, int k,
                                                                    UnlinkedEnumMethod method);

/// Number of r-dimensional subspaces of F_p^k (Gaussian binomial), exact.
BigInt n_subspaces(int k, int r, int p);

/// Total number of subspaces of F_p^k, all dimensions.
BigInt count_subspaces(int k, int p);

/// Number of maximal unlinked sets: sum over r of p^r * n(k, r), which equals
/// count_subspaces(k+1, p) - count_subspaces(k, p).
BigInt count_maximal_unlinked(int p, int k);

}  // namespace cubrank
