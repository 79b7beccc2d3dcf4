#pragma once

#include <cstdint>
#include <vector>

namespace cubrank::fp {

/// Dense vector over F_p with entries in [0, p).
using Vec = std::vector<int>;
/// Row-major list of vectors.
using Mat = std::vector<Vec>;

int inv_mod(int a, int p);

/// Reduce rows to reduced row echelon form in place; returns the rank.
int rref(Mat& rows, int p);

/// Canonical basis (RREF, zero rows dropped) of the span of the given rows.
Mat row_space_basis(Mat rows, int p);

/// Basis of the orthogonal complement wrt the standard dot product on F_p^n.
Mat orthogonal_complement(const Mat& basis, int n, int p);

/// All p^rank elements spanned by the basis vectors (n = ambient dimension).
std::vector<Vec> span_elements(const Mat& basis, int n, int p);

/// Canonical bases of every r-dimensional subspace of F_p^n, enumerated as
/// reduced echelon forms over all pivot-column patterns.
std::vector<Mat> subspaces_of_dimension(int n, int r, int p);

/// Canonical bases of all subspaces of F_p^n, every dimension 0..n.
std::vector<Mat> all_subspaces(int n, int p);

bool same_subspace(const Mat& a, const Mat& b, int n, int p);

}  // namespace cubrank::fp
