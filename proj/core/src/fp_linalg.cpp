#include "cubrank/fp_linalg.hpp"

#include <algorithm>
#include <cassert>

namespace cubrank::fp {

int inv_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    assert(a != 0);
    int result = 1, base = a, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

int rref(Mat& rows, int p) {
    if (rows.empty()) return 0;
    const int n = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int inv = inv_mod(rows[rank][col], p);
        for (int j = 0; j < n; ++j) rows[rank][j] = rows[rank][j] * inv % p;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            int f = rows[i][col];
            for (int j = 0; j < n; ++j) {
                rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % p + p) % p;
            }
        }
        ++rank;
    }
    return rank;
}

Mat row_space_basis(Mat rows, int p) {
    int rank = rref(rows, p);
    rows.resize(rank);
    return rows;
}

Mat orthogonal_complement(const Mat& basis, int n, int p) {
    // Kernel of the basis matrix: free columns parameterize the complement.
    Mat rows = basis;
    for ([[maybe_unused]] auto& r : rows) assert(static_cast<int>(r.size()) == n);
    int rank = rref(rows, p);
    rows.resize(rank);
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < n; ++j) {
            if (rows[i][j] != 0) {
                pivot_col[i] = j;
                is_pivot[j] = true;
                break;
            }
        }
    }
    Mat result;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, 0);
        v[free] = 1;
        for (int i = 0; i < rank; ++i) {
            // pivot entry = -(row coefficient at the free column)
            v[pivot_col[i]] = ((-rows[i][free]) % p + p) % p;
        }
        result.push_back(std::move(v));
    }
    return result;
}

std::vector<Vec> span_elements(const Mat& basis, int n, int p) {
    std::vector<Vec> elements;
    const int r = static_cast<int>(basis.size());
    long long total = 1;
    for (int i = 0; i < r; ++i) total *= p;
    elements.reserve(static_cast<std::size_t>(total));
    std::vector<int> coeff(r, 0);
    for (long long it = 0;; ++it) {
        Vec v(n, 0);
        for (int i = 0; i < r; ++i) {
            if (coeff[i] == 0) continue;
            for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff[i] * basis[i][j]) % p;
        }
        elements.push_back(std::move(v));
        int pos = 0;
        while (pos < r && ++coeff[pos] == p) coeff[pos++] = 0;
        if (pos == r) break;
    }
    return elements;
}

std::vector<Mat> subspaces_of_dimension(int n, int r, int p) {
    std::vector<Mat> result;
    if (r == 0) {
        result.push_back(Mat{});
        return result;
    }
    if (r > n) return result;

    // Choose pivot columns c_1 < ... < c_r, then fill the free entries: entry
    // (i, j) is free iff j > c_i and j is not a pivot column.
    std::vector<int> cols(r);
    for (int i = 0; i < r; ++i) cols[i] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_cells;
        std::vector<bool> is_pivot(n, false);
        for (int c : cols) is_pivot[c] = true;
        for (int i = 0; i < r; ++i) {
            for (int j = cols[i] + 1; j < n; ++j) {
                if (!is_pivot[j]) free_cells.emplace_back(i, j);
            }
        }
        std::vector<int> fill(free_cells.size(), 0);
        while (true) {
            Mat basis(r, Vec(n, 0));
            for (int i = 0; i < r; ++i) basis[i][cols[i]] = 1;
            for (std::size_t t = 0; t < free_cells.size(); ++t) {
                basis[free_cells[t].first][free_cells[t].second] = fill[t];
            }
            result.push_back(std::move(basis));
            std::size_t pos = 0;
            while (pos < fill.size() && ++fill[pos] == p) fill[pos++] = 0;
            if (pos == fill.size()) break;
        }
        // next pivot pattern
        int i = r - 1;
        while (i >= 0 && cols[i] == n - r + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < r; ++j) cols[j] = cols[j - 1] + 1;
    }
    return result;
}

std::vector<Mat> all_subspaces(int n, int p) {
    std::vector<Mat> result;
    for (int r = 0; r <= n; ++r) {
        auto part = subspaces_of_dimension(n, r, p);
        result.insert(result.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
    }
    return result;
}

bool same_subspace(const Mat& a, const Mat& b, int n, int p) {
    (void)n;
    Mat ca = row_space_basis(a, p);
    Mat cb = row_space_basis(b, p);
    return ca == cb;
}

}  // namespace cubrank::fp
