#include "cubrank/linkage.hpp"

#include <algorithm>
#include <cassert>

#include "cubrank/errors.hpp"

namespace cubrank {

long long IndexVector::encode() const {
    long long base = static_cast<long long>(p) * p;
    long long code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * base + coords[i];
    return code;
}

IndexVector IndexVector::decode(long long code, int p, int k) {
    IndexVector v;
    v.p = p;
    v.k = k;
    v.coords.resize(k);
    long long base = static_cast<long long>(p) * p;
    for (int i = 0; i < k; ++i) {
        v.coords[i] = static_cast<int>(code % base);
        code /= base;
    }
    return v;
}

int phi_k(const IndexVector& u, const IndexVector& v) {
    if (u.p != v.p || u.k != v.k) {
        throw DimensionMismatchError("phi_k: index vectors have different (p, k)");
    }
    int acc = 0;
    for (int i = 0; i < u.k; ++i) {
        acc += u.high_digit(i) * (v.low_digit(i) - u.low_digit(i) + u.p);
    }
    return ((acc % u.p) + u.p) % u.p;
}

bool is_unlinked_set(const std::vector<IndexVector>& set) {
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (phi_k(set[i], set[j]) != 0) return false;
        }
    }
    return true;
}

namespace {

long long ipow_ll(int base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Pairwise compatibility: u, v can share an unlinked set.
bool compatible(const IndexVector& u, const IndexVector& v) {
    return phi_k(u, v) == 0 && phi_k(v, u) == 0;
}

// Exhaustive maximal-clique enumeration (Bron-Kerbosch with pivoting) on the
// compatibility graph. Every maximal unlinked set is a maximal clique.
class MaximalCliqueEnum {
public:
    MaximalCliqueEnum(const std::vector<std::vector<bool>>& adj) : adj_(adj), n_(adj.size()) {}

    std::vector<std::vector<int>> run() {
        std::vector<int> r, p(n_), x;
        for (std::size_t i = 0; i < n_; ++i) p[i] = static_cast<int>(i);
        expand(r, p, x);
        return std::move(out_);
    }

private:
    void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            out_.push_back(r);
            return;
        }
        // pivot: vertex of P u X with most neighbours in P
        int pivot = -1;
        std::size_t best = 0;
        for (const auto* side : {&p, &x}) {
            for (int v : *side) {
                std::size_t d = 0;
                for (int u : p)
                    if (adj_[v][u]) ++d;
                if (pivot < 0 || d > best) {
                    pivot = v;
                    best = d;
                }
            }
        }
        std::vector<int> candidates;
        for (int v : p)
            if (pivot < 0 || !adj_[pivot][v]) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> p2, x2;
            for (int u : p)
                if (adj_[v][u]) p2.push_back(u);
            for (int u : x)
                if (adj_[v][u]) x2.push_back(u);
            r.push_back(v);
            expand(r, std::move(p2), std::move(x2));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    }

    const std::vector<std::vector<bool>>& adj_;
    std::size_t n_;
    std::vector<std::vector<int>> out_;
};

std::vector<std::vector<long long>> enumerate_brute(int p, int k) {
    long long total = ipow_ll(p, 2 * k);
    if (total > 729) {
        throw TooLargeError("enumerate_maximal_unlinked_sets: brute method limited to p^{2k} <= 729");
    }
    std::vector<IndexVector> all;
    all.reserve(total);
    for (long long c = 0; c < total; ++c) all.push_back(IndexVector::decode(c, p, k));

    std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
    for (long long i = 0; i < total; ++i) {
        for (long long j = 0; j < total; ++j) {
            adj[i][j] = (i != j) && compatible(all[i], all[j]);
        }
    }
    auto cliques = MaximalCliqueEnum(adj).run();
    std::vector<std::vector<long long>> sets;
    sets.reserve(cliques.size());
    for (auto& c : cliques) {
        std::vector<long long> s;
        s.reserve(c.size());
        for (int v : c) s.push_back(all[v].encode());
        std::sort(s.begin(), s.end());
        sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

// Encoding of an F_p^{2k} vector laid out (u_?1, u_?2, ...) into the mixed
// radix code used by IndexVector: coordinate i has value u_{i1}*p + u_{i2}.
long long encode_pair_vector(const fp::Vec& w, int p, int k) {
    long long base = static_cast<long long>(p) * p;
    long long code = 0;
    for (int i = k - 1; i >= 0; --i) {
        code = code * base + (static_cast<long long>(w[2 * i]) * p + w[2 * i + 1]);
    }
    return code;
}

std::vector<std::vector<long long>> enumerate_subspace(int p, int k) {
    // For each subspace V0 of F_p^k there is exactly one candidate space
    // V = V0^perp (+) V0 (odd coordinates from V0^perp, even from V0), and the
    // valid translates a are those with odd part in V0^perp, modulo cosets of V.
    std::vector<std::vector<long long>> sets;
    for (const fp::Mat& v0 : fp::all_subspaces(k, p)) {
        fp::Mat comp = fp::orthogonal_complement(v0, k, p);

        fp::Mat basis;  // basis of V inside F_p^{2k}, interleaved layout
        for (const auto& row : comp) {
            fp::Vec w(2 * k, 0);
            for (int i = 0; i < k; ++i) w[2 * i] = row[i];
            basis.push_back(std::move(w));
        }
        for (const auto& row : v0) {
            fp::Vec w(2 * k, 0);
            for (int i = 0; i < k; ++i) w[2 * i + 1] = row[i];
            basis.push_back(std::move(w));
        }
        std::vector<fp::Vec> v_elems = fp::span_elements(basis, 2 * k, p);

        // Translates: odd part ranges over V0^perp, even part over all of F_p^k.
        std::vector<fp::Vec> odd_parts = fp::span_elements(comp, k, p);
        std::vector<std::vector<long long>> local;
        std::vector<int> even(k, 0);
        for (const fp::Vec& q : odd_parts) {
            std::fill(even.begin(), even.end(), 0);
            while (true) {
                std::vector<long long> s;
                s.reserve(v_elems.size());
                for (const fp::Vec& w : v_elems) {
                    fp::Vec t(2 * k);
                    for (int i = 0; i < k; ++i) {
                        t[2 * i] = (w[2 * i] + q[i]) % p;
                        t[2 * i + 1] = (w[2 * i + 1] + even[i]) % p;
                    }
                    s.push_back(encode_pair_vector(t, p, k));
                }
                std::sort(s.begin(), s.end());
                local.push_back(std::move(s));
                int pos = 0;
                while (pos < k && ++even[pos] == p) even[pos++] = 0;
                if (pos == k) break;
            }
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        sets.insert(sets.end(), local.begin(), local.end());
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

}  // namespace

std::vector<std::vector<long long>> enumerate_maximal_unlinked_sets(int p, int k,
                                                                    UnlinkedEnumMethod method) {
    switch (method) {
        case UnlinkedEnumMethod::brute: return enumerate_brute(p, k);
        case UnlinkedEnumMethod::subspace: return enumerate_subspace(p, k);
    }
    throw InternalInvariantError("enumerate_maximal_unlinked_sets: unknown method");
}

BigInt n_subspaces(int k, int r, int p) {
    assert(k >= 0 && r >= 0);
    if (r > k) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= bigint_pow(BigInt(p), k - i) - 1;
        den *= bigint_pow(BigInt(p), r - i) - 1;
    }
    BigInt q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem != 0) throw InternalInvariantError("n_subspaces: Gaussian binomial not integral");
    return q;
}

BigInt count_subspaces(int k, int p) {
    BigInt total = 0;
    for (int r = 0; r <= k; ++r) total += n_subspaces(k, r, p);
    return total;
}

BigInt count_maximal_unlinked(int p, int k) {
    BigInt total = 0;
    for (int r = 0; r <= k; ++r) total += bigint_pow(BigInt(p), r) * n_subspaces(k, r, p);
    return total;
}

}  // namespace cubrank
