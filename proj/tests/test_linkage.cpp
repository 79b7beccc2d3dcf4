#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cubrank/errors.hpp"
#include "cubrank/linkage.hpp"

using namespace cubrank;

namespace {

long long ipow(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

std::vector<IndexVector> decode_set(const std::vector<long long>& codes, int p, int k) {
    std::vector<IndexVector> out;
    out.reserve(codes.size());
    for (long long c : codes) out.push_back(IndexVector::decode(c, p, k));
    return out;
}

// Oracle: subspaces of F_p^n as canonical element sets, generated by closing
// over all spans of vector subsets. Independent of the echelon enumeration.
std::set<std::set<fp::Vec>> brute_subspaces(int n, int p) {
    long long total = ipow(p, n);
    std::vector<fp::Vec> all;
    for (long long c = 0; c < total; ++c) {
        fp::Vec v(n);
        long long t = c;
        for (int i = 0; i < n; ++i) {
            v[i] = static_cast<int>(t % p);
            t /= p;
        }
        all.push_back(v);
    }
    // close random-free: iterate span closure of every subset of a generating
    // front: start from {0}, repeatedly add one vector and close
    std::set<std::set<fp::Vec>> spaces;
    std::set<fp::Vec> zero{fp::Vec(n, 0)};
    spaces.insert(zero);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::set<fp::Vec>> current(spaces.begin(), spaces.end());
        for (const auto& space : current) {
            for (const auto& v : all) {
                if (space.count(v)) continue;
                // close space + v under addition and scaling
                std::set<fp::Vec> bigger = space;
                for (int c = 1; c < p; ++c) {
                    for (const auto& w : space) {
                        fp::Vec u(n);
                        for (int i = 0; i < n; ++i) u[i] = (w[i] + c * v[i]) % p;
                        bigger.insert(u);
                    }
                }
                if (spaces.insert(bigger).second) grew = true;
            }
        }
    }
    return spaces;
}

}  // namespace

TEST_CASE("phi_k values") {
    // p = 3, k = 1: u = 3 = (1,0), v = 2 = (0,2) -> 1*(2-0) = 2
    IndexVector u = IndexVector::decode(3, 3, 1);
    IndexVector v = IndexVector::decode(2, 3, 1);
    CHECK(u.high_digit(0) == 1);
    CHECK(u.low_digit(0) == 0);
    CHECK(phi_k(u, v) == 2);
    CHECK(phi_k(u, u) == 0);
    CHECK(phi_k(v, u) == 0);  // v has high digit 0

    for (int p : {2, 3, 5}) {
        for (int k : {1, 2}) {
            long long total = ipow(p, 2 * k);
            for (long long c = 0; c < total; ++c) {
                IndexVector w = IndexVector::decode(c, p, k);
                CHECK(phi_k(w, w) == 0);
                CHECK(w.encode() == c);
            }
        }
    }

    IndexVector w5 = IndexVector::decode(0, 5, 1);
    CHECK_THROWS_AS(phi_k(u, w5), DimensionMismatchError);
}

TEST_CASE("is_unlinked_set basics") {
    IndexVector u = IndexVector::decode(4, 3, 1);
    CHECK(is_unlinked_set({u}));

    std::vector<IndexVector> full;
    for (long long c = 0; c < 9; ++c) full.push_back(IndexVector::decode(c, 3, 1));
    CHECK(!is_unlinked_set(full));  // pair (3, 2) is linked

    for (const auto& set :
         enumerate_maximal_unlinked_sets(3, 1, UnlinkedEnumMethod::subspace)) {
        CHECK(is_unlinked_set(decode_set(set, 3, 1)));
    }
}

TEST_CASE("counts: closed form vs brute subspace oracle") {
    CHECK(count_subspaces(1, 2) == 2);
    CHECK(count_subspaces(1, 5) == 2);
    CHECK(count_subspaces(2, 3) == 6);
    CHECK(count_subspaces(3, 3) == 28);
    CHECK(count_subspaces(2, 2) == 5);
    CHECK(count_subspaces(3, 2) == 16);
    CHECK(n_subspaces(2, 1, 3) == 4);

    for (int p : {2, 3}) {
        for (int n = 0; n <= 3; ++n) {
            auto oracle = brute_subspaces(n, p);
            CHECK(BigInt(oracle.size()) == count_subspaces(n, p));
            // per-dimension counts against the Gaussian binomial
            std::vector<long long> by_dim(n + 1, 0);
            for (const auto& space : oracle) {
                long long size = static_cast<long long>(space.size());
                int dim = 0;
                while (ipow(p, dim) < size) ++dim;
                CHECK(ipow(p, dim) == size);
                ++by_dim[dim];
            }
            for (int r = 0; r <= n; ++r) CHECK(BigInt(by_dim[r]) == n_subspaces(n, r, p));
        }
    }
}

TEST_CASE("Gaussian binomial symmetry and the telescoping sum") {
    for (int p : {2, 3, 5, 7}) {
        for (int k = 0; k <= 6; ++k) {
            for (int r = 0; r <= k; ++r) {
                CHECK(n_subspaces(k, r, p) == n_subspaces(k, k - r, p));
            }
            BigInt lhs = 0;
            for (int r = 0; r <= k; ++r) lhs += bigint_pow(BigInt(p), r) * n_subspaces(k, r, p);
            CHECK(lhs == count_subspaces(k + 1, p) - count_subspaces(k, p));
            CHECK(count_maximal_unlinked(p, k) == lhs);
        }
    }
}

TEST_CASE("enumeration counts match the closed form") {
    struct Case {
        int p, k;
        long long expect;
    };
    for (auto [p, k, expect] : {Case{2, 1, 3}, Case{2, 2, 11}, Case{3, 1, 4}, Case{3, 2, 22},
                                Case{5, 1, 6}}) {
        CAPTURE(p);
        CAPTURE(k);
        auto sub = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::subspace);
        auto brute = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::brute);
        CHECK(static_cast<long long>(sub.size()) == expect);
        CHECK(sub == brute);
        CHECK(count_maximal_unlinked(p, k) == expect);
        for (const auto& set : sub) {
            CHECK(static_cast<long long>(set.size()) == ipow(p, k));
            CHECK(is_unlinked_set(decode_set(set, p, k)));
        }
    }
    CHECK_THROWS_AS(enumerate_maximal_unlinked_sets(3, 4, UnlinkedEnumMethod::brute),
                    TooLargeError);

    // subspace method at sizes the brute bound excludes
    CHECK(BigInt(enumerate_maximal_unlinked_sets(2, 3, UnlinkedEnumMethod::subspace).size()) ==
          count_maximal_unlinked(2, 3));  // 51
    CHECK(BigInt(enumerate_maximal_unlinked_sets(5, 2, UnlinkedEnumMethod::subspace).size()) ==
          count_maximal_unlinked(5, 2));  // 806
    CHECK(BigInt(enumerate_maximal_unlinked_sets(7, 1, UnlinkedEnumMethod::subspace).size()) ==
          count_maximal_unlinked(7, 1));  // 8
    CHECK(count_maximal_unlinked(2, 3) == 51);
    CHECK(count_maximal_unlinked(3, 3) == 184);  // N(4,3) - N(3,3) = 212 - 28
}

TEST_CASE("p = 3, k = 1 sets explicitly") {
    auto sets = enumerate_maximal_unlinked_sets(3, 1, UnlinkedEnumMethod::brute);
    std::vector<std::vector<long long>> expect = {{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    CHECK(sets == expect);
}

TEST_CASE("translate of a maximal unlinked set is a subspace") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        CAPTURE(p);
        CAPTURE(k);
        auto sets = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::brute);
        for (const auto& codes : sets) {
            auto set = decode_set(codes, p, k);
            const IndexVector& a = set.front();
            // the ambient group is F_p^{2k} under digitwise addition mod p
            std::set<long long> elems;
            for (const auto& u : set) {
                IndexVector t = u;
                for (int i = 0; i < k; ++i) {
                    int hi = (u.high_digit(i) - a.high_digit(i) + p) % p;
                    int lo = (u.low_digit(i) - a.low_digit(i) + p) % p;
                    t.coords[i] = hi * p + lo;
                }
                elems.insert(t.encode());
            }
            CHECK(elems.count(0) == 1);
            // closed under digitwise addition and scalar multiples
            for (long long c1 : elems) {
                IndexVector u = IndexVector::decode(c1, p, k);
                for (long long c2 : elems) {
                    IndexVector v = IndexVector::decode(c2, p, k);
                    IndexVector sum = u;
                    for (int i = 0; i < k; ++i) {
                        int hi = (u.high_digit(i) + v.high_digit(i)) % p;
                        int lo = (u.low_digit(i) + v.low_digit(i)) % p;
                        sum.coords[i] = hi * p + lo;
                    }
                    CHECK(elems.count(sum.encode()) == 1);
                }
            }
        }
    }
}

TEST_CASE("subspace characterization, both directions") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        CAPTURE(p);
        CAPTURE(k);
        const int n = 2 * k;
        auto max_sets = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::brute);

        // encode a maximal set translated to the origin as a set of F_p^{2k}
        // vectors in (odd, even) digit layout
        auto translated = [&](const std::vector<long long>& codes) {
            auto set = decode_set(codes, p, k);
            const IndexVector& a = set.front();
            std::set<fp::Vec> out;
            for (const auto& u : set) {
                fp::Vec w(n);
                for (int i = 0; i < k; ++i) {
                    w[2 * i] = (u.high_digit(i) - a.high_digit(i) + p) % p;
                    w[2 * i + 1] = (u.low_digit(i) - a.low_digit(i) + p) % p;
                }
                out.insert(w);
            }
            return out;
        };

        auto good = [&](const fp::Mat& basis) {
            // V == p(V)^perp (+) p(V) with p = even-digit projection
            fp::Mat even, odd;
            for (const auto& w : basis) {
                fp::Vec pe(k), po(k);
                for (int i = 0; i < k; ++i) {
                    pe[i] = w[2 * i + 1];
                    po[i] = w[2 * i];
                }
                even.push_back(pe);
                odd.push_back(po);
            }
            fp::Mat v0 = fp::row_space_basis(even, p);
            fp::Mat comp = fp::orthogonal_complement(v0, k, p);
            fp::Mat target;
            for (const auto& row : comp) {
                fp::Vec w(n, 0);
                for (int i = 0; i < k; ++i) w[2 * i] = row[i];
                target.push_back(w);
            }
            for (const auto& row : v0) {
                fp::Vec w(n, 0);
                for (int i = 0; i < k; ++i) w[2 * i + 1] = row[i];
                target.push_back(w);
            }
            return fp::same_subspace(basis, target, n, p);
        };

        // direction 1: every translated maximal set satisfies the characterization
        std::set<std::set<fp::Vec>> translated_sets;
        for (const auto& codes : max_sets) {
            auto elems = translated(codes);
            fp::Mat basis(elems.begin(), elems.end());
            CHECK(good(basis));
            translated_sets.insert(std::move(elems));
        }

        // direction 2: every subspace satisfying it arises from a maximal set
        int good_count = 0;
        for (const auto& basis : fp::all_subspaces(n, p)) {
            if (!good(basis)) continue;
            ++good_count;
            std::set<fp::Vec> elems;
            for (const auto& v : fp::span_elements(basis, n, p)) elems.insert(v);
            CHECK(translated_sets.count(elems) == 1);
        }
        // distinct maximal sets can share their translate; count distinct spaces
        CHECK(static_cast<std::size_t>(good_count) == translated_sets.size());
    }
}

TEST_CASE("pairwise intersections are at most p^{k-1}") {
    for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        auto sets = enumerate_maximal_unlinked_sets(p, k, UnlinkedEnumMethod::subspace);
        long long bound = ipow(p, k - 1);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                std::vector<long long> inter;
                std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                      sets[j].end(), std::back_inserter(inter));
                CHECK(static_cast<long long>(inter.size()) <= bound);
            }
        }
    }
}
