#include "cubrank/norms.hpp"

#include <algorithm>
#include <cassert>

#include "cubrank/errors.hpp"

namespace cubrank {

std::uint64_t NormDivisor::value(const Conductor& conductor) const {
    assert(exponents.size() == conductor.ramified_primes.size());
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        for (int e = 0; e < exponents[i]; ++e) v *= conductor.ramified_primes[i];
    }
    return v;
}

std::vector<NormDivisor> norm_divisors(const CyclicCubicField& field) {
    const int r = field.num_ramified();
    std::vector<NormDivisor> divisors;
    divisors.reserve(static_cast<std::size_t>(1) << (2 * r));  // 3^r <= 4^r
    NormDivisor cur;
    cur.exponents.assign(r, 0);
    while (true) {
        divisors.push_back(cur);
        int pos = 0;
        while (pos < r && ++cur.exponents[pos] == 3) cur.exponents[pos++] = 0;
        if (pos == r) break;
    }
    return divisors;
}

namespace detail {

std::vector<std::vector<int>> local_character_matrix(const CyclicCubicField& field) {
    const auto& primes = field.conductor.ramified_primes;
    const int r = field.num_ramified();
    std::vector<std::vector<int>> mat(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            std::uint64_t modulus = (primes[i] == 3) ? 9 : primes[i];
            int base = base_character_exponent(primes[i], primes[j] % modulus);
            assert(base >= 0);
            mat[i][j] = apply_selector(base, field.selectors[i]);
        }
    }
    return mat;
}

namespace {

// Exponent of chi(i_{b,l_i}) for the divisor with exponent vector e.
int idele_exponent(const std::vector<std::vector<int>>& mat, const std::vector<std::uint8_t>& e,
                   int i) {
    const int r = static_cast<int>(mat.size());
    int acc = 0;
    for (int j = 0; j < r; ++j) {
        if (j == i) continue;
        acc += e[j] * mat[i][j];          // chi_{l_i}(b / l_i^{e_i})
        acc += (3 - e[i]) * mat[j][i];    // prod_{q != l_i} chi_q(l_i)^{-e_i}
    }
    return acc % 3;
}

}  // namespace

int count_norm_divisors_with_matrix(const std::vector<std::vector<int>>& mat) {
    const int r = static_cast<int>(mat.size());
    std::vector<std::uint8_t> e(r, 0);
    int count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) ok = (idele_exponent(mat, e, i) == 0);
        if (ok) ++count;
        int pos = 0;
        while (pos < r && ++e[pos] == 3) e[pos++] = 0;
        if (pos == r) break;
    }
    return count;
}

}  // namespace detail

bool is_local_norm(const CyclicCubicField& field, const NormDivisor& b, std::uint64_t l) {
    const auto& primes = field.conductor.ramified_primes;
    auto it = std::find(primes.begin(), primes.end(), l);
    if (it == primes.end()) {
        throw NotRamifiedError("is_local_norm: " + std::to_string(l) + " does not ramify in conductor " +
                               std::to_string(field.conductor.value));
    }
    assert(b.exponents.size() == primes.size());
    const int i = static_cast<int>(it - primes.begin());
    const int v = b.exponents[i];
    int acc = 0;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        if (static_cast<int>(j) == i) continue;
        int cij = local_character_exponent(field, primes[i], static_cast<long long>(primes[j]));
        int cji = local_character_exponent(field, primes[j], static_cast<long long>(primes[i]));
        acc += b.exponents[j] * cij + (3 - v) * cji;
    }
    return acc % 3 == 0;
}

int count_norm_divisors(const CyclicCubicField& field) {
    return detail::count_norm_divisors_with_matrix(detail::local_character_matrix(field));
}

int rank_im_phi(const CyclicCubicField& field) {
    int m = count_norm_divisors(field);
    if (m <= 0 || m % 3 != 0) {
        throw InternalInvariantError("rank_im_phi: divisor count " + std::to_string(m) +
                                     " not divisible by 3 (conductor " +
                                     std::to_string(field.conductor.value) + ")");
    }
    int q = m / 3;
    int s = 0;
    while (q % 3 == 0) {
        q /= 3;
        ++s;
    }
    if (q != 1) {
        throw InternalInvariantError("rank_im_phi: m/3 = " + std::to_string(m / 3) +
                                     " not a power of 3 (conductor " +
                                     std::to_string(field.conductor.value) + ")");
    }
    return s;
}

RankRecord rank_record(const CyclicCubicField& field) {
    RankRecord rec;
    rec.conductor = field.conductor.value;
    rec.char_signature = char_signature(field);
    rec.r = field.num_ramified();
    rec.m = count_norm_divisors(field);
    rec.s = rank_im_phi(field);
    return rec;
}

namespace {

long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// Phi_k between two slot codes in [0, 9^k): sum of u_{i1} * (v_{i2} - u_{i2}).
int phi_slot(long long u, long long v, int k) {
    int acc = 0;
    for (int i = 0; i < k; ++i) {
        int ud = static_cast<int>(u % 9), vd = static_cast<int>(v % 9);
        u /= 9;
        v /= 9;
        acc += (ud / 3) * ((vd % 3) - (ud % 3) + 3);
    }
    return acc % 3;
}

// Accumulates counts of omega^0 / omega^1 / omega^2 terms.
struct OmegaSum {
    BigInt n0 = 0, n1 = 0, n2 = 0;

    void add(int exponent) {
        switch (exponent) {
            case 0: ++n0; break;
            case 1: ++n1; break;
            default: ++n2; break;
        }
    }
    // Value as x + y*omega.
    BigInt x() const { return n0 - n2; }
    BigInt y() const { return n1 - n2; }
};

}  // namespace

bool verify_character_sum_identity(std::uint64_t d, int k, CharSumMode mode) {
    if (k < 1) throw InadmissibleDError("verify_character_sum_identity: k must be >= 1");
    // Admissibility: squarefree product of primes = 1 mod 3 and/or the prime 3.
    std::vector<std::uint64_t> primes;
    {
        if (d <= 1) throw InadmissibleDError("verify_character_sum_identity: D must have a prime factor");
        std::uint64_t n = d;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e != 1 || (p != 3 && p % 3 != 1)) {
                throw InadmissibleDError("verify_character_sum_identity: " + std::to_string(d) +
                                         " is not admissible");
            }
            primes.push_back(p);
        }
        if (n > 1) {
            if (n != 3 && n % 3 != 1) {
                throw InadmissibleDError("verify_character_sum_identity: " + std::to_string(d) +
                                         " is not admissible");
            }
            primes.push_back(n);
        }
        std::sort(primes.begin(), primes.end());
    }
    const int omega_d = static_cast<int>(primes.size());
    assert(omega_d >= 1);  // d > 1 and admissible

    // Left side: sum of |im phi|^k = 3^{k s} over the character orbits with
    // conductor D (with the factor 3 replaced by 9 in the conductor).
    Conductor cond;
    cond.value = (d % 3 == 0) ? 3 * d : d;
    cond.ramified_primes = primes;
    BigInt lhs = 0;
    for (const CyclicCubicField& field : fields_for_conductor(cond)) {
        lhs += bigint_pow(BigInt(3), static_cast<unsigned>(k * rank_im_phi(field)));
    }

    // Right side: every prime gets a slot in (Z/9)^k; character tuples run
    // over selectors. Each term is omega^E with
    //   E = sum over ordered prime pairs (q, l), q != l, of
    //       Phi_k(slot_q, slot_l) * (selector_l applied to chi_l(q)).
    const long long slots = ipow_ll(9, k);
    std::vector<std::vector<int>> base_exp(omega_d, std::vector<int>(omega_d, 0));
    for (int i = 0; i < omega_d; ++i) {
        for (int j = 0; j < omega_d; ++j) {
            if (i == j) continue;
            std::uint64_t modulus = (primes[i] == 3) ? 9 : primes[i];
            base_exp[i][j] = detail::base_character_exponent(primes[i], primes[j] % modulus);
            assert(base_exp[i][j] >= 0);
        }
    }

    const bool exhaustive = (mode == CharSumMode::exhaustive_tuples);
    OmegaSum sum;
    std::vector<long long> slot(omega_d, 0);
    while (true) {
        // Phi values between the chosen slots, fixed for all character tuples.
        std::vector<std::vector<int>> phi(omega_d, std::vector<int>(omega_d, 0));
        for (int a = 0; a < omega_d; ++a) {
            for (int b = 0; b < omega_d; ++b) {
                if (a != b) phi[a][b] = phi_slot(slot[a], slot[b], k);
            }
        }
        // Per-prime contribution to E under selector 1 at that prime.
        std::vector<int> contrib(omega_d, 0);
        for (int l = 0; l < omega_d; ++l) {
            int acc = 0;
            for (int q = 0; q < omega_d; ++q) {
                if (q != l) acc += phi[q][l] * base_exp[l][q];
            }
            contrib[l] = acc % 3;
        }
        // Character tuples: selector 2 at prime l doubles contrib[l] mod 3.
        const int free_lo = exhaustive ? 0 : 1;
        const std::uint32_t tuples = std::uint32_t(1) << (omega_d - free_lo);
        for (std::uint32_t mask = 0; mask < tuples; ++mask) {
            int e = 0;
            for (int l = 0; l < omega_d; ++l) {
                bool conjugated = l >= free_lo && (mask >> (l - free_lo)) & 1;
                e += conjugated ? 2 * contrib[l] : contrib[l];
            }
            sum.add(e % 3);
        }
        int pos = 0;
        while (pos < omega_d && ++slot[pos] == slots) slot[pos++] = 0;
        if (pos == omega_d) break;
    }

    BigInt total;
    if (exhaustive) {
        // A rational value is forced: the omega component must cancel.
        if (sum.y() != 0) return false;
        total = sum.x();
    } else {
        // Full sum = reps + conjugate(reps): (x + y w) + conj = 2x - y.
        total = 2 * sum.x() - sum.y();
    }

    BigInt expected = 2 * bigint_pow(BigInt(3), static_cast<unsigned>(k * (1 + omega_d))) * lhs;
    return total == expected;
}

}  // namespace cubrank
