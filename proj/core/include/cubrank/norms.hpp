#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubrank/fields.hpp"
#include "cubrank/numeric.hpp"

namespace cubrank {

/// Divisor of the discriminant represented by one exponent in {0,1,2} per
/// ramified prime; there are exactly 3^r of them per field.
struct NormDivisor {
    std::vector<std::uint8_t> exponents;  // parallel to ramified_primes

    std::uint64_t value(const Conductor& conductor) const;
};

/// Output row of the per-field rank computation.
struct RankRecord {
    std::uint64_t conductor = 0;
    std::string char_signature;
    int r = 0;  // number of ramified primes
    int m = 0;  // count of everywhere-local-norm divisors
    int s = 0;  // rank: log_3(m / 3)
};

/// All 3^r exponent vectors for the field's conductor, odometer order.
std::vector<NormDivisor> norm_divisors(const CyclicCubicField& field);

/// Local norm test at a ramified prime l via the idele character:
/// with v the exponent of l in b, checks
///   chi_l(b / l^v) * prod_{q != l} chi_q(l)^{-v} = 1,
/// all in exact exponent arithmetic mod 3. Throws NotRamifiedError.
bool is_local_norm(const CyclicCubicField& field, const NormDivisor& b, std::uint64_t l);

/// m = number of norm divisors that are local norms at every ramified prime.
int count_norm_divisors(const CyclicCubicField& field);

/// s = log_3(m / 3). Throws InternalInvariantError when m/3 is not a power of
/// 3 (that would be an implementation bug, never valid data).
int rank_im_phi(const CyclicCubicField& field);

RankRecord rank_record(const CyclicCubicField& field);

enum class CharSumMode {
    exhaustive_tuples,      // sum over all (p-1)^{omega(D)} character tuples
    orbit_representatives,  // fix the first prime's selector, fold in the conjugate orbit
};

/// Exact verification of the character-sum identity for a squarefree
/// admissible D (product of primes = 1 mod 3 and/or the prime 3) and k >= 1:
///
///   sum over fields K of conductor matching D of |im phi|^k
///     = 1/(2 * 3^k * 3^{k*omega(D)}) * sum over ordered coprime 9^k-slot
///       factorizations of D and character tuples of
///       prod_v prod_{l | D_v} chi_l( prod_u D_u^{Phi_k(u, v)} )
///
/// The right side is accumulated in Z[omega] and compared exactly; the cost
/// grows as (9^k * 2)^{omega(D)}. Throws InadmissibleDError.
bool verify_character_sum_identity(std::uint64_t d, int k,
                                   CharSumMode mode = CharSumMode::orbit_representatives);

namespace detail {

/// Exponent table of the field's local characters on each other's primes:
/// entry (i, j) is the exponent of chi_{l_i}(l_j) for i != j (diagonal 0).
std::vector<std::vector<int>> local_character_matrix(const CyclicCubicField& field);

/// Count of everywhere-local-norm divisors given the precomputed matrix.
int count_norm_divisors_with_matrix(const std::vector<std::vector<int>>& mat);

}  // namespace detail

}  // namespace cubrank
