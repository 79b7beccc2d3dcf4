#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cubrank/eisenstein.hpp"

namespace cubrank {

/// Conductor of a cyclic cubic field: a squarefree product of primes = 1 mod 3,
/// optionally times 9. The wild prime is recorded as 3 (listed once when
/// 9 | value); the discriminant is value^2.
struct Conductor {
    std::uint64_t value = 0;
    std::vector<std::uint64_t> ramified_primes;  // sorted ascending

    int num_ramified() const { return static_cast<int>(ramified_primes.size()); }
};

/// A cyclic cubic field, represented by its conductor and one cubic character
/// choice per ramified prime, never by a defining polynomial.
///
/// selector 1 at a tame prime l is the residue-symbol character attached to
/// the canonical primary prime over l (see factor_split_prime); selector 2 is
/// its conjugate. At l = 3 the two order-3 characters mod 9 are selector 1
/// (chi(2) = omega) and selector 2 (chi(2) = omega^2).
///
/// Canonical orbit representative: the selector at the smallest ramified
/// prime is 1, which kills the global chi ~ chi^2 identification.
struct CyclicCubicField {
    Conductor conductor;
    std::vector<std::uint8_t> selectors;  // parallel to ramified_primes, each 1 or 2

    int num_ramified() const { return conductor.num_ramified(); }
};

/// Selector digits as a string, e.g. "12" for a two-prime conductor.
std::string char_signature(const CyclicCubicField& field);

/// Smallest-prime-factor sieve with admissibility lookups, shared by the
/// enumeration and the scan harness.
class ConductorTable {
public:
    explicit ConductorTable(std::uint64_t max_value);

    std::uint64_t max_value() const { return max_value_; }

    /// True iff f is an admissible conductor; fills the sorted ramified primes.
    bool admissible(std::uint64_t f, std::vector<std::uint64_t>& primes_out) const;

    bool admissible(std::uint64_t f) const {
        std::vector<std::uint64_t> tmp;
        return admissible(f, tmp);
    }

private:
    std::uint64_t max_value_;
    std::vector<std::uint32_t> spf_;
};

/// Every admissible conductor f with lo <= f <= hi, in increasing order.
/// The callback may return false to stop early.
void for_each_conductor(const ConductorTable& table, std::uint64_t lo, std::uint64_t hi,
                        const std::function<bool(const Conductor&)>& fn);

/// All admissible conductors up to bound, increasing. Smallest conductor is 7.
std::vector<Conductor> enumerate_conductors(std::uint64_t bound);

/// The 2^{r-1} canonical character-orbit representatives for a conductor,
/// ordered lexicographically by selector tuple.
std::vector<CyclicCubicField> fields_for_conductor(const Conductor& conductor);

/// Exponent of the local character of `field` at ramified prime l, evaluated
/// at an integer x: returns -1 for Zero (gcd(x, l) != 1), else the exponent
/// j in {0,1,2} with chi_l(x) = omega^j. Throws NotRamifiedError.
int local_character_exponent(const CyclicCubicField& field, std::uint64_t l, long long x);

/// chi_l(x) as a CubeRoot. Throws NotRamifiedError when l is not ramified.
CubeRoot local_character_eval(const CyclicCubicField& field, std::uint64_t l, long long x);

namespace detail {

/// Exponent of the base (selector 1) cubic character mod l at x, or -1 if Zero.
/// For l = 3 the character lives mod 9.
int base_character_exponent(std::uint64_t l, std::uint64_t x_mod);

/// Apply a selector to a base exponent: selector 2 conjugates (doubles mod 3).
inline int apply_selector(int base_exp, std::uint8_t selector) {
    if (base_exp < 0) return base_exp;
    return selector == 1 ? base_exp : (2 * base_exp) % 3;
}

}  // namespace detail

}  // namespace cubrank
