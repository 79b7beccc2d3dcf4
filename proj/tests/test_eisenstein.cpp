#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cubrank/eisenstein.hpp"
#include "cubrank/errors.hpp"

using namespace cubrank;

namespace {

// Oracle: primary associate by exhaustive trial of the six units.
EisensteinInt brute_primary(const EisensteinInt& z) {
    std::vector<EisensteinInt> hits;
    for (const EisensteinInt& u : eisenstein_units()) {
        EisensteinInt w = u * z;
        if (w.is_primary()) hits.push_back(w);
    }
    REQUIRE(hits.size() == 1);
    return hits[0];
}

// Oracle: all primary elements of norm l by bounded coefficient search.
std::vector<EisensteinInt> brute_norm_solutions(std::uint64_t l) {
    std::vector<EisensteinInt> out;
    long long bound = 2 + static_cast<long long>(2.0 * std::sqrt(static_cast<double>(l)));
    for (long long a = -bound; a <= bound; ++a) {
        for (long long b = -bound; b <= bound; ++b) {
            EisensteinInt z(a, b);
            if (z.norm() == l && z.is_primary()) out.push_back(z);
        }
    }
    return out;
}

// Oracle: Euler criterion computed entirely inside Z[omega]: x^((N(pi)-1)/3)
// mod pi, identified against 1, omega, omega^2 by exact divisibility.
CubeRoot euler_oracle(const EisensteinInt& x, const EisensteinInt& pi) {
    BigInt e = (pi.norm() - 1) / 3;
    EisensteinInt acc(1, 0), base = euclidean_remainder(x, pi);
    if (eisenstein_gcd(base, pi).norm() != 1) return CubeRoot::zero();
    while (e > 0) {
        if (e % 2 == 1) acc = euclidean_remainder(acc * base, pi);
        base = euclidean_remainder(base * base, pi);
        e /= 2;
    }
    const EisensteinInt candidates[3] = {EisensteinInt(1, 0), EisensteinInt(0, 1),
                                         EisensteinInt(-1, -1)};
    for (int j = 0; j < 3; ++j) {
        if (divides_exactly(acc - candidates[j], pi, nullptr)) return CubeRoot::omega(j);
    }
    FAIL("Euler value is not a cube root of unity");
    return CubeRoot::zero();
}

std::vector<std::uint64_t> split_primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 7; l < bound; ++l) {
        if (l % 3 == 1 && is_prime_u64(l)) out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("norm values") {
    CHECK(EisensteinInt(1, 0).norm() == 1);
    CHECK(EisensteinInt(3, 1).norm() == 7);
    CHECK(EisensteinInt(4, 1).norm() == 13);
    CHECK(EisensteinInt(0, 0).norm() == 0);
    CHECK(EisensteinInt(-2, -3).norm() == 7);
}

TEST_CASE("norm is multiplicative and conjugation-invariant") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> d(-50, 50);
    for (int i = 0; i < 500; ++i) {
        EisensteinInt x(d(rng), d(rng)), y(d(rng), d(rng));
        CHECK((x * y).norm() == x.norm() * y.norm());
        CHECK(x.conj().norm() == x.norm());
        CHECK(x.conj().conj() == x);
    }
}

TEST_CASE("primary associate") {
    CHECK(primary_associate(EisensteinInt(1, 0)) == EisensteinInt(1, 0));
    CHECK(primary_associate(EisensteinInt(3, 1)) == brute_primary(EisensteinInt(3, 1)));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-80, 80);
    int done = 0;
    while (done < 300) {
        EisensteinInt z(d(rng), d(rng));
        if (z.is_zero() || z.norm() % 3 == 0) continue;
        ++done;
        EisensteinInt p = primary_associate(z);
        CHECK(p == brute_primary(z));
        CHECK(primary_associate(p) == p);  // idempotent
        CHECK(p.norm() == z.norm());
    }

    CHECK_THROWS_AS(primary_associate(EisensteinInt(1, 2)), NonCoprimeToThreeError);  // norm 3
    CHECK_THROWS_AS(primary_associate(EisensteinInt(3, 0)), NonCoprimeToThreeError);
}

TEST_CASE("factor_split_prime") {
    for (std::uint64_t l : split_primes_below(300)) {
        CAPTURE(l);
        EisensteinInt pi = factor_split_prime(l);
        CHECK(pi.norm() == l);
        CHECK(pi.is_primary());
        // one of the two primary solutions found by brute search
        auto sols = brute_norm_solutions(l);
        CHECK(sols.size() == 2);
        CHECK((pi == sols[0] || pi == sols[1]));
        std::uint64_t z = canonical_cube_root(l);
        CHECK((mulmod_u64(z, z, l) + z + 1) % l == 0);
        CHECK(z < mulmod_u64(z, z, l));  // canonical = smaller root
        // pi divides z - omega
        CHECK(divides_exactly(EisensteinInt(BigInt(z), BigInt(-1)), pi, nullptr));
    }
    CHECK_THROWS_AS(factor_split_prime(5), NotSplitError);
    CHECK_THROWS_AS(factor_split_prime(11), NotSplitError);
    CHECK_THROWS_AS(factor_split_prime(91), NotPrimeError);
}

TEST_CASE("symbol of 1 and of non-coprime arguments") {
    for (std::uint64_t l : {7ull, 13ull, 19ull, 31ull}) {
        EisensteinInt pi = factor_split_prime(l);
        CHECK(cubic_residue_symbol(EisensteinInt(1, 0), pi) == CubeRoot::one());
        CHECK(cubic_residue_symbol(EisensteinInt(BigInt(l), BigInt(0)), pi).is_zero());
        CHECK(cubic_residue_symbol(pi, pi).is_zero());
    }
}

TEST_CASE("Euler criterion equals cube table for split primes below 1000") {
    for (std::uint64_t l : split_primes_below(1000)) {
        CAPTURE(l);
        std::vector<bool> is_cube(l, false);
        for (std::uint64_t x = 1; x < l; ++x) is_cube[mulmod_u64(mulmod_u64(x, x, l), x, l)] = true;
        EisensteinInt pi = factor_split_prime(l);
        for (std::uint64_t x = 1; x < l; ++x) {
            CubeRoot sym = cubic_residue_symbol(EisensteinInt(BigInt(x), BigInt(0)), pi);
            REQUIRE(!sym.is_zero());
            if (sym.is_one() != is_cube[x]) {
                CAPTURE(x);
                FAIL_CHECK("cube-table mismatch");
            }
        }
    }
}

TEST_CASE("symbol agrees with the in-ring Euler oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> d(-60, 60);
    for (std::uint64_t l : split_primes_below(250)) {
        EisensteinInt pi = factor_split_prime(l);
        for (int i = 0; i < 10; ++i) {
            EisensteinInt x(d(rng), d(rng));
            CHECK(cubic_residue_symbol(x, pi) == euler_oracle(x, pi));
        }
    }
    // the primary prime over 7 with argument 2 gives a primitive value
    EisensteinInt pi7 = factor_split_prime(7);
    CubeRoot v = cubic_residue_symbol(EisensteinInt(2, 0), pi7);
    CHECK(!v.is_zero());
    CHECK(!v.is_one());
    CHECK(v == euler_oracle(EisensteinInt(2, 0), pi7));
}

TEST_CASE("multiplicativity in the argument") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> d(-40, 40);
    for (std::uint64_t l : split_primes_below(120)) {
        EisensteinInt pi = factor_split_prime(l);
        int done = 0;
        while (done < 40) {
            EisensteinInt x(d(rng), d(rng)), y(d(rng), d(rng));
            CubeRoot sx = cubic_residue_symbol(x, pi);
            CubeRoot sy = cubic_residue_symbol(y, pi);
            if (sx.is_zero() || sy.is_zero()) continue;
            ++done;
            CHECK(cubic_residue_symbol(x * y, pi) == sx * sy);
        }
    }
}

TEST_CASE("conjugation law: squaring the symbol conjugates it") {
    for (std::uint64_t l : split_primes_below(200)) {
        EisensteinInt pi = factor_split_prime(l);
        for (std::uint64_t x = 1; x < l; ++x) {
            EisensteinInt xe(BigInt(x), BigInt(0));
            CubeRoot s = cubic_residue_symbol(xe, pi);
            CHECK(s * s == s.conj());
            CHECK(s * s == cubic_residue_symbol(xe * xe, pi));
            // conjugating argument and modulus conjugates the value
            CHECK(cubic_residue_symbol(xe.conj(), primary_associate(pi.conj())) == s.conj());
        }
    }
}

TEST_CASE("composite primary modulus multiplies over factors") {
    EisensteinInt pi7 = factor_split_prime(7);
    EisensteinInt pi13 = factor_split_prime(13);
    EisensteinInt m = pi7 * pi13;
    REQUIRE(m.is_primary());
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long long> d(-30, 30);
    for (int i = 0; i < 200; ++i) {
        EisensteinInt x(d(rng), d(rng));
        CHECK(cubic_residue_symbol(x, m) ==
              cubic_residue_symbol(x, pi7) * cubic_residue_symbol(x, pi13));
    }
    // repeated factors too
    EisensteinInt m2 = pi7 * pi7 * pi13;
    REQUIRE(m2.is_primary());
    for (int i = 0; i < 50; ++i) {
        EisensteinInt x(d(rng), d(rng));
        CubeRoot s7 = cubic_residue_symbol(x, pi7);
        CHECK(cubic_residue_symbol(x, m2) == s7 * s7 * cubic_residue_symbol(x, pi13));
    }
}

TEST_CASE("invalid moduli are rejected") {
    CHECK_THROWS_AS(cubic_residue_symbol(EisensteinInt(2, 0), EisensteinInt(3, 1)),
                    InvalidModulusError);  // norm 7 but not primary
    CHECK_THROWS_AS(cubic_residue_symbol(EisensteinInt(2, 0), EisensteinInt(1, 2)),
                    InvalidModulusError);  // norm 3
}

TEST_CASE("cubic reciprocity for primary primes") {
    auto primes = split_primes_below(150);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            EisensteinInt pu = factor_split_prime(primes[i]);
            EisensteinInt pv = factor_split_prime(primes[j]);
            CHECK(cubic_residue_symbol(pu, pv) == cubic_residue_symbol(pv, pu));
        }
    }
}

TEST_CASE("norm chain rewrite for primary primes") {
    // (N(u)/v)(N(v)/u) = (conj(u)/conj(v))
    auto primes = split_primes_below(100);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            EisensteinInt pu = factor_split_prime(primes[i]);
            EisensteinInt pv = primary_associate(factor_split_prime(primes[j]).conj());
            CubeRoot lhs = cubic_residue_symbol(EisensteinInt(pu.norm(), BigInt(0)), pv) *
                           cubic_residue_symbol(EisensteinInt(pv.norm(), BigInt(0)), pu);
            CubeRoot rhs = cubic_residue_symbol(pu.conj(), pv.conj());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("gcd and exact division") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long long> d(-60, 60);
    for (int i = 0; i < 300; ++i) {
        EisensteinInt x(d(rng), d(rng)), y(d(rng), d(rng));
        if (y.is_zero()) continue;
        EisensteinInt q = euclidean_quotient(x, y);
        EisensteinInt r = x - q * y;
        CHECK(r.norm() < y.norm());
        if (!x.is_zero()) {
            EisensteinInt g = eisenstein_gcd(x, y);
            CHECK(divides_exactly(x, g, nullptr));
            CHECK(divides_exactly(y, g, nullptr));
        }
        EisensteinInt prod = x * y, quot;
        CHECK(divides_exactly(prod, y, &quot));
        CHECK(quot == x);
    }
}
