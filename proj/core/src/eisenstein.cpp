#include "cubrank/eisenstein.hpp"

#include <cassert>
#include <ostream>
#include <sstream>
#include <vector>

#include "cubrank/errors.hpp"

namespace cubrank {

int CubeRoot::exponent() const {
    assert(!is_zero());
    return exp_;
}

std::string CubeRoot::str() const {
    if (is_zero()) return "0";
    switch (exp_) {
        case 0: return "1";
        case 1: return "w";
        default: return "w^2";
    }
}

std::ostream& operator<<(std::ostream& os, CubeRoot v) { return os << v.str(); }

bool EisensteinInt::is_primary() const {
    return (a_ - 1) % 3 == 0 && b_ % 3 == 0;
}

std::string EisensteinInt::str() const {
    std::ostringstream os;
    os << a_;
    if (b_ >= 0)
        os << "+" << b_ << "w";
    else
        os << b_ << "w";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) { return os << z.str(); }

const std::array<EisensteinInt, 6>& eisenstein_units() {
    // 1, -1, w, -w, w^2 = -1-w, -w^2 = 1+w
    static const std::array<EisensteinInt, 6> units = {
        EisensteinInt(1, 0),  EisensteinInt(-1, 0), EisensteinInt(0, 1),
        EisensteinInt(0, -1), EisensteinInt(-1, -1), EisensteinInt(1, 1)};
    return units;
}

namespace {

// Nearest integer to num/den for exact integers, den > 0.
BigInt round_div(const BigInt& num, const BigInt& den) {
    assert(den > 0);
    BigInt q = num / den;         // truncates toward zero
    BigInt r = num - q * den;
    if (2 * r >= den) ++q;
    if (2 * r <= -den) --q;
    return q;
}

}  // namespace

EisensteinInt euclidean_quotient(const EisensteinInt& x, const EisensteinInt& y) {
    assert(!y.is_zero());
    // x/y = x * conj(y) / N(y) in Q(omega); round both coordinates.
    EisensteinInt num = x * y.conj();
    BigInt n = y.norm();
    return EisensteinInt(round_div(num.a(), n), round_div(num.b(), n));
}

EisensteinInt euclidean_remainder(const EisensteinInt& x, const EisensteinInt& y) {
    return x - euclidean_quotient(x, y) * y;
}

EisensteinInt eisenstein_gcd(EisensteinInt x, EisensteinInt y) {
    while (!y.is_zero()) {
        EisensteinInt r = euclidean_remainder(x, y);
        x = y;
        y = r;
    }
    return x;
}

bool divides_exactly(const EisensteinInt& x, const EisensteinInt& y, EisensteinInt* quotient) {
    assert(!y.is_zero());
    EisensteinInt q = euclidean_quotient(x, y);
    if (x - q * y != EisensteinInt(0, 0)) return false;
    if (quotient) *quotient = q;
    return true;
}

EisensteinInt primary_associate(const EisensteinInt& z) {
    if (z.norm() % 3 == 0) {
        throw NonCoprimeToThreeError("primary_associate: norm of " + z.str() + " is divisible by 3");
    }
    for (const EisensteinInt& u : eisenstein_units()) {
        EisensteinInt w = u * z;
        if (w.is_primary()) return w;
    }
    // The six associates cover all unit residues mod 3, so one is always primary.
    throw InternalInvariantError("primary_associate: no primary associate of " + z.str());
}

std::uint64_t canonical_cube_root(std::uint64_t l) {
    if (l % 3 != 1) throw NotSplitError("canonical_cube_root: " + std::to_string(l) + " != 1 mod 3");
    std::uint64_t e = (l - 1) / 3;
    for (std::uint64_t a = 2; a < l; ++a) {
        std::uint64_t z = powmod_u64(a, e, l);
        if (z != 1) {
            std::uint64_t z2 = mulmod_u64(z, z, l);
            return z < z2 ? z : z2;
        }
    }
    throw InternalInvariantError("canonical_cube_root: no non-cube found mod " + std::to_string(l));
}

EisensteinInt factor_split_prime(std::uint64_t l) {
    if (!is_prime_u64(l)) throw NotPrimeError("factor_split_prime: " + std::to_string(l) + " is composite");
    if (l % 3 != 1) throw NotSplitError("factor_split_prime: " + std::to_string(l) + " != 1 mod 3");
    std::uint64_t z = canonical_cube_root(l);
    // (l, z - omega) generates the prime at which omega = z.
    EisensteinInt pi = eisenstein_gcd(EisensteinInt(BigInt(l), BigInt(0)),
                                      EisensteinInt(BigInt(z), BigInt(-1)));
    pi = primary_associate(pi);
    if (pi.norm() != l) {
        throw InternalInvariantError("factor_split_prime: gcd has wrong norm for l = " + std::to_string(l));
    }
    return pi;
}

namespace {

// Image of omega in Z[omega]/(pi) = F_l for primary prime pi of norm l:
// a + b*omega = 0 mod pi  =>  omega = -a/b.
std::uint64_t omega_image_mod(const EisensteinInt& pi, std::uint64_t l) {
    BigInt br = pi.b() % BigInt(l);
    std::uint64_t b = static_cast<std::uint64_t>((br + l) % l);
    assert(b != 0);
    std::uint64_t binv = powmod_u64(b, l - 2, l);
    BigInt ar = pi.a() % BigInt(l);
    std::uint64_t a = static_cast<std::uint64_t>((ar + l) % l);
    return mulmod_u64((l - a) % l, binv, l);
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t m) {
    BigInt r = x % BigInt(m);
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

// Symbol for a prime modulus of split norm l, evaluated through F_l.
CubeRoot symbol_split_prime(const EisensteinInt& x, const EisensteinInt& pi, std::uint64_t l) {
    std::uint64_t z = omega_image_mod(pi, l);
    std::uint64_t xr = (reduce_mod(x.a(), l) + mulmod_u64(reduce_mod(x.b(), l), z, l)) % l;
    if (xr == 0) return CubeRoot::zero();
    std::uint64_t t = powmod_u64(xr, (l - 1) / 3, l);
    if (t == 1) return CubeRoot::omega(0);
    if (t == z) return CubeRoot::omega(1);
    std::uint64_t z2 = mulmod_u64(z, z, l);
    if (t == z2) return CubeRoot::omega(2);
    throw InternalInvariantError("cubic_residue_symbol: Euler value not a cube root of unity");
}

// Symbol for an inert rational prime modulus q (q = 2 mod 3): arithmetic in
// Z[omega]/(q) = F_{q^2}.
CubeRoot symbol_inert_prime(const EisensteinInt& x, std::uint64_t q) {
    std::uint64_t a = reduce_mod(x.a(), q), b = reduce_mod(x.b(), q);
    if (a == 0 && b == 0) return CubeRoot::zero();
    // x^((q^2-1)/3) by square and multiply on coefficient pairs.
    auto mul = [q](std::pair<std::uint64_t, std::uint64_t> u, std::pair<std::uint64_t, std::uint64_t> v) {
        std::uint64_t ac = mulmod_u64(u.first, v.first, q);
        std::uint64_t bd = mulmod_u64(u.second, v.second, q);
        std::uint64_t ad_bc = (mulmod_u64(u.first, v.second, q) + mulmod_u64(u.second, v.first, q)) % q;
        return std::make_pair((ac + q - bd) % q, (ad_bc + q - bd) % q);
    };
    std::pair<std::uint64_t, std::uint64_t> acc{1, 0}, base{a, b};
    std::uint64_t e = (q * q - 1) / 3;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    if (acc == std::make_pair<std::uint64_t, std::uint64_t>(1, 0)) return CubeRoot::omega(0);
    if (acc == std::make_pair<std::uint64_t, std::uint64_t>(0, 1)) return CubeRoot::omega(1);
    if (acc == std::make_pair(q - 1, q - 1)) return CubeRoot::omega(2);  // w^2 = -1 - w
    if (acc.first == 0 && acc.second == 0) return CubeRoot::zero();
    throw InternalInvariantError("cubic_residue_symbol: inert Euler value not a cube root of unity");
}

}  // namespace

CubeRoot cubic_residue_symbol(const EisensteinInt& x, const EisensteinInt& m) {
    if (m.norm() % 3 == 0) {
        throw InvalidModulusError("cubic_residue_symbol: modulus norm divisible by 3");
    }
    if (!m.is_primary()) {
        throw InvalidModulusError("cubic_residue_symbol: modulus " + m.str() + " is not primary");
    }
    if (m.is_unit()) return CubeRoot::one();

    BigInt n = m.norm();
    if (n > BigInt(std::uint64_t(1) << 62)) {
        throw TooLargeError("cubic_residue_symbol: modulus norm exceeds factorization bound");
    }
    std::uint64_t nn = static_cast<std::uint64_t>(n);

    if (is_prime_u64(nn) && nn % 3 == 1) {
        return symbol_split_prime(x, m, nn);
    }

    // Composite (or inert-power) modulus: factor N(m) by trial division and
    // peel primary prime factors off m, multiplying the per-factor symbols.
    std::vector<std::uint64_t> norm_primes;
    {
        std::uint64_t tmp = nn;
        for (std::uint64_t p = 2; p * p <= tmp; ++p) {
            if (tmp % p == 0) {
                norm_primes.push_back(p);
                while (tmp % p == 0) tmp /= p;
            }
        }
        if (tmp > 1) norm_primes.push_back(tmp);
    }

    CubeRoot result = CubeRoot::one();
    EisensteinInt rest = m;
    for (std::uint64_t p : norm_primes) {
        if (p % 3 == 1) {
            EisensteinInt pi = factor_split_prime(p);
            EisensteinInt pib = primary_associate(pi.conj());
            for (const EisensteinInt& fac : {pi, pib}) {
                EisensteinInt q;
                while (divides_exactly(rest, fac, &q)) {
                    rest = q;
                    result = result * symbol_split_prime(x, fac, p);
                }
            }
        } else {
            // Inert prime (p = 2 mod 3): -p is the primary generator.
            EisensteinInt fac(BigInt(0) - BigInt(p), BigInt(0));
            EisensteinInt q;
            while (divides_exactly(rest, fac, &q)) {
                rest = q;
                result = result * symbol_inert_prime(x, p);
            }
        }
    }
    if (rest.norm() != 1) {
        throw InternalInvariantError("cubic_residue_symbol: incomplete factorization of modulus");
    }
    return result;
}

}  // namespace cubrank
