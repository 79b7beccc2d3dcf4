#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubrank/numeric.hpp"

namespace cubrank {

/// A cube root of unity together with a distinguished absorbing Zero value.
///
/// Non-zero values are represented by their exponent in {0, 1, 2}; arithmetic
/// is exact exponent arithmetic mod 3, never floating point.
class CubeRoot {
public:
    CubeRoot() : exp_(0) {}

    static CubeRoot one() { return CubeRoot(0); }
    static CubeRoot omega(int exponent) { return CubeRoot(((exponent % 3) + 3) % 3); }
    static CubeRoot zero() {
        CubeRoot z(0);
        z.exp_ = kZero;
        return z;
    }

    bool is_zero() const { return exp_ == kZero; }
    bool is_one() const { return exp_ == 0; }

    /// Exponent in {0,1,2}; undefined when zero (asserted).
    int exponent() const;

    CubeRoot conj() const { return is_zero() ? *this : omega(-exp_); }

    CubeRoot pow(long long e) const {
        if (is_zero()) return *this;
        long long r = ((exp_ * e) % 3 + 3) % 3;
        return omega(static_cast<int>(r));
    }

    friend CubeRoot operator*(CubeRoot a, CubeRoot b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return omega(a.exp_ + b.exp_);
    }

    friend bool operator==(CubeRoot a, CubeRoot b) { return a.exp_ == b.exp_; }
    friend bool operator!=(CubeRoot a, CubeRoot b) { return !(a == b); }

    std::string str() const;

private:
    explicit CubeRoot(int e) : exp_(e) {}
    static constexpr int kZero = -1;
    int exp_;
};

std::ostream& operator<<(std::ostream& os, CubeRoot v);

/// Element a + b*omega of Z[omega], omega a fixed primitive cube root of unity
/// with omega^2 = -1 - omega. All arithmetic is reduced in the {1, omega} basis.
class EisensteinInt {
public:
    EisensteinInt() : a_(0), b_(0) {}
    EisensteinInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}
    EisensteinInt(long long a, long long b) : a_(a), b_(b) {}

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_unit() const { return norm() == 1; }

    /// a^2 - a*b + b^2; multiplicative and nonnegative.
    BigInt norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    /// a + b*omega  ->  (a - b) - b*omega.
    EisensteinInt conj() const { return EisensteinInt(a_ - b_, -b_); }

    /// Congruent to 1 mod 3 (a = 1, b = 0 mod 3).
    bool is_primary() const;

    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
        return EisensteinInt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
        return EisensteinInt(x.a_ - y.a_, x.b_ - y.b_);
    }
    EisensteinInt operator-() const { return EisensteinInt(-a_, -b_); }

    // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w   using w^2 = -1 - w.
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        BigInt ac = x.a_ * y.a_, bd = x.b_ * y.b_;
        return EisensteinInt(ac - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd);
    }

    friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const EisensteinInt& x, const EisensteinInt& y) { return !(x == y); }

    std::string str() const;

private:
    BigInt a_, b_;
};

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

/// The six units of Z[omega]: +-1, +-omega, +-omega^2.
const std::array<EisensteinInt, 6>& eisenstein_units();

/// Nearest-integer Euclidean division: x = q*y + r with N(r) < N(y).
EisensteinInt euclidean_quotient(const EisensteinInt& x, const EisensteinInt& y);

/// Remainder of the division above.
EisensteinInt euclidean_remainder(const EisensteinInt& x, const EisensteinInt& y);

/// Euclidean gcd, defined up to units.
EisensteinInt eisenstein_gcd(EisensteinInt x, EisensteinInt y);

/// True iff y divides x exactly; on success *quotient receives x / y.
bool divides_exactly(const EisensteinInt& x, const EisensteinInt& y, EisensteinInt* quotient);

/// The unique associate of z congruent to 1 mod 3.
/// Throws NonCoprimeToThreeError when 3 divides N(z). Idempotent.
EisensteinInt primary_associate(const EisensteinInt& z);

/// The canonical primary prime over a split rational prime l (l = 1 mod 3):
/// of the two conjugate primary primes, the one whose residue image of omega
/// is the smaller root of x^2 + x + 1 in F_l.
/// Throws NotSplitError / NotPrimeError.
EisensteinInt factor_split_prime(std::uint64_t l);

/// The cube root of unity in F_l attached to factor_split_prime(l), i.e. the
/// smaller of the two roots of x^2 + x + 1 mod l.
std::uint64_t canonical_cube_root(std::uint64_t l);

/// Cubic residue symbol (x / m)_3 for primary m with N(m) coprime to 3.
///
/// For prime m it is omega^j with x^((N(m)-1)/3) = omega^j mod m when x is
/// coprime to m, and Zero otherwise; for composite primary m it is the product
/// over the prime factors of m. Throws InvalidModulusError.
CubeRoot cubic_residue_symbol(const EisensteinInt& x, const EisensteinInt& m);

}  // namespace cubrank
