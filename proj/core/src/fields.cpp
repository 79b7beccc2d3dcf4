#include "cubrank/fields.hpp"

#include <algorithm>
#include <cassert>

#include "cubrank/errors.hpp"

namespace cubrank {

std::string char_signature(const CyclicCubicField& field) {
    std::string s;
    s.reserve(field.selectors.size());
    for (std::uint8_t sel : field.selectors) s.push_back(static_cast<char>('0' + sel));
    return s;
}

ConductorTable::ConductorTable(std::uint64_t max_value) : max_value_(max_value) {
    if (max_value > (std::uint64_t(1) << 31)) {
        throw TooLargeError("ConductorTable: sieve bound above 2^31 not supported");
    }
    spf_.assign(max_value + 1, 0);
    for (std::uint64_t i = 2; i <= max_value; ++i) {
        if (spf_[i] == 0) {
            for (std::uint64_t j = i; j <= max_value; j += i) {
                if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
}

bool ConductorTable::admissible(std::uint64_t f, std::vector<std::uint64_t>& primes_out) const {
    assert(f <= max_value_);
    primes_out.clear();
    if (f < 7) return false;
    std::uint64_t n = f;
    bool has_wild = false;
    while (n > 1) {
        std::uint64_t p = spf_[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p == 3) {
            if (e != 2) return false;  // wild factor must be exactly 9
            has_wild = true;
        } else {
            if (e != 1 || p % 3 != 1) return false;
        }
        primes_out.push_back(p);
    }
    (void)has_wild;
    std::sort(primes_out.begin(), primes_out.end());
    return true;
}

void for_each_conductor(const ConductorTable& table, std::uint64_t lo, std::uint64_t hi,
                        const std::function<bool(const Conductor&)>& fn) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t f = std::max<std::uint64_t>(lo, 7); f <= hi; ++f) {
        if (!table.admissible(f, primes)) continue;
        Conductor c;
        c.value = f;
        c.ramified_primes = primes;
        if (!fn(c)) return;
    }
}

std::vector<Conductor> enumerate_conductors(std::uint64_t bound) {
    std::vector<Conductor> result;
    if (bound < 7) return result;
    ConductorTable table(bound);
    for_each_conductor(table, 7, bound, [&](const Conductor& c) {
        result.push_back(c);
        return true;
    });
    return result;
}

std::vector<CyclicCubicField> fields_for_conductor(const Conductor& conductor) {
    const int r = conductor.num_ramified();
    assert(r >= 1);
    std::vector<CyclicCubicField> fields;
    fields.reserve(std::size_t(1) << (r - 1));
    // Selector at the smallest prime is pinned to 1; the rest run over {1,2}
    // in lexicographic order.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (r - 1)); ++mask) {
        CyclicCubicField field;
        field.conductor = conductor;
        field.selectors.assign(r, 1);
        for (int i = 1; i < r; ++i) {
            if (mask & (std::uint64_t(1) << (r - 1 - i))) field.selectors[i] = 2;
        }
        fields.push_back(std::move(field));
    }
    return fields;
}

namespace detail {

int base_character_exponent(std::uint64_t l, std::uint64_t x_mod) {
    if (l == 3) {
        // Order-3 character mod 9 with chi(2) = omega; index of x in <2> mod 9.
        static constexpr int index_mod9[9] = {-1, 0, 1, -1, 2, 5, -1, 4, 3};
        std::uint64_t x9 = x_mod % 9;
        int ind = index_mod9[x9];
        if (ind < 0) return -1;
        return ind % 3;
    }
    std::uint64_t x = x_mod % l;
    if (x == 0) return -1;
    std::uint64_t z = canonical_cube_root(l);
    std::uint64_t t = powmod_u64(x, (l - 1) / 3, l);
    if (t == 1) return 0;
    if (t == z) return 1;
    assert(t == mulmod_u64(z, z, l));
    return 2;
}

}  // namespace detail

int local_character_exponent(const CyclicCubicField& field, std::uint64_t l, long long x) {
    const auto& primes = field.conductor.ramified_primes;
    auto it = std::find(primes.begin(), primes.end(), l);
    if (it == primes.end()) {
        throw NotRamifiedError("local character: " + std::to_string(l) + " does not ramify in conductor " +
                               std::to_string(field.conductor.value));
    }
    std::uint64_t modulus = (l == 3) ? 9 : l;
    long long xr = x % static_cast<long long>(modulus);
    if (xr < 0) xr += static_cast<long long>(modulus);
    int base = detail::base_character_exponent(l, static_cast<std::uint64_t>(xr));
    std::uint8_t sel = field.selectors[static_cast<std::size_t>(it - primes.begin())];
    return detail::apply_selector(base, sel);
}

CubeRoot local_character_eval(const CyclicCubicField& field, std::uint64_t l, long long x) {
    int e = local_character_exponent(field, l, x);
    return e < 0 ? CubeRoot::zero() : CubeRoot::omega(e);
}

}  // namespace cubrank
