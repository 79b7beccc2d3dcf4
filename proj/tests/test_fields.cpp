#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "cubrank/eisenstein.hpp"
#include "cubrank/errors.hpp"
#include "cubrank/fields.hpp"

using namespace cubrank;

namespace {

// Oracle: admissibility by plain trial division, no sieve.
bool oracle_admissible(std::uint64_t f, std::vector<std::uint64_t>* primes_out = nullptr) {
    if (f < 7) return false;
    std::vector<std::uint64_t> primes;
    std::uint64_t n = f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p == 3) {
            if (e != 2) return false;
        } else if (e != 1 || p % 3 != 1) {
            return false;
        }
        primes.push_back(p);
    }
    if (n > 1) {
        if (n % 3 != 1) return false;
        primes.push_back(n);
    }
    if (primes_out) {
        std::sort(primes.begin(), primes.end());
        *primes_out = primes;
    }
    return true;
}

}  // namespace

TEST_CASE("enumerate_conductors examples") {
    CHECK(enumerate_conductors(6).empty());

    auto up10 = enumerate_conductors(10);
    REQUIRE(up10.size() == 2);
    CHECK(up10[0].value == 7);
    CHECK(up10[1].value == 9);
    CHECK(up10[1].ramified_primes == std::vector<std::uint64_t>{3});

    auto up65 = enumerate_conductors(65);
    bool saw63 = false;
    for (const Conductor& c : up65) {
        if (c.value == 63) {
            saw63 = true;
            CHECK(c.ramified_primes == std::vector<std::uint64_t>{3, 7});
        }
        CHECK(c.value <= 65);
    }
    CHECK(saw63);

    // increasing, no duplicates
    for (std::size_t i = 1; i < up65.size(); ++i) CHECK(up65[i - 1].value < up65[i].value);
}

TEST_CASE("enumeration agrees with the trial-division oracle up to 10^4") {
    auto conductors = enumerate_conductors(10000);
    std::set<std::uint64_t> ours;
    for (const Conductor& c : conductors) {
        ours.insert(c.value);
        std::vector<std::uint64_t> primes;
        REQUIRE(oracle_admissible(c.value, &primes));
        CHECK(primes == c.ramified_primes);
    }
    std::uint64_t field_count = 0, oracle_count = 0;
    for (std::uint64_t f = 1; f <= 10000; ++f) {
        CHECK(oracle_admissible(f) == (ours.count(f) == 1));
        if (oracle_admissible(f)) {
            std::vector<std::uint64_t> primes;
            oracle_admissible(f, &primes);
            oracle_count += std::uint64_t(1) << (primes.size() - 1);
        }
    }
    for (const Conductor& c : conductors) field_count += fields_for_conductor(c).size();
    CHECK(field_count == oracle_count);
}

TEST_CASE("fields_for_conductor counts and canonical selectors") {
    auto one = fields_for_conductor(enumerate_conductors(7).back());
    CHECK(one.size() == 1);
    CHECK(one[0].selectors == std::vector<std::uint8_t>{1});

    Conductor c91;
    c91.value = 91;
    c91.ramified_primes = {7, 13};
    auto two = fields_for_conductor(c91);
    REQUIRE(two.size() == 2);
    CHECK(char_signature(two[0]) == "11");
    CHECK(char_signature(two[1]) == "12");

    Conductor c3;  // 7 * 13 * 31 = 2821
    c3.value = 2821;
    c3.ramified_primes = {7, 13, 31};
    auto four = fields_for_conductor(c3);
    REQUIRE(four.size() == 4);
    std::vector<std::string> sigs;
    for (const auto& f : four) sigs.push_back(char_signature(f));
    CHECK(sigs == std::vector<std::string>{"111", "112", "121", "122"});
    for (const auto& f : four) CHECK(f.selectors[0] == 1);  // canonical representative
}

TEST_CASE("local character eval") {
    Conductor c91;
    c91.value = 91;
    c91.ramified_primes = {7, 13};
    auto fields = fields_for_conductor(c91);

    for (const auto& f : fields) {
        CHECK(local_character_eval(f, 7, 1) == CubeRoot::one());
        CHECK(local_character_eval(f, 13, 1) == CubeRoot::one());
        CHECK(local_character_eval(f, 7, 14).is_zero());
        CHECK(local_character_eval(f, 13, 26).is_zero());
        CHECK_THROWS_AS(local_character_eval(f, 19, 2), NotRamifiedError);

        // cubes evaluate to 1 (cube-table oracle)
        for (std::uint64_t l : {7ull, 13ull}) {
            std::set<std::uint64_t> cubes;
            for (std::uint64_t x = 1; x < l; ++x) cubes.insert(x * x % l * x % l);
            for (std::uint64_t x = 1; x < l; ++x) {
                CHECK(local_character_eval(f, l, static_cast<long long>(x)).is_one() ==
                      (cubes.count(x) == 1));
            }
        }
        // multiplicative, and negative arguments reduce correctly
        for (long long x = 1; x < 7; ++x) {
            CHECK(local_character_eval(f, 7, -x) == local_character_eval(f, 7, 7 - x));
            for (long long y = 1; y < 7; ++y) {
                CHECK(local_character_eval(f, 7, x * y) ==
                      local_character_eval(f, 7, x) * local_character_eval(f, 7, y));
            }
        }
    }

    // the two selectors at a prime give conjugate characters
    CHECK(local_character_eval(fields[0], 13, 2) ==
          local_character_eval(fields[1], 13, 2).conj());
    // both are nontrivial somewhere
    bool nontrivial = false;
    for (std::uint64_t x = 1; x < 13; ++x) {
        if (!local_character_eval(fields[0], 13, static_cast<long long>(x)).is_one())
            nontrivial = true;
    }
    CHECK(nontrivial);
}

TEST_CASE("tame characters are residue symbols at the canonical prime") {
    // selector 1 is the symbol at the canonical primary prime over l,
    // selector 2 its conjugate
    for (std::uint64_t l : {7ull, 13ull, 19ull, 31ull, 37ull, 43ull}) {
        Conductor c;
        c.value = 7 * l;
        c.ramified_primes = {7, l};
        if (l == 7) {
            c.value = 7;
            c.ramified_primes = {7};
        }
        auto fields = fields_for_conductor(c);
        EisensteinInt pi = factor_split_prime(l);
        EisensteinInt pic = primary_associate(pi.conj());
        for (const auto& f : fields) {
            std::uint8_t sel = f.selectors.back();
            const EisensteinInt& modulus = (sel == 1) ? pi : pic;
            for (long long x = 0; x < static_cast<long long>(l); ++x) {
                CHECK(local_character_eval(f, l, x) ==
                      cubic_residue_symbol(EisensteinInt(x, 0), modulus));
            }
        }
    }
}

TEST_CASE("wild character mod 9") {
    Conductor c9;
    c9.value = 9;
    c9.ramified_primes = {3};
    auto fields = fields_for_conductor(c9);
    REQUIRE(fields.size() == 1);
    const auto& f = fields[0];

    CHECK(local_character_eval(f, 3, 1) == CubeRoot::one());
    CHECK(local_character_eval(f, 3, 3).is_zero());
    CHECK(local_character_eval(f, 3, 6).is_zero());

    // order three, multiplicative, even
    for (long long x : {1, 2, 4, 5, 7, 8}) {
        CubeRoot v = local_character_eval(f, 3, x);
        CHECK(v.pow(3) == CubeRoot::one());
        CHECK(local_character_eval(f, 3, x * x) == v * v);
        CHECK(local_character_eval(f, 3, -x) == v);  // kills -1
        CHECK(local_character_eval(f, 3, x + 9) == v);
    }
    // nontrivial: chi(2) = omega
    CHECK(local_character_eval(f, 3, 2) == CubeRoot::omega(1));

    // the two selectors on a wild conductor are conjugate at 2
    Conductor c63;
    c63.value = 63;
    c63.ramified_primes = {3, 7};
    auto f63 = fields_for_conductor(c63);
    REQUIRE(f63.size() == 2);
    CHECK(local_character_eval(f63[0], 3, 2) == local_character_eval(f63[1], 3, 2));  // selector on 3 pinned
    CHECK(local_character_eval(f63[0], 7, 3) == local_character_eval(f63[1], 7, 3).conj());
}

TEST_CASE("streaming enumeration covers ranges consistently") {
    ConductorTable table(2000);
    std::vector<std::uint64_t> whole, pieces;
    for_each_conductor(table, 7, 2000, [&](const Conductor& c) {
        whole.push_back(c.value);
        return true;
    });
    for (std::uint64_t lo : {7ull, 500ull, 1000ull, 1500ull}) {
        std::uint64_t hi = lo == 7 ? 499 : lo + 499;
        for_each_conductor(table, lo, hi, [&](const Conductor& c) {
            pieces.push_back(c.value);
            return true;
        });
    }
    CHECK(whole == pieces);

    // early stop
    int seen = 0;
    for_each_conductor(table, 7, 2000, [&](const Conductor&) { return ++seen < 3; });
    CHECK(seen == 3);
}
