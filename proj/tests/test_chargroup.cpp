#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "menon/chargroup.hpp"

using namespace menon;

namespace {

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            r = (unsigned __int128)r * base % m;
        base = (unsigned __int128)base * base % m;
        exp >>= 1;
    }
    return r;
}

// Value signature of chi at a fixed reference level, for distinctness checks.
std::vector<std::int64_t> value_signature(const DirichletCharacter& chi, std::uint64_t ref_level) {
    std::vector<std::int64_t> sig;
    const std::uint64_t n = chi.modulus();
    for (std::uint64_t k = 0; k < n; ++k) {
        const auto t = chi.value_exponent(static_cast<std::int64_t>(k));
        sig.push_back(t ? static_cast<std::int64_t>(*t * (ref_level / chi.order())) : -1);
    }
    return sig;
}

} // namespace

TEST_CASE("unit group structure for 8, 15, and trivial moduli") {
    const auto g8 = unit_group(8);
    REQUIRE(g8->components().size() == 1);
    CHECK(g8->components()[0].prime_power == 8);
    CHECK(g8->components()[0].generators == std::vector<std::uint64_t>{7, 5});
    CHECK(g8->components()[0].orders == std::vector<std::uint64_t>{2, 2});
    CHECK(g8->unit_count() == 4);

    const auto g15 = unit_group(15);
    REQUIRE(g15->components().size() == 2);
    CHECK(g15->components()[0].prime_power == 3);
    CHECK(g15->components()[0].generators == std::vector<std::uint64_t>{2});
    CHECK(g15->components()[0].orders == std::vector<std::uint64_t>{2});
    CHECK(g15->components()[1].prime_power == 5);
    CHECK(g15->components()[1].generators == std::vector<std::uint64_t>{2});
    CHECK(g15->components()[1].orders == std::vector<std::uint64_t>{4});

    CHECK(unit_group(1)->generator_count() == 0);
    CHECK(unit_group(1)->unit_count() == 1);
    CHECK(unit_group(2)->generator_count() == 0);
    CHECK(unit_group(2)->unit_count() == 1);
}

TEST_CASE("every unit factors through the generator system") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const auto group = unit_group(n);
        Int order_product = 1;
        for (std::uint64_t o : group->orders())
            order_product *= o;
        CHECK(order_product == euler_phi(n));

        for (std::uint64_t k = 0; k < std::max<std::uint64_t>(n, 1); ++k) {
            if (gcd_mod(static_cast<std::int64_t>(k), n) != 1)
                continue;
            const auto e = group->discrete_log(static_cast<std::int64_t>(k));
            std::uint64_t rebuilt = 1 % n;
            for (std::size_t j = 0; j < e.size(); ++j)
                rebuilt = (unsigned __int128)rebuilt *
                          pow_mod_u64(group->generators()[j], e[j], n) % n;
            CHECK(rebuilt == k % n);
        }
    }
}

TEST_CASE("discrete log examples and error path") {
    const auto g5 = unit_group(5);
    CHECK(g5->components()[0].generators == std::vector<std::uint64_t>{2}); // smallest root
    CHECK(g5->discrete_log(1) == std::vector<std::uint64_t>{0});
    CHECK(g5->discrete_log(3) == std::vector<std::uint64_t>{3}); // 2^3 = 8 = 3 (mod 5)

    const auto g8 = unit_group(8);
    CHECK(g8->discrete_log(7) == std::vector<std::uint64_t>{1, 0}); // 7 = -1 (mod 8)

    CHECK_THROWS_AS(g5->discrete_log(10), std::invalid_argument);
}

TEST_CASE("character lists") {
    const auto c1 = characters(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0](0) == CyclotomicInteger(Int(1)));
    CHECK(c1[0](17) == CyclotomicInteger(Int(1)));

    const auto c6 = characters(6);
    REQUIRE(c6.size() == 2);
    CHECK(c6[0].is_principal());
    CHECK(c6[1](5) == CyclotomicInteger(Int(-1)));

    const auto c5 = characters(5);
    REQUIRE(c5.size() == 4);
    int order4 = 0;
    const auto i4 = CyclotomicInteger::root_of_unity(4, 1);
    for (const auto& chi : c5)
        if (chi.order() == 4) {
            ++order4;
            CHECK((chi(2) == i4 || chi(2) == -i4));
        }
    CHECK(order4 == 2);
}

TEST_CASE("characters are pairwise distinct and complete") {
    for (std::uint64_t n = 1; n <= 120; ++n) {
        const auto chars = characters(n);
        CHECK(Int(chars.size()) == euler_phi(n));
        std::uint64_t ref_level = 1;
        for (const auto& chi : chars)
            ref_level = std::lcm(ref_level, chi.order());
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& chi : chars)
            seen.insert(value_signature(chi, ref_level));
        CHECK(seen.size() == chars.size());
    }
}

TEST_CASE("character evaluation examples") {
    const auto c6 = characters(6);
    CHECK(c6[0](4).is_zero()); // (4, 6) = 2 > 1

    // chi mod 5 with chi(2) = zeta_4 maps 3 = 2^3 to zeta_4^3
    const auto c5 = characters(5);
    const auto i4 = CyclotomicInteger::root_of_unity(4, 1);
    for (const auto& chi : c5)
        if (chi(2) == i4)
            CHECK(chi(3) == CyclotomicInteger::root_of_unity(4, 3));

    for (const auto& chi : characters(12))
        CHECK(chi(1) == CyclotomicInteger(Int(1)));
}

TEST_CASE("complete multiplicativity on units") {
    std::mt19937_64 rng(0xABCDu);
    for (std::uint64_t n = 1; n <= 60; ++n) {
        std::uniform_int_distribution<std::int64_t> pick(-2 * static_cast<std::int64_t>(n),
                                                         2 * static_cast<std::int64_t>(n));
        for (const auto& chi : characters(n))
            for (int trial = 0; trial < 8; ++trial) {
                const std::int64_t j = pick(rng), k = pick(rng);
                CHECK(chi(j * k) == chi(j) * chi(k));
            }
    }
}

TEST_CASE("periodicity") {
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (const auto& chi : characters(n))
            for (std::int64_t k = -3; k <= static_cast<std::int64_t>(n); ++k)
                CHECK(chi(k) == chi(k + static_cast<std::int64_t>(n)));
}

TEST_CASE("orthogonality over a full period") {
    for (std::uint64_t n = 1; n <= 120; ++n)
        for (const auto& chi : characters(n)) {
            const auto sum = residue_class_sum(chi, 1, 0);
            if (chi.is_principal())
                CHECK(sum == CyclotomicInteger(euler_phi(n)));
            else
                CHECK(sum.is_zero());
        }
}

TEST_CASE("conductor examples") {
    const auto c12 = characters(12);
    CHECK(conductor(c12[0]) == 1); // principal

    const auto c6 = characters(6);
    CHECK(conductor(c6[1]) == 3);

    const auto c4 = characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(conductor(c4[1]) == 4);
    CHECK(is_primitive(c4[1]));
    CHECK_FALSE(is_primitive(c6[1]));
    CHECK(is_primitive(characters(1)[0])); // conductor 1 = modulus 1
}

TEST_CASE("induced primitive character") {
    // principal mod 12 induces the character mod 1
    const auto c12 = characters(12);
    const auto star0 = induced_primitive(c12[0]);
    CHECK(star0.modulus() == 1);
    CHECK(star0(5) == CyclotomicInteger(Int(1)));

    // nonprincipal mod 6 induces the nonprincipal character mod 3
    const auto c6 = characters(6);
    const auto star = induced_primitive(c6[1]);
    CHECK(star.modulus() == 3);
    CHECK(star(2) == CyclotomicInteger(Int(-1)));

    // a primitive character induces itself
    const auto c5 = characters(5);
    for (const auto& chi : c5) {
        if (!is_primitive(chi))
            continue;
        const auto self = induced_primitive(chi);
        CHECK(self.modulus() == 5);
        CHECK(self.exponents() == chi.exponents());
    }
}

TEST_CASE("induced character agrees on units (all chi, n <= 120)") {
    for (std::uint64_t n = 1; n <= 120; ++n)
        for (const auto& chi : characters(n)) {
            const auto star = induced_primitive(chi);
            CHECK(conductor(star) == star.modulus()); // chi* is primitive
            for (std::uint64_t k = 1; k <= n; ++k) {
                if (std::gcd(k, n) != 1)
                    continue;
                CHECK(chi(static_cast<std::int64_t>(k)) ==
                      star(static_cast<std::int64_t>(k)));
            }
        }
}

TEST_CASE("residue class sums") {
    // primitive chi mod 5, d = 1: full-period orthogonality
    const auto c5 = characters(5);
    for (const auto& chi : c5)
        if (is_primitive(chi))
            for (std::int64_t s : {0, 1, 2})
                CHECK(residue_class_sum(chi, 1, s).is_zero());

    // primitive chi mod 4, d = 2, s = 1: chi(1) + chi(3) = 0
    const auto c4 = characters(4);
    CHECK(residue_class_sum(c4[1], 2, 1).is_zero());

    // d = n picks the single term chi(s)
    for (const auto& chi : characters(12))
        for (std::int64_t s = 0; s < 12; ++s)
            CHECK(residue_class_sum(chi, 12, s) == chi(s));

    CHECK_THROWS_AS(residue_class_sum(c4[1], 3, 0), std::invalid_argument);
}

TEST_CASE("primitive character sums over proper residue classes vanish (n <= 120)") {
    for (std::uint64_t n = 1; n <= 120; ++n)
        for (const auto& chi : characters(n)) {
            if (!is_primitive(chi))
                continue;
            for (std::uint64_t d : divisors(n).divisors) {
                if (d == n)
                    continue;
                for (std::int64_t s = 0; s < static_cast<std::int64_t>(d); ++s)
                    CHECK(residue_class_sum(chi, d, s).is_zero());
            }
        }
}

TEST_CASE("serialization") {
    const auto c12 = characters(12);
    CHECK(c12[0].serialize() == "chi(n=12;e=[0,0])"); // components 4 and 3, one generator each
    CHECK(characters(1)[0].serialize() == "chi(n=1;e=[])");
}
