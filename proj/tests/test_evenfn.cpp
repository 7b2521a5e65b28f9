#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "menon/evenfn.hpp"

using namespace menon;

TEST_CASE("from_divisor_values") {
    // identity values on divisors of 6 give k -> (k, 6)
    const auto f = EvenFunction::from_divisor_values(6, {Int(1), Int(2), Int(3), Int(6)});
    CHECK(f.eval(4) == 2);
    CHECK(f.eval(5) == 1);
    CHECK(f.eval(0) == 6);

    // constant 1 has mu_star = [1, 0, 0, ...]
    const auto one = EvenFunction::from_divisor_values(12, std::vector<Int>(6, Int(1)));
    CHECK(one.mu_star() == std::vector<Int>{1, 0, 0, 0, 0, 0});

    // tau on divisors of 4: values [1, 2, 3], mu_star [1, 1, 1]
    const auto t4 = EvenFunction::from_divisor_values(4, {Int(1), Int(2), Int(3)});
    CHECK(t4.mu_star() == std::vector<Int>{1, 1, 1});

    CHECK_THROWS_AS(EvenFunction::from_divisor_values(6, {Int(1), Int(2)}),
                    std::invalid_argument);
}

TEST_CASE("gcd_even") {
    const auto f6 = EvenFunction::gcd_even(6);
    CHECK(f6.eval(4) == 2);
    CHECK(f6.mu_star() == std::vector<Int>{1, 1, 2, 2}); // phi on divisors

    const auto f1 = EvenFunction::gcd_even(1);
    CHECK(f1.eval(0) == 1);
    CHECK(f1.eval(123) == 1);
}

TEST_CASE("compose_gcd") {
    const auto fs = EvenFunction::compose_gcd(4, [](std::uint64_t d) { return sigma(d); }, "sigma_gcd");
    CHECK(fs.divisor_values() == std::vector<Int>{1, 3, 7});
    CHECK(fs.eval(2) == 3);

    const auto ft = EvenFunction::compose_gcd(4, [](std::uint64_t d) { return tau(d); }, "tau_gcd");
    CHECK(ft.eval(0) == 3); // (0, 4) = 4, tau(4) = 3

    const auto ind = EvenFunction::compose_gcd(4, [](std::uint64_t d) { return Int(d == 1); },
                                               "unit_indicator");
    for (std::int64_t k = -8; k <= 8; ++k)
        CHECK(ind.eval(k) == Int(gcd_mod(k, 4) == 1 ? 1 : 0));
}

TEST_CASE("ramanujan_even") {
    const auto f6 = EvenFunction::ramanujan_even(6);
    CHECK(f6.divisor_values() == std::vector<Int>{1, -1, -2, 2});
    CHECK(f6.mu_star() == std::vector<Int>{1, -2, -3, 6}); // e mu(6/e)

    const auto f1 = EvenFunction::ramanujan_even(1);
    CHECK(f1.eval(5) == 1);
}

TEST_CASE("solution_count_even") {
    const auto f = EvenFunction::solution_count_even(3, 2);
    CHECK(f.eval(0) == 2); // tuples (1,2) and (2,1) over the units {1,2}
    CHECK(f.eval(1) == 1); // (2,2)
    CHECK(f.eval(2) == 1); // (1,1)

    // q = 1 is the unit indicator
    for (std::uint64_t n : {1, 2, 6, 12}) {
        const auto g = EvenFunction::solution_count_even(n, 1);
        for (std::uint64_t k = 0; k < n; ++k)
            CHECK(g.eval(static_cast<std::int64_t>(k)) ==
                  Int(gcd_mod(static_cast<std::int64_t>(k), n) == 1 ? 1 : 0));
    }

    const auto f1 = EvenFunction::solution_count_even(1, 5);
    CHECK(f1.eval(0) == 1);

    CHECK_THROWS_AS(EvenFunction::solution_count_even(101, 4, 1000), std::invalid_argument);
    CHECK_THROWS_AS(EvenFunction::solution_count_even(3, 0), std::invalid_argument);
}

TEST_CASE("solution counts are even mod n and sum to phi(n)^q") {
    for (std::uint64_t n = 1; n <= 30; ++n)
        for (std::uint32_t q = 1; q <= 3; ++q) {
            const auto f = EvenFunction::solution_count_even(n, q);
            Int total = 0;
            Int phi_pow = 1;
            for (std::uint32_t i = 0; i < q; ++i)
                phi_pow *= euler_phi(n);
            // brute-force recount per residue, checking evenness on the way
            std::vector<Int> counts(n, Int(0));
            std::vector<std::uint64_t> units;
            for (std::uint64_t k = 0; k < n; ++k)
                if (gcd_mod(static_cast<std::int64_t>(k), n) == 1)
                    units.push_back(k);
            std::vector<std::size_t> idx(q, 0);
            bool carry = false;
            while (!carry) {
                std::uint64_t sum = 0;
                for (std::uint32_t i = 0; i < q; ++i)
                    sum += units[idx[i]];
                counts[sum % n] += 1;
                std::size_t j = q;
                carry = true;
                while (j-- > 0) {
                    if (++idx[j] < units.size()) {
                        carry = false;
                        break;
                    }
                    idx[j] = 0;
                }
            }
            for (std::uint64_t k = 0; k < n; ++k) {
                CHECK(f.eval(static_cast<std::int64_t>(k)) == counts[k]);
                total += counts[k];
            }
            CHECK(total == phi_pow);
        }
}

TEST_CASE("eval respects the gcd convention and periodicity") {
    const auto f = EvenFunction::gcd_even(6);
    CHECK(f.eval(-2) == 2); // -2 mod 6 = 4, gcd(4, 6) = 2
    CHECK(f.eval(0) == 6);  // gcd(0, 6) = 6

    for (std::uint64_t n = 1; n <= 100; ++n) {
        const std::vector<EvenFunction> fns = {
            EvenFunction::gcd_even(n),           EvenFunction::ramanujan_even(n),
            make_even_function("tau_gcd", n),    make_even_function("sigma_gcd", n),
            make_even_function("unit_indicator", n),
            make_even_function("nsolutions:q=2", n)};
        for (const auto& fn : fns)
            for (std::int64_t k = -2 * static_cast<std::int64_t>(n);
                 k <= 2 * static_cast<std::int64_t>(n); ++k) {
                CHECK(fn.eval(k) == fn.eval(static_cast<std::int64_t>(gcd_mod(k, n))));
                CHECK(fn.eval(k) == fn.eval(k + static_cast<std::int64_t>(n)));
            }
    }
}

TEST_CASE("representation f(k) = sum of mu_star over d | (k, n)") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        const std::vector<EvenFunction> fns = {
            EvenFunction::gcd_even(n),           EvenFunction::ramanujan_even(n),
            make_even_function("tau_gcd", n),    make_even_function("sigma_gcd", n),
            make_even_function("unit_indicator", n),
            make_even_function("nsolutions:q=2", n)};
        for (const auto& fn : fns)
            for (std::uint64_t k = 0; k < n; ++k) {
                Int sum = 0;
                const std::uint64_t g = gcd_mod(static_cast<std::int64_t>(k), n);
                for (std::uint64_t d : divisors(g).divisors)
                    sum += fn.mu_star_at(d);
                CHECK(fn.eval(static_cast<std::int64_t>(k)) == sum);
            }
    }
}

TEST_CASE("mu_star closed forms for gcd and ramanujan up to 300") {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto g = EvenFunction::gcd_even(n);
        const auto c = EvenFunction::ramanujan_even(n);
        for (std::uint64_t e : g.divisor_table().divisors) {
            CHECK(g.mu_star_at(e) == euler_phi(e));
            CHECK(c.mu_star_at(e) == Int(e) * moebius(n / e));
        }
    }
}

TEST_CASE("builtin registry") {
    CHECK(make_even_function("gcd", 6).name() == "gcd");
    CHECK(make_even_function("nsolutions:q=2", 6).name() == "nsolutions:q=2");
    CHECK(make_even_function("nsolutions:q=2", 3).eval(0) == 2);
    CHECK_THROWS_AS(make_even_function("nope", 6), std::invalid_argument);
    CHECK_THROWS_AS(make_even_function("nsolutions:q=x", 6), std::invalid_argument);
    CHECK_THROWS_AS(make_even_function("nsolutions:q=0", 6), std::invalid_argument);
    CHECK(core_even_function_names().size() == 5);
}
