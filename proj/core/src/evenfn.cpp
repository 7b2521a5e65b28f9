#include "menon/evenfn.hpp"

#include <numeric>
#include <stdexcept>

namespace menon {

EvenFunction::EvenFunction(DivisorTable divs, std::vector<Int> values, std::string name)
    : divs_(std::move(divs)), values_(std::move(values)), name_(std::move(name)) {
    if (values_.size() != divs_.size())
        throw std::invalid_argument("EvenFunction: one value per divisor required");
    mu_star_ = moebius_invert(divs_, values_);
}

EvenFunction EvenFunction::from_divisor_values(std::uint64_t n, std::vector<Int> values,
                                               std::string name) {
    return {divisors(n), std::move(values), std::move(name)};
}

EvenFunction EvenFunction::gcd_even(std::uint64_t n) {
    DivisorTable divs = divisors(n);
    std::vector<Int> values(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i)
        values[i] = divs.divisors[i];
    return {std::move(divs), std::move(values), "gcd"};
}

EvenFunction EvenFunction::compose_gcd(std::uint64_t n,
                                       const std::function<Int(std::uint64_t)>& arith_fn,
                                       std::string name) {
    DivisorTable divs = divisors(n);
    std::vector<Int> values(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i)
        values[i] = arith_fn(divs.divisors[i]);
    return {std::move(divs), std::move(values), std::move(name)};
}

EvenFunction EvenFunction::ramanujan_even(std::uint64_t n) {
    DivisorTable divs = divisors(n);
    std::vector<Int> values(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i)
        values[i] = ramanujan_sum(n, static_cast<std::int64_t>(divs.divisors[i]));
    return {std::move(divs), std::move(values), "ramanujan"};
}

EvenFunction EvenFunction::solution_count_even(std::uint64_t n, std::uint32_t q,
                                               std::uint64_t budget) {
    if (q == 0)
        throw std::invalid_argument("solution_count_even: q must be positive");
    std::vector<std::uint64_t> units;
    for (std::uint64_t k = 0; k < n; ++k)
        if (std::gcd(k, n) == 1)
            units.push_back(k);
    Int tuple_count = 1;
    for (std::uint32_t i = 0; i < q; ++i)
        tuple_count *= units.size();
    if (tuple_count > budget)
        throw std::invalid_argument("solution_count_even: phi(n)^q = " + tuple_count.str() +
                                    " exceeds the enumeration budget " + std::to_string(budget));

    std::vector<Int> counts(n, Int(0));
    std::vector<std::size_t> idx(q, 0);
    while (true) {
        std::uint64_t sum = 0;
        for (std::uint32_t i = 0; i < q; ++i)
            sum += units[idx[i]];
        counts[sum % n] += 1;
        std::size_t j = q;
        while (j-- > 0) {
            if (++idx[j] < units.size())
                break;
            idx[j] = 0;
            if (j == 0)
                goto done;
        }
    }
done:
    DivisorTable divs = divisors(n);
    std::vector<Int> values(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i)
        values[i] = counts[divs.divisors[i] % n];
    return {std::move(divs), std::move(values), "nsolutions:q=" + std::to_string(q)};
}

EvenFunction make_even_function(const std::string& name, std::uint64_t n, std::uint64_t budget) {
    if (name == "gcd")
        return EvenFunction::gcd_even(n);
    if (name == "ramanujan")
        return EvenFunction::ramanujan_even(n);
    if (name == "tau_gcd")
        return EvenFunction::compose_gcd(n, [](std::uint64_t d) { return tau(d); }, "tau_gcd");
    if (name == "sigma_gcd")
        return EvenFunction::compose_gcd(n, [](std::uint64_t d) { return sigma(d); }, "sigma_gcd");
    if (name == "unit_indicator")
        return EvenFunction::compose_gcd(n, [](std::uint64_t d) { return Int(d == 1 ? 1 : 0); },
                                         "unit_indicator");
    constexpr std::string_view prefix = "nsolutions:q=";
    if (name.starts_with(prefix)) {
        const std::string arg = name.substr(prefix.size());
        std::size_t pos = 0;
        int q = 0;
        try {
            q = std::stoi(arg, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != arg.size() || q <= 0)
            throw std::invalid_argument("make_even_function: bad q in '" + name + "'");
        return EvenFunction::solution_count_even(n, static_cast<std::uint32_t>(q), budget);
    }
    throw std::invalid_argument("make_even_function: unknown builtin '" + name + "'");
}

const std::vector<std::string>& core_even_function_names() {
    static const std::vector<std::string> names = {"gcd", "ramanujan", "tau_gcd", "sigma_gcd",
                                                   "unit_indicator"};
    return names;
}

} // namespace menon
