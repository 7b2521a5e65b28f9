#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "menon/arith.hpp"

namespace menon {

// An integer-valued even function (mod n): f(k) = f((k, n)) for every k,
// so f is determined by its values on the divisors of n. The Moebius
// transform (mu * f) is computed once at construction; it drives every
// closed-form evaluation. Immutable.
class EvenFunction {
  public:
    static constexpr std::uint64_t kDefaultBudget = 20'000'000;

    // values indexed by the ascending divisor list of n.
    static EvenFunction from_divisor_values(std::uint64_t n, std::vector<Int> values,
                                            std::string name = "custom");

    // f(k) = (k, n); (mu * f)(e) = phi(e).
    static EvenFunction gcd_even(std::uint64_t n);

    // f(k) = F((k, n)) for an arbitrary arithmetic function F.
    static EvenFunction compose_gcd(std::uint64_t n,
                                    const std::function<Int(std::uint64_t)>& arith_fn,
                                    std::string name = "custom");

    // f(k) = c_n(k); (mu * f)(e) = e * mu(n / e).
    static EvenFunction ramanujan_even(std::uint64_t n);

    // f(k) = number of unit tuples (x_1, ..., x_q) mod n with x_1 + ... + x_q == k.
    // Brute-force enumeration of all phi(n)^q tuples; throws std::invalid_argument
    // when that count exceeds the budget.
    static EvenFunction solution_count_even(std::uint64_t n, std::uint32_t q,
                                            std::uint64_t budget = kDefaultBudget);

    std::uint64_t modulus() const { return divs_.n; }
    const std::string& name() const { return name_; }
    const DivisorTable& divisor_table() const { return divs_; }
    const std::vector<Int>& divisor_values() const { return values_; }
    const std::vector<Int>& mu_star() const { return mu_star_; }

    const Int& value_at_divisor(std::uint64_t d) const { return values_[divs_.index_of(d)]; }
    const Int& mu_star_at(std::uint64_t d) const { return mu_star_[divs_.index_of(d)]; }

    // values[(k mod n, n)], defined for every integer k.
    const Int& eval(std::int64_t k) const { return values_[divs_.index_of(gcd_mod(k, modulus()))]; }

  private:
    EvenFunction(DivisorTable divs, std::vector<Int> values, std::string name);

    DivisorTable divs_;
    std::vector<Int> values_;
    std::vector<Int> mu_star_;
    std::string name_;
};

// Builders for the CLI names: gcd, ramanujan, tau_gcd, sigma_gcd,
// unit_indicator, nsolutions:q=<int>.
EvenFunction make_even_function(const std::string& name, std::uint64_t n,
                                std::uint64_t budget = EvenFunction::kDefaultBudget);

// The five core builtin names (excludes nsolutions, which needs a q).
const std::vector<std::string>& core_even_function_names();

} // namespace menon
