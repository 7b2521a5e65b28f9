#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "menon/cyclotomic.hpp"

namespace menon {

// One prime-power block of (Z/nZ)*. Odd prime powers carry a single
// generator (the smallest primitive root); 4 carries the class of -1;
// 2^a with a >= 3 carries the class of -1 first, then the class of 5;
// 2 carries no generators.
struct UnitGroupComponent {
    std::uint64_t prime_power;
    std::vector<std::uint64_t> generators; // residues mod prime_power
    std::vector<std::uint64_t> orders;
};

// Canonical generator system for (Z/nZ)* with a full discrete-log table,
// components ascending by prime power. Immutable after construction.
class UnitGroupStructure {
  public:
    explicit UnitGroupStructure(std::uint64_t n);

    std::uint64_t modulus() const { return n_; }
    const std::vector<UnitGroupComponent>& components() const { return components_; }

    // Flattened across components, in component order.
    const std::vector<std::uint64_t>& generators() const { return generators_; } // residues mod n
    const std::vector<std::uint64_t>& orders() const { return orders_; }
    std::size_t generator_count() const { return generators_.size(); }

    std::uint64_t unit_count() const { return unit_count_; } // phi(n)
    bool is_unit(std::int64_t k) const;

    // Exponent vector e with k = prod generators[i]^e[i] (mod n);
    // throws std::invalid_argument if (k, n) > 1.
    std::vector<std::uint64_t> discrete_log(std::int64_t k) const;

  private:
    std::uint64_t n_;
    std::uint64_t unit_count_;
    std::vector<UnitGroupComponent> components_;
    std::vector<std::uint64_t> generators_;
    std::vector<std::uint64_t> orders_;
    std::vector<std::uint32_t> dlog_; // n_ * generator_count entries, units only
};

std::shared_ptr<const UnitGroupStructure> unit_group(std::uint64_t n);

// A Dirichlet character mod n, stored as exponents against the canonical
// generators: chi(generators[i]) = zeta_{orders[i]}^exponents[i].
// Values are zeta_L^t with L the order of chi; zero off the units.
class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                       std::vector<std::uint64_t> exponents);

    std::uint64_t modulus() const { return group_->modulus(); }
    const UnitGroupStructure& group() const { return *group_; }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    std::uint64_t order() const { return order_; } // the value level L
    bool is_principal() const;

    // t with chi(k) = zeta_L^t, or nullopt when (k, n) > 1.
    std::optional<std::uint64_t> value_exponent(std::int64_t k) const;
    CyclotomicInteger operator()(std::int64_t k) const;

    // Rendered as e.g. "chi(n=12;e=[1,0,1])".
    std::string serialize() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

  private:
    std::shared_ptr<const UnitGroupStructure> group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t order_;
};

// All phi(n) characters mod n in lexicographic exponent order; index 0 is principal.
std::vector<DirichletCharacter> characters(std::uint64_t n);

// Smallest d | n such that chi(k) = 1 whenever k == 1 (mod d) and (k, n) = 1.
std::uint64_t conductor(const DirichletCharacter& chi);

bool is_primitive(const DirichletCharacter& chi);

// The unique primitive character mod conductor(chi) inducing chi.
DirichletCharacter induced_primitive(const DirichletCharacter& chi);

// sum over k in [1, n], k == s (mod d), of chi(k); requires d | n.
// Vanishes whenever chi is primitive and d < n.
CyclotomicInteger residue_class_sum(const DirichletCharacter& chi, std::uint64_t d, std::int64_t s);

} // namespace menon
