#include "menon/chargroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace menon {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t phi_u64(std::uint64_t n) {
    return euler_phi(n).convert_to<std::uint64_t>();
}

// Smallest g generating (Z/qZ)* for an odd prime power q.
std::uint64_t smallest_primitive_root(std::uint64_t q) {
    const std::uint64_t phi = phi_u64(q);
    const auto phi_factors = factorize(phi).factors;
    for (std::uint64_t g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1)
            continue;
        bool primitive = true;
        for (const auto& [p, e] : phi_factors) {
            if (pow_mod(g, phi / p, q) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    throw std::logic_error("smallest_primitive_root: no generator found");
}

// x with x == r (mod q) and x == 1 (mod m), where (q, m) = 1.
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t q, std::uint64_t m) {
    if (m == 1)
        return r % q;
    // q * inv(q mod m, m) == 1 (mod m), so x = r + q * ((1 - r) * inv mod m)
    const std::uint64_t inv = pow_mod(q % m, phi_u64(m) - 1, m);
    const std::uint64_t r_mod_m = r % m;
    const std::uint64_t delta = (1 + m - r_mod_m) % m;
    return (r + q * mul_mod(delta, inv, m)) % (q * m);
}

} // namespace

UnitGroupStructure::UnitGroupStructure(std::uint64_t n) : n_(n) {
    if (n == 0)
        throw std::invalid_argument("UnitGroupStructure: modulus must be positive");
    const auto fac = factorize(n);
    unit_count_ = phi_u64(n);

    for (const auto& [p, e] : fac.factors) {
        UnitGroupComponent comp;
        comp.prime_power = 1;
        for (std::uint32_t i = 0; i < e; ++i)
            comp.prime_power *= p;
        const std::uint64_t q = comp.prime_power;
        if (p == 2) {
            if (e == 2) {
                comp.generators = {3};
                comp.orders = {2};
            } else if (e >= 3) {
                comp.generators = {q - 1, 5};
                comp.orders = {2, q / 4};
            }
            // q == 2: trivial group, no generators
        } else {
            comp.generators = {smallest_primitive_root(q)};
            comp.orders = {phi_u64(q)};
        }
        components_.push_back(std::move(comp));
    }

    for (const auto& comp : components_) {
        const std::uint64_t m = n_ / comp.prime_power;
        for (std::size_t j = 0; j < comp.generators.size(); ++j) {
            generators_.push_back(crt_lift(comp.generators[j], comp.prime_power, m));
            orders_.push_back(comp.orders[j]);
        }
    }

    // Per-component discrete logs by enumerating generator powers, then
    // one flat table over all residues mod n.
    const std::size_t g_total = generators_.size();
    dlog_.assign(n_ * g_total, 0);
    std::size_t flat_base = 0;
    for (const auto& comp : components_) {
        const std::uint64_t q = comp.prime_power;
        const std::size_t g_count = comp.generators.size();
        if (g_count == 0)
            continue;
        std::vector<std::vector<std::uint32_t>> local(q);
        std::vector<std::uint32_t> exps(g_count, 0);
        while (true) {
            std::uint64_t value = 1;
            for (std::size_t j = 0; j < g_count; ++j)
                value = mul_mod(value, pow_mod(comp.generators[j], exps[j], q), q);
            local[value] = exps;
            std::size_t j = g_count;
            while (j-- > 0) {
                if (++exps[j] < comp.orders[j])
                    break;
                exps[j] = 0;
                if (j == 0)
                    goto done;
            }
        }
    done:
        for (std::uint64_t k = 0; k < n_; ++k) {
            if (std::gcd(k, n_) != 1)
                continue;
            const auto& e = local[k % q];
            for (std::size_t j = 0; j < g_count; ++j)
                dlog_[k * g_total + flat_base + j] = e[j];
        }
        flat_base += g_count;
    }
}

bool UnitGroupStructure::is_unit(std::int64_t k) const {
    return gcd_mod(k, n_) == 1;
}

std::vector<std::uint64_t> UnitGroupStructure::discrete_log(std::int64_t k) const {
    const std::int64_t m = static_cast<std::int64_t>(n_);
    std::int64_t r = k % m;
    if (r < 0)
        r += m;
    if (std::gcd(static_cast<std::uint64_t>(r), n_) != 1)
        throw std::invalid_argument("discrete_log: argument is not a unit mod " +
                                    std::to_string(n_));
    const std::size_t g_total = generators_.size();
    std::vector<std::uint64_t> e(g_total);
    for (std::size_t j = 0; j < g_total; ++j)
        e[j] = dlog_[static_cast<std::uint64_t>(r) * g_total + j];
    return e;
}

std::shared_ptr<const UnitGroupStructure> unit_group(std::uint64_t n) {
    return std::make_shared<const UnitGroupStructure>(n);
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroupStructure> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    if (!group_)
        throw std::invalid_argument("DirichletCharacter: null group");
    const auto& orders = group_->orders();
    if (exponents_.size() != orders.size())
        throw std::invalid_argument("DirichletCharacter: one exponent per generator required");
    order_ = 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        exponents_[i] %= orders[i];
        order_ = std::lcm(order_, orders[i] / std::gcd(orders[i], exponents_[i]));
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::uint64_t e) { return e == 0; });
}

std::optional<std::uint64_t> DirichletCharacter::value_exponent(std::int64_t k) const {
    if (!group_->is_unit(k))
        return std::nullopt;
    const auto dlog = group_->discrete_log(k);
    const auto& orders = group_->orders();
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < dlog.size(); ++i) {
        // chi(g_i) = zeta_{orders[i]}^{e_i} = zeta_L^{e_i * L / orders[i]}
        const std::uint64_t step = exponents_[i] * order_ / orders[i];
        t = (t + step % order_ * (dlog[i] % order_)) % order_;
    }
    return t;
}

CyclotomicInteger DirichletCharacter::operator()(std::int64_t k) const {
    const auto t = value_exponent(k);
    if (!t)
        return CyclotomicInteger::zero(order_);
    return CyclotomicInteger::root_of_unity(order_, static_cast<std::int64_t>(*t));
}

std::string DirichletCharacter::serialize() const {
    std::ostringstream out;
    out << "chi(n=" << modulus() << ";e=[";
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (i > 0)
            out << ",";
        out << exponents_[i];
    }
    out << "])";
    return out.str();
}

std::vector<DirichletCharacter> characters(std::uint64_t n) {
    const auto group = unit_group(n);
    const auto& orders = group->orders();
    std::vector<DirichletCharacter> chars;
    chars.reserve(group->unit_count());
    std::vector<std::uint64_t> exps(orders.size(), 0);
    while (true) {
        chars.emplace_back(group, exps);
        std::size_t j = exps.size();
        while (j-- > 0) {
            if (++exps[j] < orders[j])
                break;
            exps[j] = 0;
            if (j == 0)
                return chars;
        }
        if (exps.empty())
            return chars;
    }
}

std::uint64_t conductor(const DirichletCharacter& chi) {
    const std::uint64_t n = chi.modulus();
    for (std::uint64_t d : divisors(n).divisors) {
        bool factors_through = true;
        for (std::uint64_t k = 1 + d; k <= n && factors_through; k += d) {
            const auto t = chi.value_exponent(static_cast<std::int64_t>(k));
            if (t && *t != 0)
                factors_through = false;
        }
        if (factors_through)
            return d;
    }
    return n; // unreachable: d = n always passes
}

bool is_primitive(const DirichletCharacter& chi) {
    return conductor(chi) == chi.modulus();
}

DirichletCharacter induced_primitive(const DirichletCharacter& chi) {
    const std::uint64_t n = chi.modulus();
    const std::uint64_t d = conductor(chi);
    const auto group_d = unit_group(d);
    const auto& gens = group_d->generators();
    const auto& orders = group_d->orders();
    const std::uint64_t big_l = chi.order();
    std::vector<std::uint64_t> exps(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        // Any lift k == gens[j] (mod d) with (k, n) = 1 determines chi*(g_j).
        std::uint64_t k = gens[j];
        while (std::gcd(k, n) != 1)
            k += d;
        const auto t = chi.value_exponent(static_cast<std::int64_t>(k));
        // chi(k)^orders[j] = chi*(1) = 1, so L | t * orders[j]
        const std::uint64_t scaled = *t * orders[j];
        if (scaled % big_l != 0)
            throw std::logic_error("induced_primitive: value order does not divide generator order");
        exps[j] = (scaled / big_l) % orders[j];
    }
    return {group_d, std::move(exps)};
}

CyclotomicInteger residue_class_sum(const DirichletCharacter& chi, std::uint64_t d,
                                    std::int64_t s) {
    const std::uint64_t n = chi.modulus();
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("residue_class_sum: d must divide the modulus");
    const std::int64_t dd = static_cast<std::int64_t>(d);
    std::int64_t s_mod = s % dd;
    if (s_mod < 0)
        s_mod += dd;
    const std::uint64_t big_l = chi.order();
    std::vector<Int> weights(big_l, Int(0));
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (k % d != static_cast<std::uint64_t>(s_mod))
            continue;
        const auto t = chi.value_exponent(static_cast<std::int64_t>(k));
        if (t)
            weights[*t] += 1;
    }
    return weighted_root_power_sum(big_l, weights);
}

} // namespace menon
