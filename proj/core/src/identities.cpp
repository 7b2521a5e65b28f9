#include "menon/identities.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace menon {

namespace {

constexpr struct {
    IdentityId id;
    const char* tag;
} kIdentityTags[] = {
    {IdentityId::T2_1, "T2_1"},
    {IdentityId::C2_2, "C2_2"},
    {IdentityId::C2_3, "C2_3"},
    {IdentityId::BRAUER_RADEMACHER, "BRAUER_RADEMACHER"},
    {IdentityId::T2_4, "T2_4"},
    {IdentityId::C2_5, "C2_5"},
    {IdentityId::EQ_MENON_S, "EQ_MENON_S"},
    {IdentityId::C2_6, "C2_6"},
    {IdentityId::T2_7, "T2_7"},
    {IdentityId::C2_8_SIGMA, "C2_8_SIGMA"},
    {IdentityId::C2_8_TAU, "C2_8_TAU"},
    {IdentityId::ZHAO_CAO_1_1, "ZHAO_CAO_1_1"},
    {IdentityId::MENON_1_2, "MENON_1_2"},
    {IdentityId::PRIMITIVE_1_3, "PRIMITIVE_1_3"},
    {IdentityId::MULT_REMARK, "MULT_REMARK"},
};

void require_divides(std::uint64_t d, std::uint64_t n, const char* where) {
    if (d == 0 || n % d != 0)
        throw std::invalid_argument(std::string(where) + ": d must divide n");
}

Int rational_to_int(const Rat& value, const char* where) {
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error(std::string(where) + ": closed form did not reduce to an integer");
    return boost::multiprecision::numerator(value);
}

// scalar * z with exact rational scalar; every canonical coordinate must land in Z.
CyclotomicInteger rational_scale(const Rat& scalar, const CyclotomicInteger& z, const char* where) {
    std::vector<Int> coeffs(z.coeffs().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] = rational_to_int(scalar * z.coeffs()[i], where);
    return {z.level(), std::move(coeffs)};
}

std::int64_t canonical_mod(std::int64_t x, std::uint64_t m) {
    const std::int64_t mm = static_cast<std::int64_t>(m);
    std::int64_t r = x % mm;
    if (r < 0)
        r += mm;
    return r;
}

} // namespace

std::string to_string(IdentityId id) {
    for (const auto& entry : kIdentityTags)
        if (entry.id == id)
            return entry.tag;
    throw std::logic_error("to_string: unknown identity id");
}

IdentityId identity_from_string(const std::string& tag) {
    for (const auto& entry : kIdentityTags)
        if (tag == entry.tag)
            return entry.id;
    throw std::invalid_argument("unknown identity '" + tag + "'");
}

const std::vector<IdentityId>& all_identities() {
    static const std::vector<IdentityId> ids = [] {
        std::vector<IdentityId> v;
        for (const auto& entry : kIdentityTags)
            v.push_back(entry.id);
        return v;
    }();
    return ids;
}

std::string to_string(ArithFnTag tag) {
    switch (tag) {
    case ArithFnTag::Tau: return "tau";
    case ArithFnTag::Sigma: return "sigma";
    case ArithFnTag::Phi: return "phi";
    case ArithFnTag::Id: return "id";
    }
    throw std::logic_error("to_string: unknown arithmetic function tag");
}

ArithFnTag arith_fn_from_string(const std::string& name) {
    if (name == "tau") return ArithFnTag::Tau;
    if (name == "sigma") return ArithFnTag::Sigma;
    if (name == "phi") return ArithFnTag::Phi;
    if (name == "id") return ArithFnTag::Id;
    throw std::invalid_argument("unknown arithmetic function '" + name + "'");
}

Int lhs_restricted(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s,
                   const EvenFunction& f) {
    require_divides(d, n, "lhs_restricted");
    const std::uint64_t r_mod = static_cast<std::uint64_t>(canonical_mod(r, d));
    Int total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (k % d != r_mod || std::gcd(k, n) != 1)
            continue;
        total += f.eval(static_cast<std::int64_t>(k) - s);
    }
    return total;
}

Int rhs_theorem_2_1(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s,
                    const EvenFunction& f) {
    require_divides(d, n, "rhs_theorem_2_1");
    if (gcd_mod(r, d) != 1)
        return 0;
    Rat acc = 0;
    for (std::uint64_t e : divisors(n).divisors) {
        if (gcd_int(s, e) != 1)
            continue;
        const std::uint64_t g = std::gcd(e, d);
        if ((r - s) % static_cast<std::int64_t>(g) != 0)
            continue;
        acc += Rat(f.mu_star_at(e) * euler_phi(g), euler_phi(e));
    }
    acc *= Rat(euler_phi(n), euler_phi(d));
    return rational_to_int(acc, "rhs_theorem_2_1");
}

Int rhs_cor_2_2(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s) {
    require_divides(d, n, "rhs_cor_2_2");
    if (gcd_mod(r, d) != 1)
        return 0;
    Int acc = 0;
    for (std::uint64_t e : divisors(n).divisors) {
        if (gcd_int(s, e) != 1)
            continue;
        const std::uint64_t g = std::gcd(e, d);
        if ((r - s) % static_cast<std::int64_t>(g) != 0)
            continue;
        acc += euler_phi(g);
    }
    return rational_to_int(Rat(euler_phi(n) * acc, euler_phi(d)), "rhs_cor_2_2");
}

Int rhs_cor_2_3(std::uint64_t n, std::uint64_t d, std::int64_t r, std::int64_t s) {
    require_divides(d, n, "rhs_cor_2_3");
    if (gcd_mod(r, d) != 1)
        return 0;
    Rat acc = 0;
    for (std::uint64_t e : divisors(n).divisors) {
        if (gcd_int(s, e) != 1)
            continue;
        const std::uint64_t g = std::gcd(e, d);
        if ((r - s) % static_cast<std::int64_t>(g) != 0)
            continue;
        acc += Rat(Int(e) * moebius(n / e) * euler_phi(g), euler_phi(e));
    }
    acc *= Rat(euler_phi(n), euler_phi(d));
    return rational_to_int(acc, "rhs_cor_2_3");
}

std::pair<Int, Int> brauer_rademacher(std::uint64_t n, std::int64_t s) {
    const EvenFunction f = EvenFunction::ramanujan_even(n);
    Int lhs = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1)
            lhs += f.eval(static_cast<std::int64_t>(k) - s);
    const Int rhs = Int(moebius(n)) * ramanujan_sum(n, s);
    return {lhs, rhs};
}

CyclotomicInteger lhs_char_sum(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                               const EvenFunction& f) {
    if (chi.modulus() != n || f.modulus() != n)
        throw std::invalid_argument("lhs_char_sum: modulus mismatch");
    const std::uint64_t level = chi.order();
    std::vector<Int> weights(level, Int(0));
    for (std::uint64_t k = 1; k <= n; ++k) {
        const auto t = chi.value_exponent(static_cast<std::int64_t>(k));
        if (t)
            weights[*t] += f.eval(static_cast<std::int64_t>(k) - s);
    }
    return weighted_root_power_sum(level, weights);
}

CyclotomicInteger rhs_theorem_2_4(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                                  const EvenFunction& f) {
    if (chi.modulus() != n || f.modulus() != n)
        throw std::invalid_argument("rhs_theorem_2_4: modulus mismatch");
    const std::uint64_t d = conductor(chi);
    const DirichletCharacter star = induced_primitive(chi);
    const CyclotomicInteger star_s = star(s);
    if (star_s.is_zero())
        return star_s; // (s, d) > 1
    Rat scalar = 0;
    for (std::uint64_t delta : divisors(n / d).divisors) {
        if (gcd_int(s, delta) != 1)
            continue;
        scalar += Rat(f.mu_star_at(delta * d), euler_phi(delta * d));
    }
    scalar *= euler_phi(n);
    return rational_scale(scalar, star_s, "rhs_theorem_2_4");
}

CyclotomicInteger rhs_cor_2_5(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s) {
    if (chi.modulus() != n)
        throw std::invalid_argument("rhs_cor_2_5: modulus mismatch");
    const std::uint64_t d = conductor(chi);
    const DirichletCharacter star = induced_primitive(chi);
    Int count = 0;
    for (std::uint64_t delta : divisors(n / d).divisors)
        if (gcd_int(s, delta) == 1)
            ++count;
    return star(s).scaled(euler_phi(n) * count);
}

CyclotomicInteger rhs_cor_2_6(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s) {
    if (chi.modulus() != n)
        throw std::invalid_argument("rhs_cor_2_6: modulus mismatch");
    const std::uint64_t d = conductor(chi);
    const DirichletCharacter star = induced_primitive(chi);
    const CyclotomicInteger star_s = star(s);
    if (star_s.is_zero())
        return star_s;
    Rat scalar = 0;
    for (std::uint64_t delta : divisors(n / d).divisors) {
        if (gcd_int(s, delta) != 1)
            continue;
        scalar += Rat(Int(delta) * moebius(n / (delta * d)), euler_phi(delta * d));
    }
    scalar *= Int(d) * euler_phi(n);
    return rational_scale(scalar, star_s, "rhs_cor_2_6");
}

CyclotomicInteger rhs_theorem_2_7(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                                  const EvenFunction& f) {
    if (chi.modulus() != n || f.modulus() != n)
        throw std::invalid_argument("rhs_theorem_2_7: modulus mismatch");
    if (!is_primitive(chi))
        throw std::invalid_argument("rhs_theorem_2_7: character must be primitive");
    return chi(s).scaled(f.mu_star_at(n));
}

Int mu_star_of(ArithFnTag big_f, std::uint64_t n) {
    const DivisorTable divs = divisors(n);
    std::vector<Int> values(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::uint64_t d = divs.divisors[i];
        switch (big_f) {
        case ArithFnTag::Tau: values[i] = tau(d); break;
        case ArithFnTag::Sigma: values[i] = sigma(d); break;
        case ArithFnTag::Phi: values[i] = euler_phi(d); break;
        case ArithFnTag::Id: values[i] = d; break;
        }
    }
    return moebius_invert(divs, values).back();
}

CyclotomicInteger rhs_cor_2_8(std::uint64_t n, const DirichletCharacter& chi, std::int64_t s,
                              ArithFnTag big_f) {
    if (chi.modulus() != n)
        throw std::invalid_argument("rhs_cor_2_8: modulus mismatch");
    if (!is_primitive(chi))
        throw std::invalid_argument("rhs_cor_2_8: character must be primitive");
    return chi(s).scaled(mu_star_of(big_f, n));
}

bool multiplicativity_check(ArithFnTag big_f, std::uint64_t n1, std::uint64_t n2) {
    if (std::gcd(n1, n2) != 1)
        throw std::invalid_argument("multiplicativity_check: moduli must be coprime");
    return mu_star_of(big_f, n1 * n2) == mu_star_of(big_f, n1) * mu_star_of(big_f, n2);
}

Int menon_gcd_sum_fast(std::uint64_t n, std::int64_t s) {
    const CanonicalFactorization fac = factorize(n);
    Int count = 0;
    for (std::uint64_t delta : divisors(fac).divisors)
        if (gcd_int(s, delta) == 1)
            ++count;
    return euler_phi(fac) * count;
}

Int naive_gcd_sum(std::uint64_t n, std::int64_t s) {
    Int total = 0;
    std::uint64_t run = 0; // batch small gcd values to limit big-int adds
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1)
            continue;
        run += gcd_mod(static_cast<std::int64_t>(k) - s, n);
        if (run >= (std::uint64_t(1) << 62)) {
            total += run;
            run = 0;
        }
    }
    total += run;
    return total;
}

namespace {

struct Timed {
    CyclotomicInteger value;
    std::int64_t micros;
};

template <typename Fn> Timed timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CyclotomicInteger value = fn();
    const auto stop = std::chrono::steady_clock::now();
    return {std::move(value),
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count()};
}

const DirichletCharacter& chi_at(const std::vector<DirichletCharacter>& chars, std::size_t idx) {
    if (idx >= chars.size())
        throw std::invalid_argument("character index " + std::to_string(idx) +
                                    " out of range (phi(n) = " + std::to_string(chars.size()) + ")");
    return chars[idx];
}

} // namespace

IdentityReport verify(IdentityId id, const IdentityParams& params) {
    IdentityReport rep;
    rep.id = id;
    rep.params = params;

    const std::uint64_t n = params.n;
    const std::uint64_t d = params.d.value_or(1);
    const std::int64_t r = params.r.value_or(0);
    const std::int64_t s = params.s.value_or(1);

    auto lhs_of = [&](auto&& fn) { const Timed t = timed(fn); rep.lhs = t.value; rep.lhs_micros = t.micros; };
    auto rhs_of = [&](auto&& fn) { const Timed t = timed(fn); rep.rhs = t.value; rep.rhs_micros = t.micros; };

    std::vector<DirichletCharacter> chars;
    auto chi_ref = [&]() -> const DirichletCharacter& {
        if (chars.empty())
            chars = characters(n);
        const auto& chi = chi_at(chars, params.chi.value_or(0));
        rep.chi_label = chi.serialize();
        return chi;
    };

    switch (id) {
    case IdentityId::T2_1: {
        if (rep.params.f_name.empty())
            rep.params.f_name = "gcd";
        const EvenFunction f = make_even_function(rep.params.f_name, n, params.budget);
        lhs_of([&] { return CyclotomicInteger(lhs_restricted(n, d, r, s, f)); });
        rhs_of([&] { return CyclotomicInteger(rhs_theorem_2_1(n, d, r, s, f)); });
        break;
    }
    case IdentityId::C2_2: {
        rep.params.f_name = "gcd";
        const EvenFunction f = EvenFunction::gcd_even(n);
        lhs_of([&] { return CyclotomicInteger(lhs_restricted(n, d, r, s, f)); });
        rhs_of([&] { return CyclotomicInteger(rhs_cor_2_2(n, d, r, s)); });
        break;
    }
    case IdentityId::C2_3: {
        rep.params.f_name = "ramanujan";
        const EvenFunction f = EvenFunction::ramanujan_even(n);
        lhs_of([&] { return CyclotomicInteger(lhs_restricted(n, d, r, s, f)); });
        rhs_of([&] { return CyclotomicInteger(rhs_cor_2_3(n, d, r, s)); });
        break;
    }
    case IdentityId::BRAUER_RADEMACHER: {
        rep.params.f_name = "ramanujan";
        lhs_of([&] { return CyclotomicInteger(brauer_rademacher(n, s).first); });
        rhs_of([&] { return CyclotomicInteger(Int(moebius(n)) * ramanujan_sum(n, s)); });
        break;
    }
    case IdentityId::T2_4: {
        if (rep.params.f_name.empty())
            rep.params.f_name = "gcd";
        const EvenFunction f = make_even_function(rep.params.f_name, n, params.budget);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_theorem_2_4(n, chi, s, f); });
        break;
    }
    case IdentityId::C2_5: {
        rep.params.f_name = "gcd";
        const EvenFunction f = EvenFunction::gcd_even(n);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_cor_2_5(n, chi, s); });
        break;
    }
    case IdentityId::EQ_MENON_S: {
        rep.params.f_name = "gcd";
        lhs_of([&] { return CyclotomicInteger(naive_gcd_sum(n, s)); });
        rhs_of([&] { return CyclotomicInteger(menon_gcd_sum_fast(n, s)); });
        break;
    }
    case IdentityId::C2_6: {
        rep.params.f_name = "ramanujan";
        const EvenFunction f = EvenFunction::ramanujan_even(n);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_cor_2_6(n, chi, s); });
        break;
    }
    case IdentityId::T2_7: {
        if (rep.params.f_name.empty())
            rep.params.f_name = "gcd";
        const EvenFunction f = make_even_function(rep.params.f_name, n, params.budget);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_theorem_2_7(n, chi, s, f); });
        break;
    }
    case IdentityId::C2_8_SIGMA: {
        rep.params.f_name = "sigma_gcd";
        const EvenFunction f = make_even_function("sigma_gcd", n, params.budget);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_cor_2_8(n, chi, s, ArithFnTag::Sigma); });
        break;
    }
    case IdentityId::C2_8_TAU: {
        rep.params.f_name = "tau_gcd";
        const EvenFunction f = make_even_function("tau_gcd", n, params.budget);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, s, f); });
        rhs_of([&] { return rhs_cor_2_8(n, chi, s, ArithFnTag::Tau); });
        break;
    }
    case IdentityId::ZHAO_CAO_1_1: {
        rep.params.f_name = "gcd";
        rep.params.s = 1;
        const EvenFunction f = EvenFunction::gcd_even(n);
        const DirichletCharacter& chi = chi_ref();
        lhs_of([&] { return lhs_char_sum(n, chi, 1, f); });
        rhs_of([&] { return CyclotomicInteger(euler_phi(n) * tau(n / conductor(chi))); });
        break;
    }
    case IdentityId::MENON_1_2: {
        rep.params.f_name = "gcd";
        rep.params.s = 1;
        lhs_of([&] { return CyclotomicInteger(naive_gcd_sum(n, 1)); });
        rhs_of([&] { return CyclotomicInteger(euler_phi(n) * tau(n)); });
        break;
    }
    case IdentityId::PRIMITIVE_1_3: {
        rep.params.f_name = "gcd";
        rep.params.s = 1;
        const EvenFunction f = EvenFunction::gcd_even(n);
        const DirichletCharacter& chi = chi_ref();
        if (!is_primitive(chi))
            throw std::invalid_argument("PRIMITIVE_1_3: character must be primitive");
        lhs_of([&] { return lhs_char_sum(n, chi, 1, f); });
        rhs_of([&] { return CyclotomicInteger(euler_phi(n)); });
        break;
    }
    case IdentityId::MULT_REMARK: {
        if (rep.params.f_name.empty())
            rep.params.f_name = "tau";
        const ArithFnTag big_f = arith_fn_from_string(rep.params.f_name);
        const std::uint64_t n2 = params.d.value_or(1); // second modulus travels in d
        if (std::gcd(n, n2) != 1)
            throw std::invalid_argument("MULT_REMARK: moduli must be coprime");
        lhs_of([&] { return CyclotomicInteger(mu_star_of(big_f, n * n2)); });
        rhs_of([&] { return CyclotomicInteger(mu_star_of(big_f, n) * mu_star_of(big_f, n2)); });
        break;
    }
    }

    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

std::vector<std::int64_t> s_values_for(const SPolicy& policy, std::uint64_t n) {
    std::vector<std::int64_t> values;
    switch (policy.kind) {
    case SPolicy::Kind::All:
        values.resize(n);
        std::iota(values.begin(), values.end(), std::int64_t(0));
        return values;
    case SPolicy::Kind::List:
        for (std::int64_t s : policy.list)
            values.push_back(canonical_mod(s, n));
        break;
    case SPolicy::Kind::Sample: {
        if (policy.sample_count >= n) {
            values.resize(n);
            std::iota(values.begin(), values.end(), std::int64_t(0));
            return values;
        }
        // Seeded per modulus so a sample does not depend on sweep order.
        std::mt19937_64 rng(policy.seed ^ (n * 0x9E3779B97F4A7C15ULL));
        std::vector<std::int64_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::int64_t(0));
        for (std::uint32_t i = 0; i < policy.sample_count; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(policy.sample_count);
        values = std::move(pool);
        break;
    }
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<IdentityParams> enumerate_sweep(IdentityId id, const SweepOptions& options) {
    std::vector<IdentityParams> out;
    const std::uint64_t n_min = std::max<std::uint64_t>(1, options.n_min);

    auto f_list = [&](std::initializer_list<const char*> fallback) {
        if (!options.f_names.empty())
            return options.f_names;
        std::vector<std::string> fs;
        for (const char* name : fallback)
            fs.emplace_back(name);
        return fs;
    };

    auto base_params = [&](std::uint64_t n) {
        IdentityParams p;
        p.n = n;
        p.budget = options.budget;
        return p;
    };

    if (id == IdentityId::MULT_REMARK) {
        const auto fs = f_list({"tau", "sigma", "phi", "id"});
        for (std::uint64_t n1 = 1; n1 * n1 <= options.n_max; ++n1)
            for (std::uint64_t n2 = n1; n1 * n2 <= options.n_max; ++n2) {
                if (n1 * n2 < n_min || std::gcd(n1, n2) != 1)
                    continue;
                for (const auto& f : fs) {
                    IdentityParams p = base_params(n1);
                    p.d = n2;
                    p.f_name = f;
                    out.push_back(std::move(p));
                }
            }
        return out;
    }

    for (std::uint64_t n = n_min; n <= options.n_max; ++n) {
        switch (id) {
        case IdentityId::MENON_1_2: {
            IdentityParams p = base_params(n);
            p.s = 1;
            p.f_name = "gcd";
            out.push_back(std::move(p));
            break;
        }
        case IdentityId::EQ_MENON_S:
        case IdentityId::BRAUER_RADEMACHER:
            for (std::int64_t s : s_values_for(options.s_policy, n)) {
                IdentityParams p = base_params(n);
                p.s = s;
                out.push_back(std::move(p));
            }
            break;
        case IdentityId::T2_1:
        case IdentityId::C2_2:
        case IdentityId::C2_3: {
            const auto fs = id == IdentityId::T2_1
                                ? f_list({"gcd", "ramanujan", "tau_gcd", "sigma_gcd", "unit_indicator"})
                                : std::vector<std::string>{std::string()};
            const auto ss = s_values_for(options.s_policy, n);
            for (std::uint64_t d : divisors(n).divisors)
                for (std::int64_t r = 0; r < static_cast<std::int64_t>(d); ++r)
                    for (std::int64_t s : ss)
                        for (const auto& f : fs) {
                            IdentityParams p = base_params(n);
                            p.d = d;
                            p.r = r;
                            p.s = s;
                            p.f_name = f;
                            out.push_back(std::move(p));
                        }
            break;
        }
        case IdentityId::T2_4:
        case IdentityId::C2_5:
        case IdentityId::C2_6: {
            const auto fs = id == IdentityId::T2_4
                                ? f_list({"gcd", "ramanujan", "tau_gcd", "sigma_gcd", "unit_indicator"})
                                : std::vector<std::string>{std::string()};
            const auto ss = s_values_for(options.s_policy, n);
            const std::size_t phi_n = characters(n).size();
            for (std::size_t c = 0; c < phi_n; ++c)
                for (std::int64_t s : ss)
                    for (const auto& f : fs) {
                        IdentityParams p = base_params(n);
                        p.chi = c;
                        p.s = s;
                        p.f_name = f;
                        out.push_back(std::move(p));
                    }
            break;
        }
        case IdentityId::T2_7:
        case IdentityId::C2_8_SIGMA:
        case IdentityId::C2_8_TAU: {
            const auto fs = id == IdentityId::T2_7
                                ? f_list({"gcd", "ramanujan", "tau_gcd", "sigma_gcd", "unit_indicator"})
                                : std::vector<std::string>{std::string()};
            const auto chars = characters(n);
            const auto ss = s_values_for(options.s_policy, n);
            for (std::size_t c = 0; c < chars.size(); ++c) {
                if (!is_primitive(chars[c]))
                    continue;
                for (std::int64_t s : ss)
                    for (const auto& f : fs) {
                        IdentityParams p = base_params(n);
                        p.chi = c;
                        p.s = s;
                        p.f_name = f;
                        out.push_back(std::move(p));
                    }
            }
            break;
        }
        case IdentityId::ZHAO_CAO_1_1: {
            const std::size_t phi_n = characters(n).size();
            for (std::size_t c = 0; c < phi_n; ++c) {
                IdentityParams p = base_params(n);
                p.chi = c;
                p.s = 1;
                p.f_name = "gcd";
                out.push_back(std::move(p));
            }
            break;
        }
        case IdentityId::PRIMITIVE_1_3: {
            const auto chars = characters(n);
            for (std::size_t c = 0; c < chars.size(); ++c)
                if (is_primitive(chars[c])) {
                    IdentityParams p = base_params(n);
                    p.chi = c;
                    p.s = 1;
                    p.f_name = "gcd";
                    out.push_back(std::move(p));
                }
            break;
        }
        case IdentityId::MULT_REMARK:
            break; // handled above
        }
    }
    return out;
}

} // namespace menon
