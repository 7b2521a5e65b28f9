#include "menon/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace menon {

namespace {

// Gap sequence of the mod-30 wheel starting at 7: 7, 11, 13, 17, 19, 23, 29, 31, ...
constexpr std::uint64_t kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

} // namespace

CanonicalFactorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    CanonicalFactorization fac;
    fac.n = n;
    auto strip = [&](std::uint64_t p) {
        if (n % p != 0)
            return;
        std::uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        fac.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    std::uint64_t p = 7;
    std::size_t w = 0;
    while (p * p <= n) {
        strip(p);
        p += kWheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1)
        fac.factors.push_back({n, 1});
    return fac;
}

bool DivisorTable::contains(std::uint64_t d) const {
    return std::binary_search(divisors.begin(), divisors.end(), d);
}

std::size_t DivisorTable::index_of(std::uint64_t d) const {
    auto it = std::lower_bound(divisors.begin(), divisors.end(), d);
    if (it == divisors.end() || *it != d)
        throw std::invalid_argument("DivisorTable: " + std::to_string(d) +
                                    " does not divide " + std::to_string(n));
    return static_cast<std::size_t>(it - divisors.begin());
}

DivisorTable divisors(const CanonicalFactorization& fac) {
    DivisorTable table;
    table.n = fac.n;
    table.divisors = {1};
    for (const auto& [p, e] : fac.factors) {
        const std::size_t base = table.divisors.size();
        std::uint64_t pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                table.divisors.push_back(table.divisors[i] * pk);
        }
    }
    std::sort(table.divisors.begin(), table.divisors.end());
    return table;
}

DivisorTable divisors(std::uint64_t n) { return divisors(factorize(n)); }

int moebius(const CanonicalFactorization& fac) {
    for (const auto& [p, e] : fac.factors)
        if (e >= 2)
            return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t n) { return moebius(factorize(n)); }

Int euler_phi(const CanonicalFactorization& fac) {
    Int phi = 1;
    for (const auto& [p, e] : fac.factors) {
        Int pe1 = 1;
        for (std::uint32_t k = 1; k < e; ++k)
            pe1 *= p;
        phi *= pe1 * (Int(p) - 1);
    }
    return phi;
}

Int euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

Int tau(const CanonicalFactorization& fac) {
    Int t = 1;
    for (const auto& [p, e] : fac.factors)
        t *= e + 1;
    return t;
}

Int tau(std::uint64_t n) { return tau(factorize(n)); }

Int sigma(const CanonicalFactorization& fac) {
    Int s = 1;
    for (const auto& [p, e] : fac.factors) {
        Int geom = 1, pk = 1;
        for (std::uint32_t k = 1; k <= e; ++k) {
            pk *= p;
            geom += pk;
        }
        s *= geom;
    }
    return s;
}

Int sigma(std::uint64_t n) { return sigma(factorize(n)); }

std::uint64_t gcd_mod(std::int64_t k, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("gcd_mod: n must be positive");
    const std::int64_t m = static_cast<std::int64_t>(n);
    std::int64_t r = k % m;
    if (r < 0)
        r += m;
    return std::gcd(static_cast<std::uint64_t>(r), n);
}

std::uint64_t gcd_int(std::int64_t a, std::uint64_t b) {
    const std::uint64_t abs_a =
        a < 0 ? static_cast<std::uint64_t>(-(a + 1)) + 1 : static_cast<std::uint64_t>(a);
    return std::gcd(abs_a, b);
}

Int ramanujan_sum(std::uint64_t n, std::int64_t k) {
    const std::uint64_t g = gcd_mod(k, n);
    Int c = 0;
    for (std::uint64_t e : divisors(g).divisors)
        c += Int(e) * moebius(n / e);
    return c;
}

std::vector<Int> dirichlet_convolve(const DivisorTable& divs,
                                    std::span<const Int> f,
                                    std::span<const Int> g) {
    if (f.size() != divs.size() || g.size() != divs.size())
        throw std::invalid_argument("dirichlet_convolve: value vectors must match the divisor table");
    std::vector<Int> out(divs.size(), Int(0));
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::uint64_t d = divs.divisors[i];
        for (std::size_t a = 0; a < divs.size(); ++a) {
            const std::uint64_t da = divs.divisors[a];
            if (da > d)
                break;
            if (d % da != 0)
                continue;
            out[i] += f[a] * g[divs.index_of(d / da)];
        }
    }
    return out;
}

std::vector<Int> moebius_invert(const DivisorTable& divs, std::span<const Int> f) {
    if (f.size() != divs.size())
        throw std::invalid_argument("moebius_invert: value vector must match the divisor table");
    std::vector<Int> out(divs.size(), Int(0));
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::uint64_t d = divs.divisors[i];
        for (std::size_t a = 0; a <= i; ++a) {
            const std::uint64_t e = divs.divisors[a];
            if (d % e != 0)
                continue;
            const int mu = moebius(d / e);
            if (mu != 0)
                out[i] += Int(mu) * f[a];
        }
    }
    return out;
}

std::vector<Int> divisor_sums(const DivisorTable& divs, std::span<const Int> g) {
    if (g.size() != divs.size())
        throw std::invalid_argument("divisor_sums: value vector must match the divisor table");
    std::vector<Int> out(divs.size(), Int(0));
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const std::uint64_t d = divs.divisors[i];
        for (std::size_t a = 0; a <= i; ++a)
            if (d % divs.divisors[a] == 0)
                out[i] += g[a];
    }
    return out;
}

} // namespace menon
