#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace menon {

// Exact scalar types used throughout. All identity comparisons are
// zero-tolerance, so sums accumulate in Int and ratios in Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Sorted prime-power decomposition; factors empty iff n == 1.
struct CanonicalFactorization {
    std::uint64_t n = 1;
    std::vector<PrimePower> factors;
};

// Trial division with a 2/3/5 wheel; rejects n == 0.
CanonicalFactorization factorize(std::uint64_t n);

// All divisors of n, ascending. divisors.front() == 1, divisors.back() == n.
struct DivisorTable {
    std::uint64_t n = 1;
    std::vector<std::uint64_t> divisors{1};

    std::size_t size() const { return divisors.size(); }
    bool contains(std::uint64_t d) const;
    // Position of d in the ascending list; throws std::invalid_argument if d | n fails.
    std::size_t index_of(std::uint64_t d) const;
};

DivisorTable divisors(const CanonicalFactorization& fac);
DivisorTable divisors(std::uint64_t n);

int moebius(const CanonicalFactorization& fac);
int moebius(std::uint64_t n);

Int euler_phi(const CanonicalFactorization& fac);
Int euler_phi(std::uint64_t n);

Int tau(const CanonicalFactorization& fac);
Int tau(std::uint64_t n);

Int sigma(const CanonicalFactorization& fac);
Int sigma(std::uint64_t n);

// gcd(k mod n, n) with gcd(0, n) = n; k may be any integer, n >= 1.
std::uint64_t gcd_mod(std::int64_t k, std::uint64_t n);

// Plain gcd of |a| and b, gcd(0, b) = b. For coprimality conditions like (e, s) = 1.
std::uint64_t gcd_int(std::int64_t a, std::uint64_t b);

// Ramanujan sum c_n(k) = sum over e | (k, n) of e * mu(n / e).
// c_n(0) = phi(n), c_n(1) = mu(n).
Int ramanujan_sum(std::uint64_t n, std::int64_t k);

// (f * g)(d) = sum over ab = d of f(a) g(b), for every d | n.
// f and g are indexed by the ascending divisor list; sizes must match it.
std::vector<Int> dirichlet_convolve(const DivisorTable& divs,
                                    std::span<const Int> f,
                                    std::span<const Int> g);

// g = mu * f, so that sum over e | d of g(e) recovers f(d).
std::vector<Int> moebius_invert(const DivisorTable& divs, std::span<const Int> f);

// The summatory transform: h(d) = sum over e | d of g(e). Inverse of moebius_invert.
std::vector<Int> divisor_sums(const DivisorTable& divs, std::span<const Int> g);

} // namespace menon
