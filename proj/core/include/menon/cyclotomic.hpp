#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "menon/arith.hpp"

namespace menon {

// Dense integer polynomial, coefficients ascending, no trailing zeros.
// The zero polynomial has an empty coefficient list and degree -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one();
    // x^d - 1
    static IntPolynomial power_minus_one(std::uint64_t d);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(std::size_t i) const;

    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // Exact quotient; throws std::invalid_argument if den is zero or does not divide num.
    static IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

    std::string to_string() const; // e.g. "x^2 - x + 1"

  private:
    void normalize();
    std::vector<Int> coeffs_;
};

// The L-th cyclotomic polynomial, monic of degree phi(L), computed by exact
// division from Phi_L = prod over d | L of (x^d - 1)^mu(L/d).
IntPolynomial cyclotomic_poly(std::uint64_t level);

// Cached variant; fills a write-once table shared across threads.
const IntPolynomial& cyclotomic_poly_cached(std::uint64_t level);

// An element of Z[zeta_L] in the power basis 1, zeta, ..., zeta^(phi(L)-1),
// stored as the canonical residue modulo Phi_L. Two elements at the same
// level are ring-equal iff their coefficient vectors are identical; level 1
// encodes plain integers.
class CyclotomicInteger {
  public:
    CyclotomicInteger() : level_(1), coeffs_{Int(0)} {}
    explicit CyclotomicInteger(Int value) : level_(1), coeffs_{std::move(value)} {}
    // coeffs must already be canonical of length phi(level).
    CyclotomicInteger(std::uint64_t level, std::vector<Int> coeffs);

    static CyclotomicInteger zero(std::uint64_t level = 1);
    // zeta_L^a, a reduced mod L then mod Phi_L.
    static CyclotomicInteger root_of_unity(std::uint64_t level, std::int64_t exponent);
    // Reduce an arbitrary coefficient vector (any length) mod Phi_L.
    static CyclotomicInteger from_poly_coeffs(std::uint64_t level, std::vector<Int> coeffs);

    std::uint64_t level() const { return level_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integer() const; // lies in Z, i.e. only the constant coordinate is set
    const Int& integer_value() const; // requires is_integer()

    // Same ring element at level M (level() | M required).
    CyclotomicInteger lifted_to(std::uint64_t new_level) const;

    CyclotomicInteger scaled(const Int& c) const;

    friend CyclotomicInteger operator+(const CyclotomicInteger&, const CyclotomicInteger&);
    friend CyclotomicInteger operator-(const CyclotomicInteger&, const CyclotomicInteger&);
    friend CyclotomicInteger operator-(const CyclotomicInteger&);
    friend CyclotomicInteger operator*(const CyclotomicInteger&, const CyclotomicInteger&);

    // Exact ring equality after lifting both sides to the lcm of the levels.
    friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&);

    // Float approximation for display only, never for equality decisions.
    std::pair<double, double> to_complex() const;

    // Exact rendering: integers plain, otherwise terms like "2*zeta(12)^5".
    std::string to_string() const;

  private:
    std::uint64_t level_;
    std::vector<Int> coeffs_;
};

// sum over t in [0, L) of weights[t] * zeta_L^t, computed with one
// incremental walk of the basis powers. weights.size() must equal L.
CyclotomicInteger weighted_root_power_sum(std::uint64_t level, std::span<const Int> weights);

} // namespace menon
