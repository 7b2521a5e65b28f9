#include "menon/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace menon {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({Int(1)}); }

IntPolynomial IntPolynomial::power_minus_one(std::uint64_t d) {
    std::vector<Int> c(d + 1, Int(0));
    c[0] = -1;
    c[d] = 1;
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    static const Int zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero())
        throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (num.is_zero())
        return {};
    if (num.degree() < den.degree())
        throw std::invalid_argument("divide_exact: quotient is not a polynomial");
    std::vector<Int> rem = num.coeffs_;
    const auto& d = den.coeffs_;
    std::vector<Int> quot(rem.size() - d.size() + 1, Int(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Int& lead = rem[i + d.size() - 1];
        if (lead == 0)
            continue;
        if (lead % d.back() != 0)
            throw std::invalid_argument("divide_exact: inexact coefficient division");
        quot[i] = lead / d.back();
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[i + j] -= quot[i] * d[j];
    }
    for (const Int& c : rem)
        if (c != 0)
            throw std::invalid_argument("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0)
            continue;
        const Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << abs_c;
        } else {
            if (abs_c != 1)
                out << abs_c << "*";
            out << "x";
            if (i > 1)
                out << "^" << i;
        }
    }
    return out.str();
}

IntPolynomial cyclotomic_poly(std::uint64_t level) {
    if (level == 0)
        throw std::invalid_argument("cyclotomic_poly: level must be positive");
    IntPolynomial result = IntPolynomial::one();
    const DivisorTable divs = divisors(level);
    for (std::uint64_t d : divs.divisors)
        if (moebius(level / d) == 1)
            result = result * IntPolynomial::power_minus_one(d);
    for (std::uint64_t d : divs.divisors)
        if (moebius(level / d) == -1)
            result = IntPolynomial::divide_exact(result, IntPolynomial::power_minus_one(d));
    return result;
}

const IntPolynomial& cyclotomic_poly_cached(std::uint64_t level) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::unique_ptr<const IntPolynomial>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(level);
    if (it == cache.end())
        it = cache.emplace(level, std::make_unique<const IntPolynomial>(cyclotomic_poly(level))).first;
    return *it->second;
}

namespace {

std::size_t basis_size(std::uint64_t level) {
    return static_cast<std::size_t>(euler_phi(level).convert_to<std::uint64_t>());
}

// In-place reduction of an arbitrary coefficient vector mod the monic Phi_L;
// returns the canonical low phi(L) coefficients.
std::vector<Int> reduce_mod_cyclotomic(std::uint64_t level, std::vector<Int> coeffs) {
    const IntPolynomial& phi = cyclotomic_poly_cached(level);
    const auto& p = phi.coeffs();
    const std::size_t m = p.size() - 1;
    for (std::size_t i = coeffs.size(); i-- > m;) {
        if (coeffs[i] == 0)
            continue;
        const Int c = coeffs[i];
        for (std::size_t j = 0; j < m; ++j)
            coeffs[i - m + j] -= c * p[j];
        coeffs[i] = 0;
    }
    coeffs.resize(m, Int(0));
    return coeffs;
}

} // namespace

CyclotomicInteger::CyclotomicInteger(std::uint64_t level, std::vector<Int> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (level_ == 0)
        throw std::invalid_argument("CyclotomicInteger: level must be positive");
    if (coeffs_.size() != basis_size(level_))
        throw std::invalid_argument("CyclotomicInteger: coefficient vector must have length phi(level)");
}

CyclotomicInteger CyclotomicInteger::zero(std::uint64_t level) {
    return {level, std::vector<Int>(basis_size(level), Int(0))};
}

CyclotomicInteger CyclotomicInteger::from_poly_coeffs(std::uint64_t level, std::vector<Int> coeffs) {
    coeffs.resize(std::max<std::size_t>(coeffs.size(), basis_size(level)), Int(0));
    return {level, reduce_mod_cyclotomic(level, std::move(coeffs))};
}

CyclotomicInteger CyclotomicInteger::root_of_unity(std::uint64_t level, std::int64_t exponent) {
    if (level == 0)
        throw std::invalid_argument("root_of_unity: level must be positive");
    const std::int64_t L = static_cast<std::int64_t>(level);
    std::int64_t a = exponent % L;
    if (a < 0)
        a += L;
    std::vector<Int> coeffs(static_cast<std::size_t>(a) + 1, Int(0));
    coeffs.back() = 1;
    return from_poly_coeffs(level, std::move(coeffs));
}

bool CyclotomicInteger::is_zero() const {
    for (const Int& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicInteger::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

const Int& CyclotomicInteger::integer_value() const {
    if (!is_integer())
        throw std::logic_error("integer_value: element does not lie in Z");
    return coeffs_[0];
}

CyclotomicInteger CyclotomicInteger::lifted_to(std::uint64_t new_level) const {
    if (new_level == 0 || new_level % level_ != 0)
        throw std::invalid_argument("lifted_to: target level must be a positive multiple of the level");
    if (new_level == level_)
        return *this;
    const std::uint64_t stride = new_level / level_;
    std::vector<Int> coeffs((coeffs_.size() - 1) * stride + 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs[i * stride] = coeffs_[i];
    return from_poly_coeffs(new_level, std::move(coeffs));
}

CyclotomicInteger CyclotomicInteger::scaled(const Int& c) const {
    std::vector<Int> coeffs = coeffs_;
    for (Int& x : coeffs)
        x *= c;
    return {level_, std::move(coeffs)};
}

CyclotomicInteger operator+(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.level_ != b.level_) {
        const std::uint64_t m = std::lcm(a.level_, b.level_);
        return a.lifted_to(m) + b.lifted_to(m);
    }
    std::vector<Int> coeffs = a.coeffs_;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        coeffs[i] += b.coeffs_[i];
    return {a.level_, std::move(coeffs)};
}

CyclotomicInteger operator-(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    return a + (-b);
}

CyclotomicInteger operator-(const CyclotomicInteger& a) {
    std::vector<Int> coeffs = a.coeffs_;
    for (Int& c : coeffs)
        c = -c;
    return {a.level_, std::move(coeffs)};
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.level_ != b.level_) {
        const std::uint64_t m = std::lcm(a.level_, b.level_);
        return a.lifted_to(m) * b.lifted_to(m);
    }
    std::vector<Int> prod(2 * a.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicInteger::from_poly_coeffs(a.level_, std::move(prod));
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.level_ == b.level_)
        return a.coeffs_ == b.coeffs_;
    const std::uint64_t m = std::lcm(a.level_, b.level_);
    return a.lifted_to(m).coeffs_ == b.lifted_to(m).coeffs_;
}

std::pair<double, double> CyclotomicInteger::to_complex() const {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        const double c = coeffs_[i].convert_to<double>();
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(level_);
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {re, im};
}

std::string CyclotomicInteger::to_string() const {
    if (is_integer())
        return coeffs_[0].str();
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0)
            continue;
        const Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            out << abs_c;
        } else {
            if (abs_c != 1)
                out << abs_c << "*";
            out << "zeta(" << level_ << ")^" << i;
        }
    }
    return out.str();
}

CyclotomicInteger weighted_root_power_sum(std::uint64_t level, std::span<const Int> weights) {
    if (level == 0)
        throw std::invalid_argument("weighted_root_power_sum: level must be positive");
    if (weights.size() != level)
        throw std::invalid_argument("weighted_root_power_sum: need one weight per exponent");
    const IntPolynomial& phi = cyclotomic_poly_cached(level);
    const auto& p = phi.coeffs();
    const std::size_t m = p.size() - 1;
    std::vector<Int> acc(m, Int(0));
    std::vector<Int> cur(m, Int(0));
    cur[0] = 1; // zeta^0
    for (std::uint64_t t = 0; t < level; ++t) {
        if (weights[t] != 0)
            for (std::size_t i = 0; i < m; ++i)
                if (cur[i] != 0)
                    acc[i] += weights[t] * cur[i];
        if (t + 1 == level)
            break;
        // cur <- x * cur mod Phi
        Int spill = cur[m - 1];
        for (std::size_t i = m; i-- > 1;)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        if (spill != 0)
            for (std::size_t i = 0; i < m; ++i)
                cur[i] -= spill * p[i];
    }
    return {level, std::move(acc)};
}

} // namespace menon
