#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "juggle/bigint.hpp"

namespace juggle {

/// Dense polynomial with exact integer coefficients, coefficient index =
/// degree. Trailing zero coefficients are always stripped; the zero
/// polynomial has degree -1.
class polynomial {
public:
    polynomial() = default;
    polynomial(long constant);               // NOLINT(google-explicit-constructor)
    polynomial(big_int constant);            // NOLINT(google-explicit-constructor)
    explicit polynomial(std::vector<big_int> coefficients);

    static polynomial monomial(int degree, big_int coefficient = 1);

    int degree() const noexcept { return static_cast<int>(coeff_.size()) - 1; }
    bool is_zero() const noexcept { return coeff_.empty(); }
    bool is_monic() const noexcept { return !coeff_.empty() && coeff_.back() == 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const big_int& coeff(int i) const;
    const std::vector<big_int>& coefficients() const noexcept { return coeff_; }

    polynomial operator+(const polynomial& o) const;
    polynomial operator-(const polynomial& o) const;
    polynomial operator-() const;
    polynomial operator*(const polynomial& o) const;
    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }
    bool operator==(const polynomial&) const = default;

    /// Evaluation at an integer point (Horner).
    big_int operator()(const big_int& x) const;

    /// Substitution x -> x^factor (coefficients spread out; factor >= 1).
    polynomial stretched(int factor) const;

    /// Compact rendering, highest degree first: "x^3-10x^2+27x-20".
    std::string str(std::string_view var = "x") const;

private:
    void normalize();
    std::vector<big_int> coeff_;
};

/// Signalled by exact_div when the division leaves a remainder.
class not_divisible : public std::runtime_error {
public:
    not_divisible(std::string what, polynomial remainder_poly)
        : std::runtime_error(std::move(what)), remainder(std::move(remainder_poly)) {}
    polynomial remainder;
};

/// Quotient p / d over the integers; throws not_divisible (carrying the
/// offending remainder) unless d divides p exactly.
polynomial exact_div(const polynomial& p, const polynomial& d);

polynomial pow(const polynomial& p, unsigned long e);

}  // namespace juggle
