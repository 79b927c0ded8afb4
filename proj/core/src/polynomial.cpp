#include "juggle/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace juggle {

namespace {
const big_int kZero = 0;
}

polynomial::polynomial(long constant) {
    if (constant != 0) coeff_.emplace_back(constant);
}

polynomial::polynomial(big_int constant) {
    if (constant != 0) coeff_.push_back(std::move(constant));
}

polynomial::polynomial(std::vector<big_int> coefficients) : coeff_(std::move(coefficients)) {
    normalize();
}

polynomial polynomial::monomial(int degree, big_int coefficient) {
    if (degree < 0) throw std::invalid_argument("monomial: degree must be >= 0");
    if (coefficient == 0) return {};
    std::vector<big_int> c(static_cast<std::size_t>(degree) + 1, kZero);
    c.back() = std::move(coefficient);
    return polynomial(std::move(c));
}

void polynomial::normalize() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

const big_int& polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return kZero;
    return coeff_[static_cast<std::size_t>(i)];
}

polynomial polynomial::operator+(const polynomial& o) const {
    std::vector<big_int> c(std::max(coeff_.size(), o.coeff_.size()), kZero);
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = coeff_[i];
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return polynomial(std::move(c));
}

polynomial polynomial::operator-() const {
    std::vector<big_int> c(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] = -coeff_[i];
    return polynomial(std::move(c));
}

polynomial polynomial::operator-(const polynomial& o) const { return *this + (-o); }

polynomial polynomial::operator*(const polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<big_int> c(coeff_.size() + o.coeff_.size() - 1, kZero);
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    return polynomial(std::move(c));
}

big_int polynomial::operator()(const big_int& x) const {
    big_int acc = 0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

polynomial polynomial::stretched(int factor) const {
    if (factor < 1) throw std::invalid_argument("stretched: factor must be >= 1");
    if (is_zero() || factor == 1) return *this;
    std::vector<big_int> c(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(factor) + 1,
                           kZero);
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i * static_cast<std::size_t>(factor)] = coeff_[i];
    return polynomial(std::move(c));
}

std::string polynomial::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const big_int& c = coeff(d);
        if (c == 0) continue;
        big_int mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? '-' : '+';
        }
        if (mag != 1 || d == 0) out += mag.get_str();
        if (d >= 1) {
            out += var;
            if (d >= 2) {
                out += '^';
                out += std::to_string(d);
            }
        }
    }
    return out;
}

polynomial exact_div(const polynomial& p, const polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree())
        throw not_divisible("exact_div: divisor degree exceeds dividend degree", p);

    std::vector<big_int> rem = p.coefficients();
    std::vector<big_int> quot(static_cast<std::size_t>(p.degree() - d.degree()) + 1, big_int(0));
    const auto& dc = d.coefficients();
    const big_int& lead = dc.back();

    for (int i = p.degree() - d.degree(); i >= 0; --i) {
        big_int& top = rem[static_cast<std::size_t>(i + d.degree())];
        if (top == 0) continue;
        if (top % lead != 0)
            throw not_divisible("exact_div: leading coefficient does not divide",
                                polynomial(std::move(rem)));
        big_int q = top / lead;
        for (int j = 0; j <= d.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * dc[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(i)] = std::move(q);
    }
    polynomial remainder{std::vector<big_int>(rem.begin(), rem.end())};
    if (!remainder.is_zero())
        throw not_divisible("exact_div: nonzero remainder " + remainder.str(), remainder);
    return polynomial(std::move(quot));
}

polynomial pow(const polynomial& p, unsigned long e) {
    polynomial acc(1);
    polynomial base = p;
    while (e > 0) {
        if (e & 1UL) acc *= base;
        e >>= 1UL;
        if (e > 0) base *= base;
    }
    return acc;
}

}  // namespace juggle
