#include "juggle/structure.hpp"

#include <algorithm>

#include "juggle/errors.hpp"

namespace juggle {

namespace {

big_int prime_power_product(const std::vector<std::pair<int, int>>& powers, int sign) {
    big_int v = sign;
    for (auto [p, e] : powers) {
        big_int f;
        mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(e));
        v *= f;
    }
    return v;
}

polynomial from_coeffs(std::vector<long> ascending) {
    std::vector<big_int> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return polynomial(std::move(c));
}

std::vector<factor_info> make_factors() {
    std::vector<factor_info> f(14);
    auto full = [&](int i, std::vector<long> ascending) {
        polynomial p = from_coeffs(std::move(ascending));
        f[static_cast<std::size_t>(i)].degree = p.degree();
        f[static_cast<std::size_t>(i)].second_coefficient =
            static_cast<long>(p.coeff(p.degree() - 1).get_si());
        f[static_cast<std::size_t>(i)].constant_term = p.coeff(0);
        f[static_cast<std::size_t>(i)].full = std::move(p);
    };
    auto partial = [&](int i, int degree, long second, std::vector<std::pair<int, int>> powers,
                       int sign) {
        f[static_cast<std::size_t>(i)].degree = degree;
        f[static_cast<std::size_t>(i)].second_coefficient = second;
        f[static_cast<std::size_t>(i)].constant_term = prime_power_product(powers, sign);
    };

    full(0, {-1, 1});
    full(1, {-2, 1});
    full(2, {5, -5, 1});
    full(3, {-20, 27, -10, 1});
    full(4, {-245, 518, -396, 135, -20, 1});
    partial(5, 7, -36, {{2, 5}, {5, 1}, {7, 2}}, -1);
    partial(6, 11, -65, {{2, 5}, {3, 2}, {5, 2}, {7, 3}}, -1);
    partial(7, 15, -110, {{2, 11}, {3, 2}, {5, 3}, {7, 4}}, -1);
    partial(8, 22, -185, {{2, 10}, {3, 4}, {5, 4}, {7, 6}, {11, 2}}, +1);
    partial(9, 30, -300, {{2, 21}, {3, 5}, {5, 6}, {7, 8}, {11, 2}}, +1);
    partial(10, 42, -481, {{2, 21}, {3, 9}, {5, 8}, {7, 12}, {11, 3}, {13, 2}}, +1);
    partial(11, 56, -752, {{2, 38}, {3, 12}, {5, 11}, {7, 16}, {11, 4}, {13, 2}}, +1);
    partial(12, 77, -1165, {{2, 42}, {3, 17}, {5, 16}, {7, 22}, {11, 9}, {13, 3}}, -1);
    partial(13, 101, -1770, {{2, 70}, {3, 23}, {5, 21}, {7, 29}, {11, 11}, {13, 4}}, -1);
    return f;
}

}  // namespace

const std::vector<factor_info>& known_factors() {
    static const std::vector<factor_info> factors = make_factors();
    return factors;
}

const std::vector<long>& exponent_pattern() {
    static const std::vector<long> pattern{1, 0, 0, 1, 2, 5, 9, 19, 37, 74, 148, 296, 591, 1183};
    return pattern;
}

std::vector<long> factor_exponent_row(int b) {
    const auto& pat = exponent_pattern();
    if (b < 0 || b >= static_cast<int>(pat.size()))
        throw std::invalid_argument("factor_exponent_row: recorded only for b <= 13");
    std::vector<long> row(static_cast<std::size_t>(b) + 1, 0);
    for (int i = 0; i <= b; ++i) row[static_cast<std::size_t>(i)] = pat[static_cast<std::size_t>(b - i)];
    return row;
}

bool conjecture_report::all_pass() const {
    return series_identity_ok && std::all_of(matches.begin(), matches.end(), [](bool m) { return m; });
}

conjecture_report conjecture_check(int b_max) {
    if (b_max < 0) throw std::invalid_argument("conjecture_check: b_max must be >= 0");
    conjecture_report r;
    r.b_max = b_max;

    const polynomial numerator = from_coeffs({1, -1, 1, 1});
    const polynomial base = from_coeffs({1, -1, -1});
    const polynomial denominator = base * base * base;

    // Power-series coefficients straight from the denominator's linear
    // recurrence (its constant term is 1).
    r.series.resize(static_cast<std::size_t>(b_max) + 1);
    for (int b = 0; b <= b_max; ++b) {
        big_int c = numerator.coeff(b);
        for (int j = 1; j <= std::min(b, denominator.degree()); ++j)
            c -= denominator.coeff(j) * r.series[static_cast<std::size_t>(b - j)];
        r.series[static_cast<std::size_t>(b)] = c;
    }

    // Independent identity check: denominator * series == numerator,
    // coefficientwise up to order b_max.
    r.series_identity_ok = true;
    for (int b = 0; b <= b_max; ++b) {
        big_int conv = 0;
        for (int j = 0; j <= std::min(b, denominator.degree()); ++j)
            conv += denominator.coeff(j) * r.series[static_cast<std::size_t>(b - j)];
        if (conv != numerator.coeff(b)) r.series_identity_ok = false;
    }

    for (int b = 0; b <= b_max; ++b) {
        r.card_totals.push_back(capped_card_total(b, 2));
        r.matches.push_back(r.card_totals.back() == r.series[static_cast<std::size_t>(b)]);
    }
    return r;
}

bool charpoly_report::pass() const {
    if (!division_ok || !residual_monic) return false;
    if (expected_residual && !(residual == *expected_residual)) return false;
    return residual_matches;
}

charpoly_report charpoly_factor_report(int b) {
    if (b < 0 || b > 13)
        throw std::invalid_argument("charpoly_factor_report: factor data recorded for b <= 13");
    charpoly_report r;
    r.balls = b;
    r.characteristic = char_poly(build_transfer(b));

    const auto& factors = known_factors();
    const auto row = factor_exponent_row(b);
    if (b == 9)
        r.notes.push_back(
            "exponent row for b=9 taken from the multiplicity pattern "
            "1,0,0,1,2,5,9,19,37,74,...");

    polynomial residual = r.characteristic;
    r.division_ok = true;
    for (int i = 0; i <= std::min(b - 1, 4); ++i) {
        const long e = row[static_cast<std::size_t>(i)];
        r.exponents_used.push_back(e);
        for (long rep = 0; rep < e && r.division_ok; ++rep) {
            try {
                residual = exact_div(residual, *factors[static_cast<std::size_t>(i)].full);
            } catch (const not_divisible&) {
                r.division_ok = false;
                r.division_failure = "f_" + std::to_string(i);
            }
        }
    }
    r.residual = residual;
    if (!r.division_ok) return r;

    // Expected residual shape, aggregated over every factor beyond f_4
    // that the pattern row assigns a positive exponent (for b <= 7 that is
    // just the top factor itself). Monic factors multiply degree and
    // constant term and add their below-leading coefficients.
    r.expected_degree = 0;
    r.expected_second_coefficient = 0;
    r.expected_constant = 1;
    for (int i = 5; i <= b; ++i) {
        const long e = row[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        const auto& fi = factors[static_cast<std::size_t>(i)];
        r.expected_degree += static_cast<int>(e) * fi.degree;
        r.expected_second_coefficient += big_int(e) * fi.second_coefficient;
        for (long rep = 0; rep < e; ++rep) r.expected_constant *= fi.constant_term;
    }
    if (b <= 4) {
        r.expected_residual = *factors[static_cast<std::size_t>(b)].full;
        r.expected_degree = factors[static_cast<std::size_t>(b)].degree;
        r.expected_second_coefficient = factors[static_cast<std::size_t>(b)].second_coefficient;
        r.expected_constant = factors[static_cast<std::size_t>(b)].constant_term;
    }

    r.residual_monic = residual.is_monic();
    r.actual_degree = residual.degree();
    r.actual_second_coefficient = residual.coeff(residual.degree() - 1);
    r.actual_constant = residual.coeff(0);
    r.residual_matches = r.actual_degree == r.expected_degree &&
                         r.actual_second_coefficient == r.expected_second_coefficient &&
                         r.actual_constant == r.expected_constant;
    return r;
}

namespace {

// Backtracking over injections of the small matrix's vertices into the
// large one; prunes on every new row/column pair.
class containment_searcher {
public:
    containment_searcher(const exact_matrix& small, const exact_matrix& large)
        : small_(small), large_(large), m_(small.dim()), big_(large.dim()) {}

    std::optional<containment_witness> run(int b) {
        std::vector<int> phi;
        phi.reserve(static_cast<std::size_t>(m_));
        std::vector<bool> used(static_cast<std::size_t>(big_), false);
        containment_witness w;
        w.balls = b;
        extend(phi, used, w);
        if (w.embedding.empty()) return std::nullopt;
        return w;
    }

private:
    // Returns true once a triangular witness is found (stops the search);
    // the first plain embedding found is kept either way.
    bool extend(std::vector<int>& phi, std::vector<bool>& used, containment_witness& w) {
        const int i = static_cast<int>(phi.size());
        if (i == m_) {
            if (w.embedding.empty()) w.embedding = phi;
            std::vector<int> order;
            if (triangular_completion(phi, used, order)) {
                w.embedding = phi;
                w.triangular_order_found = true;
                w.full_order = std::move(order);
                return true;
            }
            return false;
        }
        for (int cand = 0; cand < big_; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            bool ok = large_.at(cand, cand) == small_.at(i, i);
            for (int j = 0; ok && j < i; ++j)
                ok = large_.at(phi[static_cast<std::size_t>(j)], cand) == small_.at(j, i) &&
                     large_.at(cand, phi[static_cast<std::size_t>(j)]) == small_.at(i, j);
            if (!ok) continue;
            phi.push_back(cand);
            used[static_cast<std::size_t>(cand)] = true;
            if (extend(phi, used, w)) return true;
            used[static_cast<std::size_t>(cand)] = false;
            phi.pop_back();
        }
        return false;
    }

    // The leftover vertices must fill rows m_+1..2m_ with zeros left of the
    // diagonal in the lower-left block: vertex v can sit at block row i only
    // if its first nonzero column (against phi) is >= i. Sorting by that
    // first-nonzero index decides feasibility (Hall condition on prefixes).
    bool triangular_completion(const std::vector<int>& phi, const std::vector<bool>& used,
                               std::vector<int>& order) const {
        std::vector<std::pair<int, int>> rest;  // (first nonzero 1-based, vertex)
        for (int v = 0; v < big_; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            int first = m_ + 1;
            for (int j = 0; j < m_; ++j)
                if (large_.at(v, phi[static_cast<std::size_t>(j)]) != 0) {
                    first = j + 1;
                    break;
                }
            rest.emplace_back(first, v);
        }
        std::stable_sort(rest.begin(), rest.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < rest.size(); ++i)
            if (rest[i].first < static_cast<int>(i) + 1) return false;
        order = phi;
        for (const auto& [first, v] : rest) order.push_back(v);
        return true;
    }

    const exact_matrix& small_;
    const exact_matrix& large_;
    int m_;
    int big_;
};

}  // namespace

std::optional<containment_witness> submatrix_containment_search(int b, int max_balls_guard) {
    if (b < 1) throw std::invalid_argument("submatrix_containment_search: b must be >= 1");
    if (b > max_balls_guard)
        throw feasibility_error("submatrix_containment_search: b=" + std::to_string(b) +
                                " exceeds the search guard b<=" + std::to_string(max_balls_guard));
    const exact_matrix small = build_transfer(b - 1);
    const exact_matrix large = build_transfer(b);
    return containment_searcher(small, large).run(b);
}

}  // namespace juggle
