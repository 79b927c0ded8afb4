#pragma once

#include <optional>
#include <string>
#include <vector>

#include "juggle/bigint.hpp"
#include "juggle/matrix.hpp"
#include "juggle/polynomial.hpp"

namespace juggle {

/// Reference data for the recurring characteristic-polynomial factors.
/// f_0..f_4 are known in full; for the rest only the degree, the
/// coefficient below the leading term, and the constant term are recorded.
struct factor_info {
    int degree = 0;
    long second_coefficient = 0;
    big_int constant_term;
    std::optional<polynomial> full;
};

/// f_0 .. f_13.
const std::vector<factor_info>& known_factors();

/// Multiplicity pattern: the exponent of f_i in the characteristic
/// polynomial for b balls is exponent_pattern()[b - i].
const std::vector<long>& exponent_pattern();

/// Exponents of f_0..f_b in the characteristic polynomial for b balls.
std::vector<long> factor_exponent_row(int b);

/// Per-ball-count verdict of the capacity-2 card-total generating
/// function (1 - x + x^2 + x^3) / (1 - x - x^2)^3.
struct conjecture_report {
    int b_max = 0;
    std::vector<big_int> series;       // power-series coefficients 0..b_max
    std::vector<big_int> card_totals;  // capped_card_total(b, 2)
    std::vector<bool> matches;
    bool series_identity_ok = false;   // denominator * series == numerator (truncated)
    bool all_pass() const;
};

conjecture_report conjecture_check(int b_max);

/// Divides the characteristic polynomial for b balls by the fully known
/// factors f_0..f_4 raised to their pattern exponents, then checks the
/// residual against the recorded partial data of the remaining factors.
struct charpoly_report {
    int balls = 0;
    polynomial characteristic;
    std::vector<long> exponents_used;  // for f_0..f_4
    bool division_ok = false;
    std::string division_failure;      // which factor refused to divide
    polynomial residual;
    bool residual_monic = false;
    int expected_degree = 0;
    int actual_degree = 0;
    big_int expected_second_coefficient;
    big_int actual_second_coefficient;
    big_int expected_constant;
    big_int actual_constant;
    std::optional<polynomial> expected_residual;  // full comparison when known
    bool residual_matches = false;
    std::vector<std::string> notes;
    bool pass() const;
};

charpoly_report charpoly_factor_report(int b);

/// Searches for a copy of the (b-1)-ball transfer matrix as a principal
/// submatrix of the b-ball one, and for a vertex order that additionally
/// makes the lower-left block upper triangular.
struct containment_witness {
    int balls = 0;
    /// For each smaller-matrix row i, the larger-matrix vertex index it
    /// maps to (in order).
    std::vector<int> embedding;
    bool triangular_order_found = false;
    /// Full vertex order of the larger matrix witnessing the triangular
    /// arrangement; empty unless triangular_order_found.
    std::vector<int> full_order;
};

std::optional<containment_witness> submatrix_containment_search(int b, int max_balls_guard = 5);

}  // namespace juggle
