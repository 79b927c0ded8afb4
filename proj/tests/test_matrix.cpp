#include "doctest.h"
#include "juggle/errors.hpp"
#include "juggle/matrix.hpp"

using namespace juggle;

namespace {

polynomial qpoly(std::vector<long> ascending) {
    std::vector<big_int> c(ascending.begin(), ascending.end());
    return polynomial(std::move(c));
}

exact_matrix from_rows(const std::vector<std::vector<long>>& rows,
                       std::vector<composition> labels) {
    exact_matrix m(static_cast<int>(rows.size()), std::move(labels));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

// The reference matrices, each in its own vertex order.
exact_matrix reference_a2() {
    return from_rows({{2, 1}, {1, 3}}, reference_vertex_order(2));
}

exact_matrix reference_a3() {
    return from_rows({{2, 1, 1, 1}, {1, 3, 2, 3}, {1, 1, 2, 0}, {0, 1, 1, 4}},
                     reference_vertex_order(3));
}

exact_matrix reference_a4() {
    return from_rows({{2, 1, 1, 1, 1, 1, 1, 1},
                      {1, 3, 2, 3, 2, 3, 3, 4},
                      {1, 1, 2, 0, 0, 0, 0, 0},
                      {0, 1, 1, 4, 1, 3, 3, 6},
                      {1, 1, 1, 1, 3, 1, 1, 0},
                      {0, 1, 0, 2, 1, 2, 0, 0},
                      {0, 0, 1, 0, 1, 1, 3, 0},
                      {0, 0, 0, 1, 0, 1, 1, 5}},
                     reference_vertex_order(4));
}

}  // namespace

TEST_SUITE("matrices") {

TEST_CASE("transfer matrices match the stored references") {
    CHECK(build_transfer(0).at(0, 0) == 1);
    CHECK(build_transfer(1).at(0, 0) == 2);
    CHECK(permuted(build_transfer(2), reference_vertex_order(2)) == reference_a2());
    CHECK(permuted(build_transfer(3), reference_vertex_order(3)) == reference_a3());
    CHECK(permuted(build_transfer(4), reference_vertex_order(4)) == reference_a4());
}

TEST_CASE("reference permutation round-trips") {
    const auto canon = compositions(4);
    const auto perm = reference_permutation(4);
    const auto ref = reference_vertex_order(4);
    for (std::size_t i = 0; i < ref.size(); ++i)
        CHECK(canon[static_cast<std::size_t>(perm[i])] == ref[i]);
    CHECK_THROWS_AS(reference_vertex_order(5), std::invalid_argument);
}

TEST_CASE("q-weighted matrix matches the stored reference") {
    const auto m = permuted(build_transfer_q(3), reference_vertex_order(3));
    const std::vector<std::vector<polynomial>> expected{
        {qpoly({2}), qpoly({1}), qpoly({1}), qpoly({1})},
        {qpoly({1}), qpoly({2, 1}), qpoly({1, 1}), qpoly({1, 1, 1})},
        {qpoly({1}), qpoly({0, 1}), qpoly({2}), qpoly({})},
        {qpoly({}), qpoly({1}), qpoly({0, 1}), qpoly({2, 1, 1})}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(m.at(i, j) == expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
}

TEST_CASE("distinct-height matrices match the stored references") {
    const card_filter distinct{{}, true};
    const auto a2 = permuted(build_transfer(2, distinct), reference_vertex_order(2));
    CHECK(a2 == from_rows({{1, 1}, {1, 3}}, reference_vertex_order(2)));
    const auto a3 = permuted(build_transfer(3, distinct), reference_vertex_order(3));
    CHECK(a3 == from_rows({{1, 0, 0, 1}, {0, 2, 1, 3}, {1, 1, 2, 0}, {0, 1, 1, 4}},
                          reference_vertex_order(3)));
}

TEST_CASE("traces of small powers") {
    const auto a3 = build_transfer(3);
    CHECK(a3.trace() == 11);
    CHECK(a3.pow(2).trace() == 47);
    CHECK(build_transfer(2).pow(2).trace() == 15);
    CHECK(transfer_trace(3) == 11);
}

TEST_CASE("pow is a homomorphism and pow(0) is the identity") {
    const auto a = build_transfer(3);
    CHECK(a.pow(0) == exact_matrix::identity(a.dim(), a.labels()));
    CHECK(a.pow(5) == a.pow(2) * a.pow(3));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(build_transfer(2) * build_transfer(3), std::invalid_argument);
}

TEST_CASE("row, column, and entry sums follow the directional counts") {
    for (int b = 0; b <= 8; ++b) {
        const auto m = build_transfer(b);
        big_int total = 0;
        for (int i = 0; i < m.dim(); ++i) {
            big_int row = 0, col = 0;
            for (int j = 0; j < m.dim(); ++j) {
                row += m.at(i, j);
                col += m.at(j, i);
                total += m.at(i, j);
            }
            CHECK(row == card_count_from(m.labels()[static_cast<std::size_t>(i)]));
            CHECK(col == card_count_into(m.labels()[static_cast<std::size_t>(i)]));
        }
        CHECK(total == card_count(b));
        if (b == 4) CHECK(total == 82);
    }
}

TEST_CASE("q-weighted matrix at q = 1 is the plain matrix") {
    for (int b = 0; b <= 6; ++b) {
        const auto plain = build_transfer(b);
        const auto weighted = build_transfer_q(b);
        for (int i = 0; i < plain.dim(); ++i)
            for (int j = 0; j < plain.dim(); ++j)
                CHECK(weighted.at(i, j)(big_int(1)) == plain.at(i, j));
    }
}

TEST_CASE("capped matrix is the principal submatrix on capped vertices") {
    for (int b = 0; b <= 6; ++b)
        for (int kappa = 1; kappa <= 3; ++kappa) {
            const auto full = build_transfer(b);
            const auto capped = build_transfer(b, card_filter{kappa, false});
            for (int i = 0; i < capped.dim(); ++i)
                for (int j = 0; j < capped.dim(); ++j) {
                    const int fi = static_cast<int>(
                        composition_index(capped.labels()[static_cast<std::size_t>(i)]));
                    const int fj = static_cast<int>(
                        composition_index(capped.labels()[static_cast<std::size_t>(j)]));
                    CHECK(capped.at(i, j) == full.at(fi, fj));
                }
        }
}

TEST_CASE("trace equals the negated second characteristic coefficient") {
    for (int b = 0; b <= 7; ++b) {
        const auto m = build_transfer(b);
        const auto p = char_poly(m);
        CHECK(p.degree() == m.dim());
        CHECK(p.is_monic());
        CHECK(p.coeff(p.degree() - 1) == -m.trace());
    }
}

TEST_CASE("characteristic polynomials of the reference matrices") {
    CHECK(char_poly(exact_matrix::identity(2)).str() == "x^2-2x+1");
    CHECK(char_poly(build_transfer(2)).str() == "x^2-5x+5");

    const polynomial f0 = qpoly({-1, 1});
    const polynomial f1 = qpoly({-2, 1});
    const polynomial f3 = qpoly({-20, 27, -10, 1});
    const polynomial f4 = qpoly({-245, 518, -396, 135, -20, 1});
    CHECK(char_poly(build_transfer(3)) == f0 * f3);

    const polynomial p4 = char_poly(build_transfer(4));
    CHECK(exact_div(p4, f0 * f0 * f1) == f4);
    CHECK_THROWS_AS(exact_div(qpoly({1, 0, 1}), qpoly({-1, 1})), not_divisible);
}

TEST_CASE("row-block threading does not change products") {
    const auto a = build_transfer(7);  // 64-dim, above the split threshold
    const auto serial = a * a;
    set_max_threads(4);
    const auto threaded = a * a;
    set_max_threads(1);
    CHECK(serial == threaded);
}

TEST_CASE("traces match the reference sequence through b = 12") {
    const std::vector<long> expected{1,   2,   5,    11,   24,   50,  104,
                                     212, 431, 870,  1752, 3518, 7057};
    for (std::size_t b = 0; b < expected.size(); ++b)
        CHECK(transfer_trace(static_cast<int>(b)) == expected[b]);
}

}  // TEST_SUITE
