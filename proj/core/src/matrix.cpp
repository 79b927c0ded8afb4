#include "juggle/matrix.hpp"

#include <map>

#include "juggle/errors.hpp"

namespace juggle {

std::string card_filter::describe() const {
    std::string s = kappa ? "capped(k=" + std::to_string(*kappa) + ")" : "plain";
    if (distinct_heights) s += "+distinct";
    return s;
}

std::vector<composition> transfer_vertices(int b, const card_filter& filter) {
    if (filter.kappa) return capped_compositions(b, *filter.kappa);
    return compositions(b);
}

namespace {

// Entry accumulation shared by the integer and q-weighted builds.
template <class T, class Weight>
square_matrix<T> build_matrix(int b, const card_filter& filter, const Weight& weight_of) {
    std::vector<composition> verts = transfer_vertices(b, filter);
    const int dim = static_cast<int>(verts.size());
    square_matrix<T> m(dim, verts);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            T acc(0);
            if (verts[static_cast<std::size_t>(i)] == verts[static_cast<std::size_t>(j)])
                acc = acc + T(1);  // weight of the trivial card is always 1
            for_each_card_between(verts[static_cast<std::size_t>(i)],
                                  verts[static_cast<std::size_t>(j)], [&](const card& c) {
                                      if (filter.admits(c)) acc = acc + weight_of(c);
                                  });
            m.at(i, j) = acc;
        }
    return m;
}

template <class T, class Weight>
T diagonal_trace(int b, const card_filter& filter, const Weight& weight_of) {
    T acc(0);
    auto visit = [&](const composition& v) {
        acc = acc + T(1);  // trivial card
        for_each_card_between(v, v, [&](const card& c) {
            if (filter.admits(c)) acc = acc + weight_of(c);
        });
    };
    if (filter.kappa)
        for_each_capped_composition(b, *filter.kappa, visit);
    else
        for_each_composition(b, visit);
    return acc;
}

big_int unit_weight(const card&) { return 1; }
polynomial crossing_weight(const card& c) { return polynomial::monomial(c.crossings()); }

}  // namespace

exact_matrix build_transfer(int b, const card_filter& filter) {
    if (!filter.distinct_heights) {
        // Counting embeddings needs no card materialization.
        std::vector<composition> verts = transfer_vertices(b, filter);
        const int dim = static_cast<int>(verts.size());
        exact_matrix m(dim, verts);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m.at(i, j) = big_int(static_cast<unsigned long>(count_cards_between(
                    verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])));
        return m;
    }
    return build_matrix<big_int>(b, filter, unit_weight);
}

poly_matrix build_transfer_q(int b, const card_filter& filter) {
    return build_matrix<polynomial>(b, filter, crossing_weight);
}

big_int transfer_trace(int b, const card_filter& filter) {
    if (!filter.distinct_heights) {
        big_int acc = 0;
        auto visit = [&](const composition& v) {
            acc += big_int(static_cast<unsigned long>(count_cards_between(v, v)));
        };
        if (filter.kappa)
            for_each_capped_composition(b, *filter.kappa, visit);
        else
            for_each_composition(b, visit);
        return acc;
    }
    return diagonal_trace<big_int>(b, filter, unit_weight);
}

polynomial transfer_trace_q(int b, const card_filter& filter) {
    return diagonal_trace<polynomial>(b, filter, crossing_weight);
}

std::vector<composition> reference_vertex_order(int b) {
    auto make = [](std::vector<std::vector<int>> rows) {
        std::vector<composition> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.emplace_back(std::move(r));
        return out;
    };
    switch (b) {
        case 0: return make({{}});
        case 1: return make({{1}});
        case 2: return make({{2}, {1, 1}});
        case 3: return make({{3}, {2, 1}, {1, 2}, {1, 1, 1}});
        case 4:
            return make({{4}, {3, 1}, {1, 3}, {2, 1, 1}, {2, 2}, {1, 2, 1}, {1, 1, 2}, {1, 1, 1, 1}});
        default:
            throw std::invalid_argument("reference_vertex_order: stored only for b <= 4");
    }
}

std::vector<int> reference_permutation(int b) {
    const auto ref = reference_vertex_order(b);
    std::vector<int> perm;
    perm.reserve(ref.size());
    for (const auto& c : ref) perm.push_back(static_cast<int>(composition_index(c)));
    return perm;
}

namespace {

template <class T>
square_matrix<T> permuted_impl(const square_matrix<T>& m, const std::vector<composition>& order) {
    if (static_cast<int>(order.size()) != m.dim())
        throw std::invalid_argument("permuted: order size must match dimension");
    std::map<composition, int> pos;
    for (int i = 0; i < m.dim(); ++i) pos[m.labels()[static_cast<std::size_t>(i)]] = i;
    std::vector<int> src;
    src.reserve(order.size());
    for (const auto& c : order) {
        auto it = pos.find(c);
        if (it == pos.end()) throw std::invalid_argument("permuted: label not present: " + c.str());
        src.push_back(it->second);
    }
    square_matrix<T> out(m.dim(), order);
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out.at(i, j) = m.at(src[static_cast<std::size_t>(i)], src[static_cast<std::size_t>(j)]);
    return out;
}

}  // namespace

exact_matrix permuted(const exact_matrix& m, const std::vector<composition>& order) {
    return permuted_impl(m, order);
}

poly_matrix permuted(const poly_matrix& m, const std::vector<composition>& order) {
    return permuted_impl(m, order);
}

polynomial char_poly(const exact_matrix& a) {
    const int n = a.dim();
    if (n == 0) return polynomial(1);
    std::vector<big_int> coeff(static_cast<std::size_t>(n) + 1, big_int(0));
    coeff[static_cast<std::size_t>(n)] = 1;
    exact_matrix m = exact_matrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        exact_matrix am = a * m;
        big_int s = am.trace();
        if (s % k != 0)
            throw exactness_error("char_poly: trace not divisible at step " + std::to_string(k));
        big_int ck = -s / k;
        coeff[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            for (int i = 0; i < n; ++i) am.at(i, i) += ck;
            m = std::move(am);
        }
    }
    return polynomial(std::move(coeff));
}

}  // namespace juggle
