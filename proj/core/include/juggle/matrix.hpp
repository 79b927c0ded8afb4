#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "juggle/bigint.hpp"
#include "juggle/card.hpp"
#include "juggle/composition.hpp"
#include "juggle/polynomial.hpp"
#include "juggle/runtime.hpp"

namespace juggle {

/// Dense square matrix over an exact ring (big_int or polynomial), with
/// optional composition labels attaching vertices to rows/columns.
/// Immutable in spirit: build it, then multiply/trace it.
template <class T>
class square_matrix {
public:
    explicit square_matrix(int dim, std::vector<composition> labels = {})
        : dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), T(0)),
          labels_(std::move(labels)) {
        if (dim < 0) throw std::invalid_argument("square_matrix: dim must be >= 0");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != dim)
            throw std::invalid_argument("square_matrix: one label per row required");
    }

    static square_matrix identity(int dim, std::vector<composition> labels = {}) {
        square_matrix m(dim, std::move(labels));
        for (int i = 0; i < dim; ++i) m.at(i, i) = T(1);
        return m;
    }

    int dim() const noexcept { return dim_; }
    const std::vector<composition>& labels() const noexcept { return labels_; }

    T& at(int i, int j) { return entries_[index(i, j)]; }
    const T& at(int i, int j) const { return entries_[index(i, j)]; }

    T trace() const {
        T t(0);
        for (int i = 0; i < dim_; ++i) t = t + at(i, i);
        return t;
    }

    square_matrix operator*(const square_matrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("square_matrix: dimension mismatch");
        square_matrix out(dim_, labels_);
        parallel_rows(dim_, [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i)
                for (int kk = 0; kk < dim_; ++kk) {
                    const T& a = at(i, kk);
                    if (a == T(0)) continue;
                    for (int j = 0; j < dim_; ++j) {
                        const T& b = o.at(kk, j);
                        if (b == T(0)) continue;
                        out.at(i, j) = out.at(i, j) + a * b;
                    }
                }
        });
        return out;
    }

    /// Square-and-multiply; pow(0) is the identity.
    square_matrix pow(std::uint64_t n) const {
        square_matrix acc = identity(dim_, labels_);
        square_matrix base = *this;
        while (n > 0) {
            if (n & 1ULL) acc = acc * base;
            n >>= 1ULL;
            if (n > 0) base = base * base;
        }
        return acc;
    }

    bool operator==(const square_matrix& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_)
            throw std::out_of_range("square_matrix: index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
               static_cast<std::size_t>(j);
    }

    int dim_;
    std::vector<T> entries_;
    std::vector<composition> labels_;
};

using exact_matrix = square_matrix<big_int>;
using poly_matrix = square_matrix<polynomial>;

/// Restrictions applied to the card set when building a transfer matrix or
/// enumerating walks. kappa caps every group size on both sides (which
/// restricts the vertex set); distinct_heights drops cards throwing two
/// balls into one slot.
struct card_filter {
    std::optional<int> kappa;
    bool distinct_heights = false;

    bool admits(const card& c) const { return !distinct_heights || has_distinct_heights(c); }
    std::string describe() const;
    bool operator==(const card_filter&) const = default;
};

/// Vertex set for b balls under the filter (capacity caps the parts).
std::vector<composition> transfer_vertices(int b, const card_filter& filter = {});

/// Transfer matrix: entry (u, v) counts the cards from u to v that pass
/// the filter. Rows/columns are labelled in canonical composition order.
exact_matrix build_transfer(int b, const card_filter& filter = {});

/// Crossing-weighted transfer matrix: entry (u, v) sums q^crossings over
/// the admitted cards from u to v. At q = 1 it equals build_transfer.
poly_matrix build_transfer_q(int b, const card_filter& filter = {});

/// trace(build_transfer(b, filter)) computed from the diagonal only, with
/// no dim^2 storage; usable well past the dense-build bound.
big_int transfer_trace(int b, const card_filter& filter = {});
polynomial transfer_trace_q(int b, const card_filter& filter = {});

/// The vertex orders used by the reference tables for b <= 4; they differ
/// from canonical order only at b = 4.
std::vector<composition> reference_vertex_order(int b);

/// Permutation p with reference_order[i] == canonical[p[i]].
std::vector<int> reference_permutation(int b);

/// Reindexes m so that row/column i corresponds to order[i]. The order
/// must be a permutation of m's labels.
exact_matrix permuted(const exact_matrix& m, const std::vector<composition>& order);
poly_matrix permuted(const poly_matrix& m, const std::vector<composition>& order);

/// Characteristic polynomial det(xI - A), exact over the integers via the
/// Faddeev-LeVerrier recurrence. Every internal division is checked; a
/// remainder raises exactness_error.
polynomial char_poly(const exact_matrix& a);

}  // namespace juggle
