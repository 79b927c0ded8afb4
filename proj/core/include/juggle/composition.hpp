#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace juggle {

/// An ordered partition of a nonnegative integer: a sequence of positive
/// parts. The empty composition is the unique composition of 0.
///
/// Compositions index the vertices of the transfer graphs and the sides of
/// cards. The library-wide canonical order is graded: ascending by number
/// of parts, then decreasing lexicographic on the parts.
class composition {
public:
    composition() = default;

    explicit composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("composition: parts must be >= 1");
            total_ += p;
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    int size() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

    int max_part() const noexcept {
        return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
    }

    bool all_parts_at_most(int kappa) const noexcept { return max_part() <= kappa; }

    std::string str() const;

    auto operator<=>(const composition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

namespace detail {

// Iterative cursor over the compositions of b with every part <= kappa, in
// canonical order. No recursion, so b around 20 is fine.
class composition_cursor {
public:
    composition_cursor(int b, int kappa) : b_(b), kappa_(std::min(kappa, b)) {
        if (b < 0) throw std::invalid_argument("compositions: b must be >= 0");
        if (kappa < 1) throw std::invalid_argument("compositions: kappa must be >= 1");
        if (b_ == 0) {
            done_emitted_empty_ = false;
            return;
        }
        k_ = (b_ + kappa_ - 1) / kappa_;  // fewest parts possible
        start_block();
    }

    // Returns false once exhausted; otherwise fills `out` with the next
    // composition's parts.
    bool next(std::vector<int>& out) {
        if (b_ == 0) {
            if (done_emitted_empty_) return false;
            done_emitted_empty_ = true;
            out.clear();
            return true;
        }
        if (k_ > b_) return false;
        out = parts_;
        advance();
        return true;
    }

private:
    void start_block() {
        // Largest composition with k_ parts in decreasing lex order:
        // front-load as much as the cap allows.
        parts_.assign(static_cast<std::size_t>(k_), 1);
        int rem = b_ - k_;
        for (int i = 0; i < k_ && rem > 0; ++i) {
            int add = std::min(kappa_ - 1, rem);
            parts_[static_cast<std::size_t>(i)] += add;
            rem -= add;
        }
    }

    void advance() {
        // Decrement the rightmost part that still leaves a cap-feasible
        // suffix, then refill the suffix as large (lex) as possible.
        int tail = parts_[static_cast<std::size_t>(k_ - 1)];
        int j = k_ - 2;
        for (; j >= 0; --j) {
            int slots = k_ - 1 - j;
            if (parts_[static_cast<std::size_t>(j)] > 1 && tail + 1 <= kappa_ * slots) break;
            tail += parts_[static_cast<std::size_t>(j)];
        }
        if (j < 0) {
            ++k_;
            if (k_ <= b_) start_block();
            return;
        }
        --parts_[static_cast<std::size_t>(j)];
        int s = tail + 1;
        for (int i = j + 1; i < k_; ++i) {
            int slots_after = k_ - 1 - i;
            int v = std::min(kappa_, s - slots_after);
            parts_[static_cast<std::size_t>(i)] = v;
            s -= v;
        }
    }

    int b_;
    int kappa_;
    int k_ = 1;
    std::vector<int> parts_;
    bool done_emitted_empty_ = true;
};

}  // namespace detail

/// Visits every composition of b whose parts are all <= kappa, in canonical
/// order. fn receives a const composition&.
template <typename F>
void for_each_capped_composition(int b, int kappa, F&& fn) {
    detail::composition_cursor cur(b, kappa);
    std::vector<int> parts;
    while (cur.next(parts)) fn(composition(parts));
}

template <typename F>
void for_each_composition(int b, F&& fn) {
    for_each_capped_composition(b, b < 1 ? 1 : b, std::forward<F>(fn));
}

/// All 2^(b-1) compositions of b (exactly one for b = 0) in canonical order.
std::vector<composition> compositions(int b);

/// The subsequence of compositions(b) with every part <= kappa.
std::vector<composition> capped_compositions(int b, int kappa);

/// |compositions(b)| without enumerating.
std::uint64_t composition_count(int b);

/// |capped_compositions(b, kappa)| via the first-part recurrence
/// r(i) = sum_{j=1}^{min(kappa,i)} r(i-j), r(0) = 1.
std::uint64_t capped_composition_count(int b, int kappa);

/// Position of c in compositions(c.total()); bijective per total.
std::size_t composition_index(const composition& c);

/// A weakly decreasing sequence of positive parts.
class unordered_partition {
public:
    unordered_partition() = default;

    explicit unordered_partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("partition: parts must be >= 1");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition: parts must be weakly decreasing");
            total_ += parts_[i];
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int total() const noexcept { return total_; }
    int size() const noexcept { return static_cast<int>(parts_.size()); }
    std::string str() const;

    auto operator<=>(const unordered_partition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// All unordered partitions of b, largest-first within each partition,
/// enumerated in decreasing lexicographic order.
std::vector<unordered_partition> unordered_partitions(int b);

template <typename F>
void for_each_partition(int b, F&& fn) {
    if (b < 0) throw std::invalid_argument("partitions: b must be >= 0");
    if (b == 0) {
        fn(unordered_partition{});
        return;
    }
    std::vector<int> a{b};
    for (;;) {
        fn(unordered_partition(a));
        int rem = 0;
        int j = static_cast<int>(a.size()) - 1;
        while (j >= 0 && a[static_cast<std::size_t>(j)] == 1) {
            ++rem;
            --j;
        }
        if (j < 0) return;
        --a[static_cast<std::size_t>(j)];
        ++rem;
        a.resize(static_cast<std::size_t>(j) + 1);
        while (rem > 0) {
            int part = std::min(a[static_cast<std::size_t>(j)], rem);
            a.push_back(part);
            rem -= part;
        }
    }
}

/// p(b), the number of unordered partitions of b.
std::uint64_t partition_count(int b);

/// Number of parts equal to 1.
int ones_count(const unordered_partition& p);

/// Standard Moebius function; n >= 1.
int mobius(std::int64_t n);

/// Divisors of n in increasing order; n >= 1.
std::vector<int> divisors(int n);

}  // namespace juggle
