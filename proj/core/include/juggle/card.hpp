#pragma once

#include <functional>
#include <vector>

#include "juggle/bigint.hpp"
#include "juggle/composition.hpp"

namespace juggle {

/// One beat of multiplex juggling: a transition between ordered partitions.
///
/// A trivial card leaves the partition untouched (no balls land). A
/// nontrivial card consumes the bottom group of the left side, keeps the
/// remaining groups in order by embedding them into slots of the right
/// side (strictly increasing 1-based indices i_2 < ... < i_k with
/// left[j] <= right[i_j]), and re-throws the consumed balls into the
/// remaining room. Identity is the triple (left, right, indices): two cards
/// with equal sides but different embeddings are distinct.
class card {
public:
    static card trivial(composition both_sides);

    /// Nontrivial card; `indices` are the 1-based target slots for the
    /// surviving groups left[1..k-1], strictly increasing. Throws
    /// std::invalid_argument if the embedding is malformed.
    card(composition left, composition right, std::vector<int> indices);

    bool is_trivial() const noexcept { return trivial_; }
    const composition& left() const noexcept { return left_; }
    const composition& right() const noexcept { return right_; }

    /// Empty for trivial cards and for single-group left sides.
    const std::vector<int>& indices() const noexcept { return indices_; }

    /// Newly thrown balls per right slot (0-based); all zero for trivial
    /// cards, sums to left[0] otherwise.
    const std::vector<int>& placement() const noexcept { return placement_; }

    /// Strand crossings: a thrown strand into slot t crosses the surviving
    /// track j exactly when t > i_j; merged destinations count once, and
    /// neither surviving tracks nor thrown strands cross among themselves.
    int crossings() const noexcept { return crossings_; }

    bool operator==(const card&) const = default;

private:
    card() = default;
    composition left_;
    composition right_;
    std::vector<int> indices_;
    std::vector<int> placement_;
    int crossings_ = 0;
    bool trivial_ = false;
};

int crossing_number(const card& c);

/// Both sides use groups of at most kappa balls.
bool respects_capacity(const card& c, int kappa);

/// No slot receives more than one thrown ball.
bool has_distinct_heights(const card& c);

/// Visits every nontrivial card from q into r, in deterministic order.
void for_each_card_between(const composition& q, const composition& r,
                           const std::function<void(const card&)>& fn);

/// Number of cards with left side q and right side r (trivial included).
std::uint64_t count_cards_between(const composition& q, const composition& r);

/// All cards whose left side is q: the trivial card plus every nontrivial
/// embedding into every composition of q.total().
std::vector<card> cards_from(const composition& q);

/// All cards whose right side is r, enumerated by the per-slot shading
/// construction (duplicate-free).
std::vector<card> cards_into(const composition& r);

/// Every card on b balls, grouped by right side in canonical order.
std::vector<card> all_cards(int b);

/// Closed forms for the two directional counts.
big_int card_count_from(const composition& q);
big_int card_count_into(const composition& r);

/// Total number of cards on b balls, computed as the sum over right sides
/// of the per-slot product.
big_int card_count(int b);

/// Checks card_count(b) == 4*card_count(b-1) - 2*card_count(b-2) for
/// 3 <= b <= b_max.
bool card_count_satisfies_recurrence(int b_max);

/// Sum of all entries of the capacity-capped transfer matrix: the number
/// of cards with every group on both sides of size at most kappa.
big_int capped_card_total(int b, int kappa);

}  // namespace juggle
