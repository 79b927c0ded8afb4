#include "juggle/card.hpp"

#include <stdexcept>
#include <utility>

#include "juggle/errors.hpp"

namespace juggle {

card card::trivial(composition both_sides) {
    card c;
    c.left_ = both_sides;
    c.right_ = std::move(both_sides);
    c.placement_.assign(static_cast<std::size_t>(c.right_.size()), 0);
    c.trivial_ = true;
    return c;
}

card::card(composition left, composition right, std::vector<int> indices)
    : left_(std::move(left)), right_(std::move(right)), indices_(std::move(indices)) {
    if (left_.total() != right_.total())
        throw std::invalid_argument("card: sides must partition the same total");
    const int k = left_.size();
    const int l = right_.size();
    if (k == 0 && left_.total() == 0)
        throw std::invalid_argument("card: the empty transition is the trivial card");
    if (static_cast<int>(indices_.size()) != k - 1)
        throw std::invalid_argument("card: need one target slot per surviving group");

    placement_.assign(static_cast<std::size_t>(l), 0);
    for (int t = 0; t < l; ++t) placement_[static_cast<std::size_t>(t)] = right_.part(t);
    int prev = 0;
    for (int j = 0; j < k - 1; ++j) {
        const int slot = indices_[static_cast<std::size_t>(j)];
        if (slot <= prev || slot > l)
            throw std::invalid_argument("card: embedding indices must be strictly increasing");
        if (left_.part(j + 1) > right_.part(slot - 1))
            throw std::invalid_argument("card: group does not fit its target slot");
        placement_[static_cast<std::size_t>(slot - 1)] -= left_.part(j + 1);
        prev = slot;
    }

    for (int j = 0; j < k - 1; ++j) {
        const int slot = indices_[static_cast<std::size_t>(j)];
        for (int t = slot + 1; t <= l; ++t)
            if (placement_[static_cast<std::size_t>(t - 1)] >= 1) ++crossings_;
    }
}

int crossing_number(const card& c) { return c.crossings(); }

bool respects_capacity(const card& c, int kappa) {
    if (kappa < 1) throw std::invalid_argument("respects_capacity: kappa must be >= 1");
    return c.left().all_parts_at_most(kappa) && c.right().all_parts_at_most(kappa);
}

bool has_distinct_heights(const card& c) {
    for (int p : c.placement())
        if (p > 1) return false;
    return true;
}

void for_each_card_between(const composition& q, const composition& r,
                           const std::function<void(const card&)>& fn) {
    if (q.total() != r.total())
        throw std::invalid_argument("for_each_card_between: totals differ");
    const int k = q.size();
    const int l = r.size();
    if (k == 0) return;  // only the trivial empty card exists for b = 0
    if (k == 1) {
        fn(card(q, r, {}));
        return;
    }
    // Backtracking over strictly increasing slot choices for groups 1..k-1.
    std::vector<int> idx(static_cast<std::size_t>(k - 1), 0);
    int j = 0;
    int slot = 1;
    while (j >= 0) {
        if (slot > l - (k - 2 - j)) {  // not enough slots left for the rest
            --j;
            if (j >= 0) slot = idx[static_cast<std::size_t>(j)] + 1;
            continue;
        }
        if (q.part(j + 1) <= r.part(slot - 1)) {
            idx[static_cast<std::size_t>(j)] = slot;
            if (j == k - 2) {
                fn(card(q, r, idx));
                ++slot;
            } else {
                ++j;
                slot = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        } else {
            ++slot;
        }
    }
}

std::uint64_t count_cards_between(const composition& q, const composition& r) {
    if (q.total() != r.total())
        throw std::invalid_argument("count_cards_between: totals differ");
    const int k = q.size();
    const int l = r.size();
    std::uint64_t nontrivial = 0;
    if (k == 1) {
        nontrivial = 1;
    } else if (k >= 2) {
        // ways[g][s]: embeddings of groups g..k-1 into slots s..l-1.
        std::vector<std::vector<std::uint64_t>> ways(
            static_cast<std::size_t>(k) + 1,
            std::vector<std::uint64_t>(static_cast<std::size_t>(l) + 1, 0));
        for (int s = 0; s <= l; ++s) ways[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] = 1;
        for (int g = k - 1; g >= 1; --g)
            for (int s = l - 1; s >= 0; --s) {
                std::uint64_t w = ways[static_cast<std::size_t>(g)][static_cast<std::size_t>(s) + 1];
                if (q.part(g) <= r.part(s))
                    w += ways[static_cast<std::size_t>(g) + 1][static_cast<std::size_t>(s) + 1];
                ways[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)] = w;
            }
        nontrivial = ways[1][0];
    }
    return nontrivial + (q == r ? 1 : 0);
}

std::vector<card> cards_from(const composition& q) {
    std::vector<card> out;
    out.push_back(card::trivial(q));
    for_each_composition(q.total(), [&](const composition& r) {
        for_each_card_between(q, r, [&](const card& c) { out.push_back(c); });
    });
    return out;
}

std::vector<card> cards_into(const composition& r) {
    // Shade each slot with the amount an existing group occupies; the
    // nonzero shadings read off the surviving groups in order, the rest of
    // the slot is newly thrown. Full shading is the trivial card.
    std::vector<card> out;
    const int l = r.size();
    const int b = r.total();
    std::vector<int> shade(static_cast<std::size_t>(l), 0);
    for (;;) {
        int shaded = 0;
        for (int s : shade) shaded += s;
        if (shaded == b) {
            out.push_back(card::trivial(r));
        } else {
            std::vector<int> parts{b - shaded};
            std::vector<int> idx;
            for (int s = 0; s < l; ++s)
                if (shade[static_cast<std::size_t>(s)] > 0) {
                    parts.push_back(shade[static_cast<std::size_t>(s)]);
                    idx.push_back(s + 1);
                }
            out.emplace_back(composition(std::move(parts)), r, std::move(idx));
        }
        int s = l - 1;
        while (s >= 0 && shade[static_cast<std::size_t>(s)] == r.part(s)) {
            shade[static_cast<std::size_t>(s)] = 0;
            --s;
        }
        if (s < 0) break;
        ++shade[static_cast<std::size_t>(s)];
    }
    return out;
}

std::vector<card> all_cards(int b) {
    std::vector<card> out;
    for_each_composition(b, [&](const composition& r) {
        for (auto& c : cards_into(r)) out.push_back(std::move(c));
    });
    return out;
}

big_int card_count_from(const composition& q) {
    const int k = q.size();
    if (k == 0) return 1;
    const unsigned long q1 = static_cast<unsigned long>(q.part(0));
    big_int numerator = binomial(q1 + static_cast<unsigned long>(k) - 1,
                                 static_cast<unsigned long>(k) - 1);
    numerator *= big_int(q1 + 2UL * static_cast<unsigned long>(k) - 2);
    numerator *= pow2(q1 - 1);
    const big_int denominator(q1 + static_cast<unsigned long>(k) - 1);
    if (numerator % denominator != 0)
        throw exactness_error("card_count_from: closed form is not an integer");
    return 1 + numerator / denominator;
}

big_int card_count_into(const composition& r) {
    big_int prod = 1;
    for (int p : r.parts()) prod *= p + 1;
    return prod;
}

big_int card_count(int b) {
    big_int total = 0;
    for_each_composition(b, [&](const composition& r) {
        std::uint64_t prod = 1;
        for (int p : r.parts()) prod *= static_cast<std::uint64_t>(p) + 1;
        total += big_int(static_cast<unsigned long>(prod));
    });
    return total;
}

bool card_count_satisfies_recurrence(int b_max) {
    if (b_max < 3) return true;
    std::vector<big_int> a;
    a.reserve(static_cast<std::size_t>(b_max) + 1);
    for (int b = 0; b <= b_max; ++b) a.push_back(card_count(b));
    for (int b = 3; b <= b_max; ++b)
        if (a[static_cast<std::size_t>(b)] !=
            4 * a[static_cast<std::size_t>(b - 1)] - 2 * a[static_cast<std::size_t>(b - 2)])
            return false;
    return true;
}

big_int capped_card_total(int b, int kappa) {
    if (b < 0) throw std::invalid_argument("capped_card_total: b must be >= 0");
    if (kappa < 1) throw std::invalid_argument("capped_card_total: kappa must be >= 1");
    // Nontrivial capped cards correspond to pairs (right side r, per-slot
    // deficit vector d) with 0 <= d_i <= r_i and 1 <= sum(d) <= kappa: the
    // deficits are the newly thrown balls, so sum(d) is the landing group
    // and the shaded remainders are the surviving groups. Summing over all
    // capped r is a two-dimensional prefix DP; no enumeration needed.
    std::vector<std::vector<big_int>> f(
        static_cast<std::size_t>(b) + 1,
        std::vector<big_int>(static_cast<std::size_t>(kappa) + 1, big_int(0)));
    f[0][0] = 1;
    for (int m = 1; m <= b; ++m)
        for (int D = 0; D <= kappa; ++D) {
            big_int acc = 0;
            for (int j = 1; j <= std::min(kappa, m); ++j)
                for (int d = 0; d <= std::min(j, D); ++d)
                    acc += f[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(D - d)];
            f[static_cast<std::size_t>(m)][static_cast<std::size_t>(D)] = acc;
        }
    big_int total = capped_composition_count(b, kappa);  // one trivial card per vertex
    for (int D = 1; D <= kappa; ++D) total += f[static_cast<std::size_t>(b)][static_cast<std::size_t>(D)];
    return total;
}

}  // namespace juggle
