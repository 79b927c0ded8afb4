#include "juggle/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "juggle/errors.hpp"

namespace juggle {

namespace {

void check_limits(int b, int n, const oracle_limits& limits) {
    if (b < 0 || n < 1)
        throw std::invalid_argument("oracle: need b >= 0 and n >= 1");
    if (b > limits.max_balls || n > limits.max_period)
        throw feasibility_error(
            "oracle: request (b=" + std::to_string(b) + ", n=" + std::to_string(n) +
            ") exceeds limits (b<=" + std::to_string(limits.max_balls) +
            ", n<=" + std::to_string(limits.max_period) +
            "); closed-walk counts grow like trace(A^n) -- raise the limits explicitly "
            "to proceed");
}

// Streams every closed walk; the card_walk buffer is reused between calls.
template <typename F>
void for_each_closed_walk(int b, int n, const card_filter& filter, const oracle_limits& limits,
                          F&& fn) {
    check_limits(b, n, limits);
    const std::vector<composition> verts = transfer_vertices(b, filter);
    const int dim = static_cast<int>(verts.size());

    std::vector<std::vector<std::vector<card>>> edges(
        static_cast<std::size_t>(dim), std::vector<std::vector<card>>(static_cast<std::size_t>(dim)));
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            auto& bucket = edges[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            if (u == v) bucket.push_back(card::trivial(verts[static_cast<std::size_t>(u)]));
            for_each_card_between(verts[static_cast<std::size_t>(u)],
                                  verts[static_cast<std::size_t>(v)], [&](const card& c) {
                                      if (filter.admits(c)) bucket.push_back(c);
                                  });
        }

    card_walk walk;
    walk.balls = b;
    walk.cards.clear();
    // Depth-first over card choices; a walk closes when beat n returns to
    // its start vertex.
    auto extend = [&](auto&& self, int start, int here, int depth) -> void {
        if (depth == n) {
            if (here == start) fn(const_cast<const card_walk&>(walk));
            return;
        }
        for (int v = 0; v < dim; ++v) {
            for (const card& c : edges[static_cast<std::size_t>(here)][static_cast<std::size_t>(v)]) {
                walk.cards.push_back(c);
                self(self, start, v, depth + 1);
                walk.cards.pop_back();
            }
        }
    };
    for (int s = 0; s < dim; ++s) extend(extend, s, s, 0);
}

}  // namespace

std::vector<card_walk> enumerate_closed_walks(int b, int n, const card_filter& filter,
                                              const oracle_limits& limits) {
    std::vector<card_walk> out;
    for_each_closed_walk(b, n, filter, limits, [&](const card_walk& w) { out.push_back(w); });
    return out;
}

big_int count_closed_walks(int b, int n, const card_filter& filter, const oracle_limits& limits) {
    big_int count = 0;
    for_each_closed_walk(b, n, filter, limits, [&](const card_walk&) { count += 1; });
    return count;
}

siteswap_pattern walk_to_siteswap(const card_walk& walk) {
    const int n = static_cast<int>(walk.cards.size());
    if (n == 0) throw std::invalid_argument("walk_to_siteswap: empty walk");
    for (int t = 0; t < n; ++t)
        if (walk.cards[static_cast<std::size_t>(t)].right() !=
            walk.cards[static_cast<std::size_t>((t + 1) % n)].left())
            throw std::invalid_argument("walk_to_siteswap: consecutive cards are incompatible");

    // delay[t][p]: beats until the track at 1-based position p of the state
    // entering beat t is consumed; kNever if its position recurs first.
    constexpr long kUnknown = -1, kInProgress = -2, kNever = -3;
    std::vector<std::vector<long>> delay(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        delay[static_cast<std::size_t>(t)].assign(
            static_cast<std::size_t>(walk.cards[static_cast<std::size_t>(t)].left().size()) + 1,
            kUnknown);

    auto resolve = [&](int t0, int p0) -> long {
        std::vector<std::pair<int, int>> chain;
        int t = t0;
        int p = p0;
        long base;
        for (;;) {
            long d = delay[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
            if (d == kInProgress) {
                base = kNever;  // position recurred without a landing
                break;
            }
            if (d != kUnknown) {
                base = d;
                break;
            }
            const card& c = walk.cards[static_cast<std::size_t>(t)];
            if (!c.is_trivial() && p == 1) {
                delay[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] = 0;
                base = 0;
                break;
            }
            delay[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] = kInProgress;
            chain.emplace_back(t, p);
            p = c.is_trivial() ? p : c.indices()[static_cast<std::size_t>(p - 2)];
            t = (t + 1) % n;
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            if (base >= 0) ++base;
            delay[static_cast<std::size_t>(it->first)][static_cast<std::size_t>(it->second)] = base;
        }
        return base;
    };

    siteswap_pattern out;
    out.beats.assign(static_cast<std::size_t>(n), {});
    for (int t = 0; t < n; ++t) {
        const card& c = walk.cards[static_cast<std::size_t>(t)];
        if (c.is_trivial()) continue;
        auto& beat = out.beats[static_cast<std::size_t>(t)];
        for (int s = 1; s <= c.right().size(); ++s) {
            const int thrown = c.placement()[static_cast<std::size_t>(s - 1)];
            if (thrown == 0) continue;
            const long d = resolve((t + 1) % n, s);
            if (d == kNever)
                throw exactness_error(
                    "walk_to_siteswap: a thrown ball reached a track that never lands");
            beat.insert(beat.end(), static_cast<std::size_t>(thrown), static_cast<int>(d) + 1);
        }
        std::sort(beat.begin(), beat.end());
    }

    const composition& start = walk.cards[0].left();
    out.unused_balls = 0;
    for (int p = 1; p <= start.size(); ++p)
        if (resolve(0, p) == kNever) out.unused_balls += start.part(p - 1);
    out.used_balls = walk.balls - out.unused_balls;
    return out;
}

std::string display_siteswap(const siteswap_code& code) {
    std::string s;
    for (const auto& beat : code) {
        if (beat.empty()) {
            s += '0';
        } else if (beat.size() == 1 && beat[0] <= 9) {
            s += std::to_string(beat[0]);
        } else {
            const bool wide = std::any_of(beat.begin(), beat.end(), [](int h) { return h >= 10; });
            s += '[';
            for (std::size_t i = 0; i < beat.size(); ++i) {
                if (i && wide) s += ',';
                s += std::to_string(beat[i]);
            }
            s += ']';
        }
    }
    return s;
}

std::set<siteswap_code> enumerate_siteswaps(int b, int n, const oracle_limits& limits) {
    std::set<siteswap_code> out;
    for_each_closed_walk(b, n, card_filter{}, limits, [&](const card_walk& w) {
        siteswap_pattern p = walk_to_siteswap(w);
        if (p.unused_balls == 0) out.insert(std::move(p.beats));
    });
    return out;
}

namespace {

siteswap_code rotated(const siteswap_code& code, int by) {
    const int n = static_cast<int>(code.size());
    siteswap_code out;
    out.reserve(code.size());
    for (int i = 0; i < n; ++i) out.push_back(code[static_cast<std::size_t>((i + by) % n)]);
    return out;
}

int minimal_period(const siteswap_code& code) {
    const int n = static_cast<int>(code.size());
    for (int d : divisors(n))
        if (rotated(code, d) == code) return d;
    return n;
}

}  // namespace

std::vector<siteswap_code> enumerate_patterns(int b, int n, const oracle_limits& limits) {
    std::set<siteswap_code> reps;
    for (const auto& code : enumerate_siteswaps(b, n, limits)) {
        if (minimal_period(code) != n) continue;
        siteswap_code best = code;
        for (int r = 1; r < n; ++r) best = std::min(best, rotated(code, r));
        reps.insert(std::move(best));
    }
    return {reps.begin(), reps.end()};
}

int walk_crossings(const card_walk& walk) {
    int total = 0;
    for (const card& c : walk.cards) total += c.crossings();
    return total;
}

check_result verify_crossing_counts(int b, int n, const oracle_limits& limits) {
    // Crossing histogram over all closed walks, as a polynomial in q.
    std::map<int, big_int> histogram;
    for_each_closed_walk(b, n, card_filter{}, limits,
                         [&](const card_walk& w) { histogram[walk_crossings(w)] += 1; });
    polynomial walk_sum;
    for (const auto& [crossings, count] : histogram)
        walk_sum += polynomial::monomial(crossings, count);

    polynomial trace = build_transfer_q(b).pow(static_cast<std::uint64_t>(n)).trace();

    check_result r;
    r.name = "crossing-weight trace";
    r.parameters = "b=" + std::to_string(b) + ", n=" + std::to_string(n);
    r.expected = trace.str("q");
    r.actual = walk_sum.str("q");
    r.pass = walk_sum == trace;
    return r;
}

}  // namespace juggle
