#pragma once

#include <set>
#include <string>
#include <vector>

#include "juggle/card.hpp"
#include "juggle/matrix.hpp"

namespace juggle {

/// Desk-scale bounds for exhaustive enumeration; walk counts grow like
/// trace(A^n), so the defaults are deliberately tight.
struct oracle_limits {
    int max_balls = 4;
    int max_period = 6;
};

/// A cyclic sequence of compatible cards: cards[t].right() equals
/// cards[t+1 mod n].left(). Equivalent to a closed walk of length n.
struct card_walk {
    int balls = 0;
    std::vector<card> cards;
};

/// Canonical siteswap form: one ascending multiset of throw heights per
/// beat. Display strings are derived from this, never the reverse.
using siteswap_code = std::vector<std::vector<int>>;

/// Transcoded walk: the per-beat throws plus the split into balls that
/// land at least once and balls parked in tracks that are never consumed.
struct siteswap_pattern {
    siteswap_code beats;
    int used_balls = 0;
    int unused_balls = 0;
};

/// Renders singleton beats bare, multisets bracketed, idle beats as 0;
/// two-digit heights force comma separation inside brackets.
std::string display_siteswap(const siteswap_code& code);

/// All closed walks of length n through the filtered card set, grouped by
/// start vertex in canonical order. Throws feasibility_error beyond the
/// limits.
std::vector<card_walk> enumerate_closed_walks(int b, int n, const card_filter& filter = {},
                                              const oracle_limits& limits = {});

/// Walk count without materializing the walks.
big_int count_closed_walks(int b, int n, const card_filter& filter = {},
                           const oracle_limits& limits = {});

/// Simulates the periodic card sequence. Each thrown ball's height is the
/// number of beats until its destination track is consumed; tracks whose
/// start-of-period position recurs without being consumed never land and
/// their balls are reported unused.
siteswap_pattern walk_to_siteswap(const card_walk& walk);

/// Canonical codes of every walk that uses all b balls, deduplicated.
std::set<siteswap_code> enumerate_siteswaps(int b, int n, const oracle_limits& limits = {});

/// Lexicographically-least rotation representatives of the siteswap codes
/// whose minimal period is exactly n.
std::vector<siteswap_code> enumerate_patterns(int b, int n, const oracle_limits& limits = {});

/// Total crossings of a walk: the per-card sum.
int walk_crossings(const card_walk& walk);

/// One verification outcome, CLI-serializable.
struct check_result {
    std::string name;
    std::string parameters;
    std::string expected;
    std::string actual;
    bool pass = false;
};

/// Compares sum over closed walks of q^crossings with the trace of the
/// q-weighted matrix power.
check_result verify_crossing_counts(int b, int n, const oracle_limits& limits = {});

}  // namespace juggle
