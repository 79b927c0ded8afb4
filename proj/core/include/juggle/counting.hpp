#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "juggle/bigint.hpp"
#include "juggle/matrix.hpp"
#include "juggle/polynomial.hpp"

namespace juggle {

/// One cell of a pattern-count table.
struct table_record {
    int balls;
    int period;
    std::optional<int> capacity;
    big_int patterns;
};

/// The three trace identities checked against a freshly built matrix:
/// trace equals the 2-power weighted partition sum, equals the sum of
/// 2^(number of ones) over partitions, and the period-1 pattern count
/// equals the partition count.
struct trace_identity_report {
    int balls = 0;
    big_int trace;
    big_int partition_weighted_sum;
    big_int ones_power_sum;
    big_int period1_patterns;
    big_int partitions;
    bool pass() const {
        return trace == partition_weighted_sum && trace == ones_power_sum &&
               period1_patterns == partitions;
    }
};

/// Full result of one count query, with the traces that produced it.
struct count_detail {
    int balls = 0;
    int period = 0;
    std::optional<int> capacity;
    big_int siteswaps;
    big_int minimal_siteswaps;
    big_int patterns;
    std::vector<std::string> traces_used;
};

struct count_detail_q {
    int balls = 0;
    int period = 0;
    std::optional<int> capacity;
    polynomial siteswaps;
    polynomial minimal_siteswaps;
    polynomial patterns;
    std::vector<std::string> traces_used;
};

/// Computes the siteswap/pattern counting formulas over the transfer
/// matrices, memoizing matrices and traces per (balls, capacity). All
/// arithmetic is exact; period division that leaves a remainder raises
/// exactness_error. Not thread-safe: confine an instance to one thread.
class pattern_counter {
public:
    /// cache_dir, when given, persists integer traces between runs.
    explicit pattern_counter(std::optional<std::filesystem::path> cache_dir = {});

    /// trace(A^n) over the (optionally capacity-capped) transfer matrix.
    big_int trace_power(int b, int n, std::optional<int> kappa = {});
    polynomial trace_power_q(int b, int n, std::optional<int> kappa = {});

    /// Period-n siteswaps using exactly b balls: the closed-walk count
    /// minus the walks whose top tracks idle.
    big_int siteswap_count(int b, int n, std::optional<int> kappa = {});

    /// Siteswaps of minimal period n (Moebius inversion over divisors).
    big_int minimal_siteswap_count(int b, int n, std::optional<int> kappa = {});

    /// Juggling patterns (rotation classes) of minimal period n; exact
    /// division of the minimal-siteswap count by n.
    big_int pattern_count(int b, int n, std::optional<int> kappa = {});

    /// Crossing-refined variants: the same formulas over the q-weighted
    /// matrices. Coefficientwise division by the period must be exact.
    polynomial siteswap_count_q(int b, int n, std::optional<int> kappa = {});
    polynomial minimal_siteswap_count_q(int b, int n, std::optional<int> kappa = {});
    polynomial pattern_count_q(int b, int n, std::optional<int> kappa = {});

    trace_identity_report trace_identities(int b);

    count_detail count(int b, int n, std::optional<int> kappa = {});
    count_detail_q count_q(int b, int n, std::optional<int> kappa = {});

    /// Pattern counts over an inclusive grid; the Table CSV/JSON payload.
    std::vector<table_record> table(int b_lo, int b_hi, int n_lo, int n_hi,
                                    std::optional<int> kappa = {});

private:
    struct exact_state {
        std::optional<exact_matrix> base;
        std::optional<exact_matrix> power;
        int exponent = 0;
        std::map<int, big_int> traces;
        bool loaded = false;
        bool dirty = false;
    };
    struct poly_state {
        std::optional<poly_matrix> base;
        std::optional<poly_matrix> power;
        int exponent = 0;
        std::map<int, polynomial> traces;
    };

    // Capacity at or above the ball count is no restriction.
    static int normalized_kappa(int b, std::optional<int> kappa);
    std::filesystem::path cache_file(int b, int kappa_norm) const;
    void load_cache(int b, int kappa_norm, exact_state& st);
    void store_cache(int b, int kappa_norm, exact_state& st);

    big_int trace_power_tracked(int b, int n, std::optional<int> kappa,
                                std::vector<std::string>* provenance);
    polynomial trace_power_q_tracked(int b, int n, std::optional<int> kappa,
                                     std::vector<std::string>* provenance);

    std::optional<std::filesystem::path> cache_dir_;
    std::map<std::pair<int, int>, exact_state> exact_states_;
    std::map<std::pair<int, int>, poly_state> poly_states_;
};

}  // namespace juggle
