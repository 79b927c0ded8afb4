#include "juggle/counting.hpp"

#include <algorithm>
#include <fstream>

#include "juggle/errors.hpp"

namespace juggle {

namespace {

// Past this exponent a one-off square-and-multiply beats extending the
// cached power ladder.
constexpr int kLadderLimit = 1024;

std::string trace_tag(int b, std::optional<int> kappa, int n) {
    std::string s = "trace(A_" + std::to_string(b);
    if (kappa) s += ",k" + std::to_string(*kappa);
    s += "^" + std::to_string(n) + ")";
    return s;
}

}  // namespace

pattern_counter::pattern_counter(std::optional<std::filesystem::path> cache_dir)
    : cache_dir_(std::move(cache_dir)) {}

int pattern_counter::normalized_kappa(int b, std::optional<int> kappa) {
    if (!kappa) return b;
    if (*kappa < 1) throw std::invalid_argument("pattern_counter: kappa must be >= 1");
    return std::min(*kappa, b);
}

std::filesystem::path pattern_counter::cache_file(int b, int kappa_norm) const {
    return *cache_dir_ /
           ("traces-b" + std::to_string(b) +
            (kappa_norm >= b ? std::string("-all") : "-k" + std::to_string(kappa_norm)) + ".txt");
}

void pattern_counter::load_cache(int b, int kappa_norm, exact_state& st) {
    st.loaded = true;
    if (!cache_dir_) return;
    std::ifstream in(cache_file(b, kappa_norm));
    if (!in) return;
    int n = 0;
    std::string value;
    while (in >> n >> value) st.traces.emplace(n, big_int(value));
}

void pattern_counter::store_cache(int b, int kappa_norm, exact_state& st) {
    if (!cache_dir_ || !st.dirty) return;
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir_, ec);
    std::ofstream out(cache_file(b, kappa_norm), std::ios::trunc);
    if (!out) return;
    for (const auto& [n, t] : st.traces) out << n << ' ' << t.get_str() << '\n';
    st.dirty = false;
}

big_int pattern_counter::trace_power(int b, int n, std::optional<int> kappa) {
    return trace_power_tracked(b, n, kappa, nullptr);
}

big_int pattern_counter::trace_power_tracked(int b, int n, std::optional<int> kappa,
                                             std::vector<std::string>* provenance) {
    if (b < 0 || n < 1) throw std::invalid_argument("trace_power: need b >= 0, n >= 1");
    const int kn = normalized_kappa(b, kappa);
    auto& st = exact_states_[{b, kn}];
    if (!st.loaded) load_cache(b, kn, st);
    const card_filter filter{kn >= b ? std::optional<int>{} : std::optional<int>{kn}, false};
    if (provenance) provenance->push_back(trace_tag(b, kappa, n));

    auto hit = st.traces.find(n);
    if (hit != st.traces.end()) return hit->second;

    big_int result;
    if (n == 1) {
        result = transfer_trace(b, filter);
    } else if (n <= kLadderLimit) {
        if (!st.base) st.base = build_transfer(b, filter);
        if (!st.power) {
            st.power = *st.base;
            st.exponent = 1;
            st.traces.emplace(1, st.power->trace());
        }
        while (st.exponent < n) {
            st.power = *st.power * *st.base;
            ++st.exponent;
            st.traces.emplace(st.exponent, st.power->trace());
        }
        result = st.traces.at(n);
    } else {
        if (!st.base) st.base = build_transfer(b, filter);
        result = st.base->pow(static_cast<std::uint64_t>(n)).trace();
    }
    st.traces[n] = result;
    st.dirty = true;
    store_cache(b, kn, st);
    return result;
}

polynomial pattern_counter::trace_power_q(int b, int n, std::optional<int> kappa) {
    return trace_power_q_tracked(b, n, kappa, nullptr);
}

polynomial pattern_counter::trace_power_q_tracked(int b, int n, std::optional<int> kappa,
                                                  std::vector<std::string>* provenance) {
    if (b < 0 || n < 1) throw std::invalid_argument("trace_power_q: need b >= 0, n >= 1");
    const int kn = normalized_kappa(b, kappa);
    auto& st = poly_states_[{b, kn}];
    const card_filter filter{kn >= b ? std::optional<int>{} : std::optional<int>{kn}, false};
    if (provenance) provenance->push_back("q-" + trace_tag(b, kappa, n));

    auto hit = st.traces.find(n);
    if (hit != st.traces.end()) return hit->second;

    polynomial result;
    if (n == 1) {
        result = transfer_trace_q(b, filter);
    } else {
        if (!st.base) st.base = build_transfer_q(b, filter);
        if (n <= kLadderLimit) {
            if (!st.power) {
                st.power = *st.base;
                st.exponent = 1;
                st.traces.emplace(1, st.power->trace());
            }
            while (st.exponent < n) {
                st.power = *st.power * *st.base;
                ++st.exponent;
                st.traces.emplace(st.exponent, st.power->trace());
            }
            result = st.traces.at(n);
        } else {
            result = st.base->pow(static_cast<std::uint64_t>(n)).trace();
        }
    }
    st.traces[n] = result;
    return result;
}

namespace {

// The used-ball decomposition: subtract the closed walks whose top tracks
// never act. With a capacity cap only the ball counts within kappa of b
// contribute.
int lower_ball_limit(int b, std::optional<int> kappa) {
    return kappa ? std::max(0, b - *kappa) : 0;
}

}  // namespace

big_int pattern_counter::siteswap_count(int b, int n, std::optional<int> kappa) {
    big_int ss = trace_power(b, n, kappa);
    for (int i = lower_ball_limit(b, kappa); i < b; ++i) ss -= trace_power(i, n, kappa);
    return ss;
}

big_int pattern_counter::minimal_siteswap_count(int b, int n, std::optional<int> kappa) {
    big_int ms = 0;
    for (int d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu != 0) ms += mu * siteswap_count(b, d, kappa);
    }
    return ms;
}

big_int pattern_counter::pattern_count(int b, int n, std::optional<int> kappa) {
    big_int ms = minimal_siteswap_count(b, n, kappa);
    if (ms % n != 0)
        throw exactness_error("pattern_count: minimal-period count not divisible by the period");
    return ms / n;
}

polynomial pattern_counter::siteswap_count_q(int b, int n, std::optional<int> kappa) {
    polynomial ss = trace_power_q(b, n, kappa);
    for (int i = lower_ball_limit(b, kappa); i < b; ++i) ss = ss - trace_power_q(i, n, kappa);
    return ss;
}

polynomial pattern_counter::minimal_siteswap_count_q(int b, int n, std::optional<int> kappa) {
    // A minimal-period-d pattern repeated n/d times accumulates n/d copies
    // of its crossings, so the inversion substitutes q -> q^(n/d) in each
    // divisor term. Without the substitution the orbit counts are not
    // integers.
    polynomial ms;
    for (int d : divisors(n)) {
        const int mu = mobius(n / d);
        if (mu == 0) continue;
        polynomial term = siteswap_count_q(b, d, kappa).stretched(n / d);
        ms = mu > 0 ? ms + term : ms - term;
    }
    return ms;
}

polynomial pattern_counter::pattern_count_q(int b, int n, std::optional<int> kappa) {
    polynomial ms = minimal_siteswap_count_q(b, n, kappa);
    std::vector<big_int> coeff = ms.coefficients();
    for (auto& c : coeff) {
        if (c % n != 0)
            throw exactness_error(
                "pattern_count_q: coefficient not divisible by the period (orbit size "
                "assumption violated)");
        c /= n;
    }
    return polynomial(std::move(coeff));
}

trace_identity_report pattern_counter::trace_identities(int b) {
    trace_identity_report r;
    r.balls = b;
    r.trace = trace_power(b, 1);
    r.partitions = big_int(static_cast<unsigned long>(partition_count(b)));

    r.partition_weighted_sum = r.partitions;
    for (int i = 0; i < b; ++i)
        r.partition_weighted_sum +=
            pow2(static_cast<unsigned long>(b - i - 1)) *
            big_int(static_cast<unsigned long>(partition_count(i)));

    r.ones_power_sum = 0;
    for_each_partition(b, [&](const unordered_partition& p) {
        r.ones_power_sum += pow2(static_cast<unsigned long>(ones_count(p)));
    });

    r.period1_patterns = pattern_count(b, 1);
    return r;
}

count_detail pattern_counter::count(int b, int n, std::optional<int> kappa) {
    count_detail d;
    d.balls = b;
    d.period = n;
    d.capacity = kappa;
    const int lo = lower_ball_limit(b, kappa);
    auto ss_at = [&](int period) {
        big_int ss = trace_power_tracked(b, period, kappa, &d.traces_used);
        for (int i = lo; i < b; ++i) ss -= trace_power_tracked(i, period, kappa, &d.traces_used);
        return ss;
    };
    d.siteswaps = ss_at(n);
    d.minimal_siteswaps = 0;
    for (int dd : divisors(n)) {
        const int mu = mobius(n / dd);
        if (mu != 0) d.minimal_siteswaps += mu * (dd == n ? d.siteswaps : ss_at(dd));
    }
    if (d.minimal_siteswaps % n != 0)
        throw exactness_error("count: minimal-period count not divisible by the period");
    d.patterns = d.minimal_siteswaps / n;
    std::sort(d.traces_used.begin(), d.traces_used.end());
    d.traces_used.erase(std::unique(d.traces_used.begin(), d.traces_used.end()),
                        d.traces_used.end());
    return d;
}

count_detail_q pattern_counter::count_q(int b, int n, std::optional<int> kappa) {
    count_detail_q d;
    d.balls = b;
    d.period = n;
    d.capacity = kappa;
    const int lo = lower_ball_limit(b, kappa);
    auto ss_at = [&](int period) {
        polynomial ss = trace_power_q_tracked(b, period, kappa, &d.traces_used);
        for (int i = lo; i < b; ++i)
            ss = ss - trace_power_q_tracked(i, period, kappa, &d.traces_used);
        return ss;
    };
    d.siteswaps = ss_at(n);
    d.minimal_siteswaps = polynomial();
    for (int dd : divisors(n)) {
        const int mu = mobius(n / dd);
        if (mu == 0) continue;
        polynomial term = (dd == n ? d.siteswaps : ss_at(dd)).stretched(n / dd);
        d.minimal_siteswaps =
            mu > 0 ? d.minimal_siteswaps + term : d.minimal_siteswaps - term;
    }
    std::vector<big_int> coeff = d.minimal_siteswaps.coefficients();
    for (auto& c : coeff) {
        if (c % n != 0)
            throw exactness_error("count_q: coefficient not divisible by the period");
        c /= n;
    }
    d.patterns = polynomial(std::move(coeff));
    std::sort(d.traces_used.begin(), d.traces_used.end());
    d.traces_used.erase(std::unique(d.traces_used.begin(), d.traces_used.end()),
                        d.traces_used.end());
    return d;
}

std::vector<table_record> pattern_counter::table(int b_lo, int b_hi, int n_lo, int n_hi,
                                                 std::optional<int> kappa) {
    if (b_lo > b_hi || n_lo > n_hi)
        throw std::invalid_argument("table: ranges must be nonempty");
    std::vector<table_record> out;
    out.reserve(static_cast<std::size_t>(b_hi - b_lo + 1) *
                static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int b = b_lo; b <= b_hi; ++b)
        for (int n = n_lo; n <= n_hi; ++n)
            out.push_back({b, n, kappa, pattern_count(b, n, kappa)});
    return out;
}

}  // namespace juggle
