#include "juggle/composition.hpp"

#include <array>
#include <numeric>

namespace juggle {

namespace {

// Pascal's triangle, large enough for every feasible ball count.
constexpr int kBinomMax = 64;

std::uint64_t binom_u64(int n, int k) {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kBinomMax>, kBinomMax> t{};
        for (int i = 0; i < kBinomMax; ++i) {
            t[static_cast<std::size_t>(i)][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                    (j < i ? t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
        }
        return t;
    }();
    if (k < 0 || k > n || n < 0) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::string parts_str(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    s += ')';
    return s;
}

}  // namespace

std::string composition::str() const { return parts_str(parts_); }
std::string unordered_partition::str() const { return parts_str(parts_); }

std::vector<composition> compositions(int b) {
    std::vector<composition> out;
    if (b >= 1 && b < 63) out.reserve(static_cast<std::size_t>(composition_count(b)));
    for_each_composition(b, [&](const composition& c) { out.push_back(c); });
    return out;
}

std::vector<composition> capped_compositions(int b, int kappa) {
    std::vector<composition> out;
    for_each_capped_composition(b, kappa, [&](const composition& c) { out.push_back(c); });
    return out;
}

std::uint64_t composition_count(int b) {
    if (b < 0) throw std::invalid_argument("composition_count: b must be >= 0");
    if (b >= 64) throw std::invalid_argument("composition_count: b too large for uint64");
    return b == 0 ? 1 : (std::uint64_t{1} << (b - 1));
}

std::uint64_t capped_composition_count(int b, int kappa) {
    if (b < 0) throw std::invalid_argument("capped_composition_count: b must be >= 0");
    if (kappa < 1) throw std::invalid_argument("capped_composition_count: kappa must be >= 1");
    std::vector<std::uint64_t> r(static_cast<std::size_t>(b) + 1, 0);
    r[0] = 1;
    for (int i = 1; i <= b; ++i)
        for (int j = 1; j <= std::min(kappa, i); ++j)
            r[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i - j)];
    return r[static_cast<std::size_t>(b)];
}

std::size_t composition_index(const composition& c) {
    const auto& a = c.parts();
    const int b = c.total();
    const int k = c.size();
    if (b == 0) return 0;
    // Offset of the k-part block: all compositions with fewer parts.
    std::uint64_t idx = 0;
    for (int j = 1; j < k; ++j) idx += binom_u64(b - 1, j - 1);
    // Rank within the block: count k-part compositions that are
    // lexicographically greater, position by position.
    int remaining = b;
    for (int i = 0; i + 1 < k; ++i) {
        int ai = a[static_cast<std::size_t>(i)];
        int slots_after = k - 1 - i;
        for (int v = ai + 1; v <= remaining - slots_after; ++v)
            idx += binom_u64(remaining - v - 1, slots_after - 1);
        remaining -= ai;
    }
    return static_cast<std::size_t>(idx);
}

std::vector<unordered_partition> unordered_partitions(int b) {
    std::vector<unordered_partition> out;
    for_each_partition(b, [&](const unordered_partition& p) { out.push_back(p); });
    return out;
}

std::uint64_t partition_count(int b) {
    if (b < 0) throw std::invalid_argument("partition_count: b must be >= 0");
    // p(n, k) = partitions of n into parts <= k; Euler's recurrence.
    std::vector<std::vector<std::uint64_t>> p(
        static_cast<std::size_t>(b) + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(b) + 1, 0));
    for (int k = 0; k <= b; ++k) p[0][static_cast<std::size_t>(k)] = 1;
    for (int n = 1; n <= b; ++n)
        for (int k = 1; k <= b; ++k) {
            p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
            if (n >= k)
                p[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] +=
                    p[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(k)];
        }
    return p[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)];
}

int ones_count(const unordered_partition& p) {
    return static_cast<int>(std::count(p.parts().begin(), p.parts().end(), 1));
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    int factors = 0;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;  // squared prime factor
            ++factors;
        }
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::vector<int> divisors(int n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<int> out;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace juggle
