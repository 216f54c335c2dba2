#include "zerosum/count.hpp"

#include "zerosum/errors.hpp"

#include <algorithm>

namespace zerosum {

namespace {

// addmap[g] = rank of (element_at(g) + e) for a fixed e, computed without
// materializing elements: per-coordinate cyclic shift in mixed radix.
std::vector<std::int32_t> rank_add_map(const GroupSpec& g, std::int64_t e_rank) {
    const std::int64_t n = g.order();
    std::vector<std::int32_t> map(static_cast<std::size_t>(n));
    Element e = g.element_at(e_rank);
    Element cur = g.zero();
    for (std::int64_t i = 0; i < n; ++i) {
        map[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(g.rank_of(g.add(cur, e)));
        // increment cur in mixed radix (lex order matches rank order)
        for (int c = g.rank() - 1; c >= 0; --c) {
            auto& x = cur.residues[static_cast<std::size_t>(c)];
            if (++x < g.factor(c)) break;
            x = 0;
        }
    }
    return map;
}

void check_table_budget(const Sequence& s, const DpBudget& budget) {
    const auto cells =
        static_cast<std::uint64_t>(s.length() + 1) * static_cast<std::uint64_t>(s.group().order());
    if (cells > budget.max_table_cells)
        throw ResourceError("counting DP needs " + std::to_string(cells) + " cells, over the max_table_cells bound of " +
                            std::to_string(budget.max_table_cells));
}

}  // namespace

CountTable count_table(const Sequence& s, const DpBudget& budget) {
    check_table_budget(s, budget);
    const GroupSpec& g = s.group();
    const std::int64_t n = g.order();
    const auto ranks = s.expanded_ranks();
    const int len = static_cast<int>(ranks.size());

    // dp[c][g] = number of size-c sub-index-sets of the processed prefix with sum g
    std::vector<std::vector<BigInt>> dp(static_cast<std::size_t>(len) + 1,
                                        std::vector<BigInt>(static_cast<std::size_t>(n)));
    dp[0][0] = 1;
    for (int i = 0; i < len; ++i) {
        const auto addmap = rank_add_map(g, ranks[static_cast<std::size_t>(i)]);
        for (int c = i; c >= 0; --c) {
            const auto& row = dp[static_cast<std::size_t>(c)];
            auto& next = dp[static_cast<std::size_t>(c) + 1];
            for (std::int64_t v = 0; v < n; ++v)
                if (row[static_cast<std::size_t>(v)] != 0)
                    next[static_cast<std::size_t>(addmap[static_cast<std::size_t>(v)])] +=
                        row[static_cast<std::size_t>(v)];
        }
    }

    CountTable table{g, len, {}};
    table.counts.reserve(static_cast<std::size_t>(len) + 1);
    for (int k = 0; k <= len; ++k) table.counts.push_back(dp[static_cast<std::size_t>(k)][0]);
    return table;
}

std::vector<int> count_mod_p(const Sequence& s, std::int64_t p, const DpBudget& budget) {
    if (p < 2) throw DomainError("count_mod_p needs a modulus >= 2");
    check_table_budget(s, budget);
    const GroupSpec& g = s.group();
    const std::int64_t n = g.order();
    const auto ranks = s.expanded_ranks();
    const int len = static_cast<int>(ranks.size());

    std::vector<std::vector<std::int32_t>> dp(static_cast<std::size_t>(len) + 1,
                                              std::vector<std::int32_t>(static_cast<std::size_t>(n), 0));
    dp[0][0] = 1;
    for (int i = 0; i < len; ++i) {
        const auto addmap = rank_add_map(g, ranks[static_cast<std::size_t>(i)]);
        for (int c = i; c >= 0; --c) {
            const auto& row = dp[static_cast<std::size_t>(c)];
            auto& next = dp[static_cast<std::size_t>(c) + 1];
            for (std::int64_t v = 0; v < n; ++v) {
                if (row[static_cast<std::size_t>(v)] == 0) continue;
                auto& cell = next[static_cast<std::size_t>(addmap[static_cast<std::size_t>(v)])];
                cell = static_cast<std::int32_t>((cell + row[static_cast<std::size_t>(v)]) % p);
            }
        }
    }

    std::vector<int> out(static_cast<std::size_t>(len) + 1);
    for (int k = 0; k <= len; ++k) out[static_cast<std::size_t>(k)] = dp[static_cast<std::size_t>(k)][0];
    return out;
}

namespace {

// Reachability tables retained after each processed entry, for backtracking.
struct ReachLayers {
    std::int64_t n;
    int maxc;
    // layers[i] = table after the first i entries; cell (c, g) at c*n + g
    std::vector<std::vector<std::uint8_t>> layers;

    bool at(int layer, int c, std::int64_t g) const {
        return layers[static_cast<std::size_t>(layer)][static_cast<std::size_t>(c) * static_cast<std::size_t>(n) +
                                                       static_cast<std::size_t>(g)] != 0;
    }
};

ReachLayers build_reach_layers(const Sequence& s, int maxc, const DpBudget& budget) {
    const GroupSpec& g = s.group();
    const std::int64_t n = g.order();
    const auto ranks = s.expanded_ranks();
    const int len = static_cast<int>(ranks.size());
    const auto bytes = static_cast<std::uint64_t>(len + 1) * static_cast<std::uint64_t>(maxc + 1) *
                       static_cast<std::uint64_t>(n);
    if (bytes > budget.max_layer_bytes)
        throw ResourceError("witness extraction needs " + std::to_string(bytes) +
                            " layer bytes, over the max_layer_bytes bound of " +
                            std::to_string(budget.max_layer_bytes));

    ReachLayers r{n, maxc, {}};
    r.layers.reserve(static_cast<std::size_t>(len) + 1);
    std::vector<std::uint8_t> table(static_cast<std::size_t>((maxc + 1) * n), 0);
    table[0] = 1;  // (c=0, g=0)
    r.layers.push_back(table);
    for (int i = 0; i < len; ++i) {
        const auto addmap = rank_add_map(g, ranks[static_cast<std::size_t>(i)]);
        for (int c = std::min(i, maxc - 1); c >= 0; --c) {
            const auto* row = table.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n);
            auto* next = table.data() + static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(n);
            for (std::int64_t v = 0; v < n; ++v)
                if (row[v]) next[addmap[static_cast<std::size_t>(v)]] = 1;
        }
        r.layers.push_back(table);
    }
    return r;
}

std::int64_t rank_sub(const GroupSpec& g, std::int64_t a, std::int64_t b) {
    return g.rank_of(g.add(g.element_at(a), g.negate(g.element_at(b))));
}

Witness backtrack_witness(const Sequence& s, const ReachLayers& r, int k) {
    const GroupSpec& g = s.group();
    const auto ranks = s.expanded_ranks();
    Sequence sub(g);
    int c = k;
    std::int64_t v = 0;
    // Walk entries from last to first; skipping an entry whenever the prefix
    // alone suffices keeps the chosen entries earliest in the fixed order.
    for (int i = static_cast<int>(ranks.size()); i >= 1; --i) {
        if (r.at(i - 1, c, v)) continue;
        const std::int64_t e = ranks[static_cast<std::size_t>(i - 1)];
        sub.push(g.element_at(e));
        v = rank_sub(g, v, e);
        --c;
    }
    if (c != 0 || v != 0) throw InvariantViolation("witness backtracking lost the DP invariant");
    return Witness{std::move(sub), k};
}

void verify_witness(const Sequence& s, const Witness& w) {
    if (w.sub.length() != w.target_length)
        throw InvariantViolation("witness has length " + std::to_string(w.sub.length()) + ", wanted " +
                                 std::to_string(w.target_length));
    if (w.sub.sigma() != s.group().zero()) throw InvariantViolation("witness is not zero-sum");
    if (!s.contains(w.sub)) throw InvariantViolation("witness is not contained in the source sequence");
}

}  // namespace

std::optional<Witness> find_zero_sum_of_length(const Sequence& s, int k, const DpBudget& budget) {
    if (k < 0 || k > s.length())
        throw DomainError("target length " + std::to_string(k) + " outside [0, " + std::to_string(s.length()) + "]");
    check_table_budget(s, budget);
    if (k == 0) return Witness{Sequence(s.group()), 0};
    const auto r = build_reach_layers(s, k, budget);
    if (!r.at(static_cast<int>(r.layers.size()) - 1, k, 0)) return std::nullopt;
    Witness w = backtrack_witness(s, r, k);
    verify_witness(s, w);
    return w;
}

std::optional<Witness> find_zero_sum_length_in(const Sequence& s, const LengthSet& lengths, const DpBudget& budget) {
    check_table_budget(s, budget);
    const auto ks = lengths.members(1, s.length());
    if (ks.empty()) return std::nullopt;
    const auto r = build_reach_layers(s, ks.back(), budget);
    for (int k : ks) {
        if (!r.at(static_cast<int>(r.layers.size()) - 1, k, 0)) continue;
        Witness w = backtrack_witness(s, r, k);
        verify_witness(s, w);
        return w;
    }
    return std::nullopt;
}

std::vector<int> zero_sum_length_spectrum(const Sequence& s, const DpBudget& budget) {
    check_table_budget(s, budget);
    const GroupSpec& g = s.group();
    const std::int64_t n = g.order();
    const auto ranks = s.expanded_ranks();
    const int len = static_cast<int>(ranks.size());

    // rolling table; no extraction, so layers are not retained
    std::vector<std::uint8_t> table(static_cast<std::size_t>((len + 1) * n), 0);
    table[0] = 1;
    for (int i = 0; i < len; ++i) {
        const auto addmap = rank_add_map(g, ranks[static_cast<std::size_t>(i)]);
        for (int c = i; c >= 0; --c) {
            const auto* row = table.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n);
            auto* next = table.data() + static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(n);
            for (std::int64_t v = 0; v < n; ++v)
                if (row[v]) next[addmap[static_cast<std::size_t>(v)]] = 1;
        }
    }

    std::vector<int> out;
    for (int k = 1; k <= len; ++k)
        if (table[static_cast<std::size_t>(k) * static_cast<std::size_t>(n)]) out.push_back(k);
    return out;
}

}  // namespace zerosum
