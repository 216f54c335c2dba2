#include "zerosum/selftest.hpp"

#include "zerosum/congruence.hpp"
#include "zerosum/construct.hpp"
#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/lifting.hpp"
#include "zerosum/random.hpp"
#include "zerosum/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace zerosum {

std::vector<BigInt> reference_count_table(const Sequence& s) {
    const auto elems = s.expanded();
    const int len = static_cast<int>(elems.size());
    if (len > 24) throw DomainError("reference_count_table enumerates 2^|S| subsets; |S| too large");
    const GroupSpec& g = s.group();

    std::vector<BigInt> counts(static_cast<std::size_t>(len) + 1, 0);
    const std::uint64_t limit = std::uint64_t{1} << len;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Element sum = g.zero();
        int size = 0;
        for (int i = 0; i < len; ++i) {
            if (mask >> i & 1) {
                sum = g.add(sum, elems[static_cast<std::size_t>(i)]);
                ++size;
            }
        }
        if (sum == g.zero()) ++counts[static_cast<std::size_t>(size)];
    }
    return counts;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    std::ostringstream detail;
    bool ok = true;

    // Records the first few failures; keeps running so the report stays informative.
    void expect(bool cond, const std::string& what) {
        if (cond) return;
        if (ok) detail << "FAILED: ";
        ok = false;
        detail << what << "; ";
    }
};

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << "s";
    return os.str();
}

GroupSpec c3_3() { return GroupSpec::parse("3,3,3"); }

}  // namespace

std::vector<CriterionResult> run_selftest(SelftestTier tier, unsigned workers, std::uint64_t seed,
                                          std::ostream& log) {
    const bool fast = tier == SelftestTier::Fast;
    const bool full = tier == SelftestTier::Full;

    const int congruence_trials = fast ? 100 : 1000;
    const int window_trials = fast ? 40 : 200;
    const int oracle_trials = fast ? 100 : 500;
    const int find3x_trials = fast ? 500 : 10000;
    const int find5x_trials = fast ? 300 : 10000;
    const int find2x_c9_trials = fast ? 10 : 100;
    const int find2x_c27_trials = fast ? 2 : 10;

    std::vector<CriterionResult> results;
    auto run = [&](int id, const std::string& name, bool skip, const std::function<void(Check&)>& body) {
        CriterionResult res{id, name, false, skip, "", 0.0};
        if (skip) {
            res.detail = "not run at this tier";
            log << "SKIP " << id << "  " << name << "\n";
            results.push_back(std::move(res));
            return;
        }
        const auto t0 = Clock::now();
        Check check;
        try {
            body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        res.pass = check.ok;
        res.detail = check.detail.str();
        log << (res.pass ? "PASS " : "FAIL ") << id << "  " << name << "  (" << fmt_seconds(res.seconds) << ")"
            << (res.detail.empty() ? "" : "  " + res.detail) << "\n";
        results.push_back(std::move(res));
    };

    SearchOptions search_opts;
    search_opts.workers = workers;

    run(1, "davenport-constants", false, [&](Check& c) {
        struct Case {
            const char* group;
            std::int64_t expect;
        } cases[] = {{"3,3,3", 7}, {"3,3", 5}, {"5,5,5", 13}};
        for (const auto&[group, expect] : cases) {
            SearchOptions opts = search_opts;
            opts.budget.max_seconds = 10.0;
            auto r = compute_s_L(GroupSpec::parse(group), LengthSet::all_nonempty(), opts);
            c.expect(r.exact, std::string("D(") + group + ") search not exhaustive within 10s");
            c.expect(r.value == expect,
                     std::string("D(") + group + ") = " + std::to_string(r.value) + ", want " + std::to_string(expect));
            c.detail << "D(" << group << ")=" << r.value << " ";
        }
    });

    run(2, "s_le_5-of-C333", false, [&](Check& c) {
        SearchOptions opts = search_opts;
        opts.budget.max_seconds = 300.0;
        auto r = compute_s_L(c3_3(), LengthSet::range(1, 5), opts);
        c.expect(r.exact, "search not exhaustive within 5 min");
        c.expect(r.value == 9, "s_{<=5}(C_3^3) = " + std::to_string(r.value) + ", want 9");
        c.expect(r.certificate.witness_length == 8, "witness length != 8");
        const auto spectrum = zero_sum_length_spectrum(r.certificate.witness);
        for (int k : spectrum)
            c.expect(k >= 6 && k <= 9, "witness spectrum member " + std::to_string(k) + " outside {6..9}");
        c.detail << "value=" << r.value << " nodes=" << r.certificate.nodes_explored << " ";
    });

    run(3, "s_le_4-of-C333", false, [&](Check& c) {
        SearchOptions opts = search_opts;
        opts.budget.max_seconds = 1800.0;
        auto r = compute_s_L(c3_3(), LengthSet::range(1, 4), opts);
        c.expect(r.exact, "search not exhaustive within 30 min");
        c.expect(r.value == 10, "s_{<=4}(C_3^3) = " + std::to_string(r.value) + ", want 10");
        const Sequence s0 = construct_thm6_lower(3, 1);
        const auto spectrum = zero_sum_length_spectrum(s0);
        c.expect(spectrum == std::vector<int>{5, 6}, "thm6 witness spectrum != {5,6}");
        c.detail << "value=" << r.value << " nodes=" << r.certificate.nodes_explored << " ";
    });

    run(4, "cor5-constructions", false, [&](Check& c) {
        const Sequence a = construct_cor5_lower(3, 1);
        c.expect(a.length() == 8, "cor5(3,1) length != 8");
        c.expect(zero_sum_length_spectrum(a) == std::vector<int>{6}, "cor5(3,1) spectrum != {6}");
        const Sequence b = construct_cor5_lower(5, 1);
        c.expect(b.length() == 16, "cor5(5,1) length != 16");
        c.expect(zero_sum_length_spectrum(b) == std::vector<int>{10}, "cor5(5,1) spectrum != {10}");
    });

    run(5, "thm2-minimal-zero-sums", false, [&](Check& c) {
        struct Case {
            std::int64_t p;
            int r;
        } cases[] = {{3, 3}, {5, 3}, {7, 3}, {5, 4}};
        for (const auto& [p, r] : cases) {
            const Sequence s = construct_thm2_lower(p, r);
            const int expect = static_cast<int>(r * p - r + 1);
            c.expect(s.length() == expect, "thm2 length mismatch");
            c.expect(zero_sum_length_spectrum(s) == std::vector<int>{expect},
                     "thm2(" + std::to_string(p) + "," + std::to_string(r) + ") is not a minimal zero-sum");
        }
    });

    run(6, "thm3-rank-argument", false, [&](Check& c) {
        for (std::int64_t p : {std::int64_t{5}, std::int64_t{7}}) {
            const std::int64_t davenport = 3 * p - 2;
            for (std::int64_t k = 2; k <= p - 2; ++k) {
                const auto rep = theorem3_rank_argument(p, 1, 3, k);
                c.expect(rep.certified, "rank argument not certified at p=" + std::to_string(p) +
                                            " k=" + std::to_string(k));
                c.expect(rep.rank_coefficient <= k && rep.rank_augmented == k + 1, "rank values off");
                const Sequence s = construct_thm3_lower(p, 1, 3, k);
                const auto spectrum = zero_sum_length_spectrum(s);
                c.expect(!spectrum.empty() && spectrum.front() > davenport - k,
                         "thm3 lower witness has a zero-sum <= D-k at p=" + std::to_string(p) +
                             " k=" + std::to_string(k));
            }
        }
    });

    run(7, "congruence-suite", false, [&](Check& c) {
        Rng rng(seed + 7);
        const char* groups[] = {"3,3", "3,3,3", "5,5,5", "9,9,9"};
        for (const char* spec : groups) {
            const GroupSpec g = GroupSpec::parse(spec);
            const std::int64_t p = *g.p_group_prime();
            int olson_fail = 0, corollary_fail = 0;
            for (int i = 0; i < congruence_trials; ++i) {
                const int len = static_cast<int>(g.davenport_star() + rng.below(3));
                if (!olson_alternating(rng.sequence(g, len), p).holds) ++olson_fail;
                const std::int64_t q = g.exponent();
                const int len2 = static_cast<int>(g.davenport_star() + q - 1 + rng.below(3));
                if (!corollary_pn(rng.sequence(g, len2), p, q).holds) ++corollary_fail;
            }
            c.expect(olson_fail == 0,
                     std::string(spec) + ": " + std::to_string(olson_fail) + " Olson congruence failures");
            c.expect(corollary_fail == 0,
                     std::string(spec) + ": " + std::to_string(corollary_fail) + " corollary congruence failures");
        }
        const GroupSpec g = c3_3();
        int window_fail = 0;
        for (int i = 0; i < window_trials; ++i) {
            const int len = 2 + static_cast<int>(rng.below(9));  // |S| <= 10
            const Sequence s = rng.sequence(g, len);
            const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
            const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(m) + 1));
            if (!window_identity_check(s, j, m).holds) ++window_fail;
        }
        c.expect(window_fail == 0, std::to_string(window_fail) + " window identity failures");
    });

    run(8, "lucas-and-determinant", false, [&](Check& c) {
        for (std::int64_t p : {2, 3, 5, 7}) {
            for (std::int64_t a = 0; a <= 200; ++a)
                for (std::int64_t b = 0; b <= a; ++b)
                    if (lucas_binomial(a, b, p) != mod_reduce(binomial(a, b), p)) {
                        c.expect(false, "lucas mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                            " p=" + std::to_string(p));
                        return;
                    }
        }
        for (std::int64_t k = 1; k <= 8; ++k)
            for (std::int64_t a = 1; a <= 12; ++a) {
                const auto rep = lemma6_matrix_det(a, k);
                c.expect(rep.match,
                         "determinant identity fails at a=" + std::to_string(a) + " k=" + std::to_string(k));
            }
    });

    run(9, "constructive-3x-5x", false, [&](Check& c) {
        Rng rng(seed + 9);
        const GroupSpec g = c3_3();
        for (int i = 0; i < find3x_trials; ++i) {
            const Witness w = find_3x(rng.sequence(g, 15));
            if (w.sub.length() != 9) {
                c.expect(false, "find_3x returned a non-9 witness");
                break;
            }
        }
        for (int i = 0; i < find5x_trials; ++i) {
            const Witness w = find_5x(rng.sequence(g, 21));
            if (w.sub.length() != 15) {
                c.expect(false, "find_5x returned a non-15 witness");
                break;
            }
        }
        const Sequence egz = construct_egz_lower(g, 3);
        c.expect(egz.length() == 14, "egz(C_3^3, 3) length != 14");
        c.expect(count_table(egz).at(9) == 0, "egz(C_3^3, 3) has N^9 != 0");
        c.detail << find3x_trials << "+" << find5x_trials << " trials ";
    });

    run(10, "constructive-2x-lifting", false, [&](Check& c) {
        Rng rng(seed + 10);
        const GroupSpec c9 = GroupSpec::parse("9,9,9");
        for (int i = 0; i < find2x_c9_trials; ++i) {
            LiftingStats stats;
            const Witness w = find_2x(rng.sequence(c9, 55), &stats);
            if (w.sub.length() != 18 || stats.recursion_depth != 1) {
                c.expect(false, "find_2x over C_9^3: bad witness or recursion depth != 1");
                break;
            }
        }
        const GroupSpec c27 = GroupSpec::parse("27,27,27");
        for (int i = 0; i < find2x_c27_trials; ++i) {
            LiftingStats stats;
            const Witness w = find_2x(rng.sequence(c27, 181), &stats);
            if (w.sub.length() != 54 || stats.recursion_depth != 2) {
                c.expect(false, "find_2x over C_27^3: bad witness or recursion depth != 2");
                break;
            }
        }
        c.detail << find2x_c9_trials << "+" << find2x_c27_trials << " runs ";
    });

    run(11, "dp-oracle-equivalence", false, [&](Check& c) {
        Rng rng(seed + 11);
        const char* groups[] = {"3", "5", "7", "9", "27", "2,2", "2,4", "3,3", "3,9", "2,2,2", "3,3,3", "2,2,4"};
        int mismatches = 0;
        for (int i = 0; i < oracle_trials; ++i) {
            const GroupSpec g = GroupSpec::parse(groups[rng.below(std::size(groups))]);
            const int len = static_cast<int>(rng.below(13));  // |S| <= 12
            const Sequence s = rng.sequence(g, len);
            const auto table = count_table(s);
            const auto reference = reference_count_table(s);
            if (table.counts != reference) ++mismatches;
        }
        c.expect(mismatches == 0, std::to_string(mismatches) + " DP/oracle mismatches");
        c.detail << oracle_trials << " trials ";
    });

    run(12, "long-running-searches", !full, [&](Check& c) {
        SearchOptions opts = search_opts;
        opts.budget.max_seconds = 6 * 3600.0;
        auto r = compute_s_L(c3_3(), LengthSet::range(1, 3), opts);
        c.expect(r.exact, "s_{<=3}(C_3^3) search not exhaustive in budget");
        c.expect(r.value == 17, "s_{<=3}(C_3^3) = " + std::to_string(r.value) + ", want 17");
        auto check = verify_upper_bound(c3_3(), LengthSet::singleton(3), 19, opts);
        c.expect(check.conclusive && check.confirmed, "s(C_3^3) <= 19 not confirmed in budget");
        c.detail << "s<=3 nodes=" << r.certificate.nodes_explored << " ";
    });

    return results;
}

}  // namespace zerosum
