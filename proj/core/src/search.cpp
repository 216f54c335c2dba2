#include "zerosum/search.hpp"

#include "zerosum/count.hpp"
#include "zerosum/errors.hpp"
#include "zerosum/symmetry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

namespace zerosum {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kMaxSearchOrder = 1024;

struct SharedBudget {
    std::uint64_t max_nodes;
    Clock::time_point deadline;
    bool has_deadline;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> stop{false};

    explicit SharedBudget(const Budget& b) : max_nodes(b.max_nodes), has_deadline(std::isfinite(b.max_seconds)) {
        if (has_deadline)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(b.max_seconds));
    }

    // Called in batches; sets the stop flag once either bound is hit.
    void charge(std::uint64_t nodes) {
        const auto total = used.fetch_add(nodes, std::memory_order_relaxed) + nodes;
        if (total >= max_nodes || (has_deadline && Clock::now() >= deadline))
            stop.store(true, std::memory_order_relaxed);
    }
    bool stopped() const { return stop.load(std::memory_order_relaxed); }
};

struct ItemResult {
    int best_len = -1;
    std::vector<std::int32_t> best_ranks;
    std::uint64_t nodes = 0;
    std::vector<WorkItem> frontier;
    bool refuted = false;
    std::vector<std::int32_t> refuting;
};

// One DFS engine instance; workers each own one (nothing shared but the budget).
class Engine {
  public:
    Engine(const GroupSpec& g, const LengthSet& avoid, bool use_symmetry, int depth_cap)
        : g_(g), avoid_(avoid), n_(g.order()), depth_cap_(depth_cap), zsf_(avoid.is_all_nonempty()) {
        if (n_ > kMaxSearchOrder)
            throw DomainError("exhaustive search is limited to groups of order <= " +
                              std::to_string(kMaxSearchOrder));
        if (!avoid_.contains_multiple_of(g.exponent()) && depth_cap_ < 0)
            throw DomainError("avoid set " + avoid.to_string() + " misses every multiple of exp(G) = " +
                              std::to_string(g.exponent()) + "; no finite maximum exists");

        neg_.resize(static_cast<std::size_t>(n_));
        for (std::int64_t v = 0; v < n_; ++v)
            neg_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(g_.rank_of(g_.negate(g_.element_at(v))));
        add_.assign(static_cast<std::size_t>(n_), {});
        for (std::int64_t e = 0; e < n_; ++e) {
            auto& row = add_[static_cast<std::size_t>(e)];
            row.resize(static_cast<std::size_t>(n_));
            const Element elem = g_.element_at(e);
            for (std::int64_t v = 0; v < n_; ++v)
                row[static_cast<std::size_t>(v)] =
                    static_cast<std::int32_t>(g_.rank_of(g_.add(g_.element_at(v), elem)));
        }

        if (!zsf_) {
            maxc_ = std::min<std::int64_t>(avoid_.max(), depth_cap_ < 0 ? avoid_.max() : depth_cap_);
            in_avoid_.assign(static_cast<std::size_t>(maxc_) + 1, 0);
            for (int c = 1; c <= maxc_; ++c) in_avoid_[static_cast<std::size_t>(c)] = avoid_.contains(c) ? 1 : 0;
        }

        if (use_symmetry) {
            reps_ = search_symmetry_reps(g_);
        } else {
            reps_.first.resize(static_cast<std::size_t>(n_));
            for (std::int32_t v = 0; v < n_; ++v) reps_.first[static_cast<std::size_t>(v)] = v;
            reps_.second.assign(static_cast<std::size_t>(n_), {});
            for (std::int32_t v = 0; v < n_; ++v) {
                auto& row = reps_.second[static_cast<std::size_t>(v)];
                for (std::int32_t w = v; w < n_; ++w) row.push_back(w);
            }
        }
    }

    // Expands the root into per-(first,second) work items; counts its own
    // nodes and records length-1/2 avoiders so no best is missed.
    ItemResult split_root(std::vector<WorkItem>& items_out) {
        ItemResult res;
        reset_stacks(0);
        for (std::size_t fi = 0; fi < reps_.first.size(); ++fi) {
            const std::int32_t e = reps_.first[fi];
            ++res.nodes;
            if (!accept(0, e)) continue;
            note_best(res, {e});
            if (refute_check(res, 1, {e})) return res;
            for (std::int32_t f : reps_.second[fi]) {
                ++res.nodes;
                if (!accept(1, f)) continue;
                note_best(res, {e, f});
                if (refute_check(res, 2, {e, f})) return res;
                items_out.push_back(WorkItem{{e, f}, f});
            }
        }
        return res;
    }

    ItemResult run_item(const WorkItem& item, SharedBudget& budget, int init_best_len) {
        ItemResult res;
        res.best_len = init_best_len;
        const int base = static_cast<int>(item.prefix.size());
        reset_stacks(base);

        // replay the prefix (not counted; it was counted when generated)
        for (int d = 0; d < base; ++d)
            if (!accept(d, item.prefix[static_cast<std::size_t>(d)]))
                throw DomainError("work item prefix is not an avoider; stale or corrupt checkpoint");

        elems_.assign(item.prefix.begin(), item.prefix.end());
        struct Frame {
            std::int32_t next;
            std::size_t rep_index;  // scan position for depth <= 1 candidate lists
        };
        std::vector<Frame> frames;
        frames.push_back({std::max(item.min_next, base > 0 ? item.prefix.back() : 0), 0});

        std::uint64_t local_nodes = 0;
        auto flush = [&]() {
            budget.charge(local_nodes);
            res.nodes += local_nodes;
            local_nodes = 0;
        };

        while (!frames.empty()) {
            if (local_nodes >= 1024) flush();
            if (budget.stopped()) {
                flush();
                // Unexplored remainder: the unfinished sibling range of every frame.
                for (std::size_t i = 0; i < frames.size(); ++i) {
                    const int depth = base + static_cast<int>(i);
                    if (!has_candidates(frames[i].next, frames[i].rep_index, depth)) continue;
                    WorkItem w;
                    w.prefix.assign(elems_.begin(), elems_.begin() + depth);
                    w.min_next = frames[i].next;
                    res.frontier.push_back(std::move(w));
                }
                return res;
            }

            Frame& f = frames.back();
            const int depth = base + static_cast<int>(frames.size()) - 1;
            const std::int32_t e = next_candidate(f.next, f.rep_index, depth);
            if (e < 0) {
                frames.pop_back();
                if (!frames.empty()) elems_.pop_back();
                continue;
            }
            f.next = e + 1;
            ++local_nodes;
            if (!accept(depth, e)) continue;
            elems_.push_back(e);
            note_best(res, elems_);
            if (refute_check(res, depth + 1, elems_)) {
                flush();
                return res;
            }
            if (can_extend(depth + 1, res.best_len)) {
                frames.push_back({e, 0});
            } else {
                elems_.pop_back();
            }
        }
        flush();
        return res;
    }

  private:
    void reset_stacks(int base) {
        elems_.clear();
        const std::size_t want = static_cast<std::size_t>(std::max(base + 4, 8));
        if (zsf_) {
            if (zsf_layers_.size() < want) zsf_layers_.resize(want);
            if (zsf_counts_.size() < want) zsf_counts_.resize(want);
            zsf_root_.assign(static_cast<std::size_t>(n_), 0);
        } else {
            if (layers_.size() < want) layers_.resize(want);
            if (danger_.size() < want) danger_.resize(want);
            row_count_ = static_cast<std::size_t>(maxc_ + 1) * static_cast<std::size_t>(n_);
            layer_root_.assign(row_count_, 0);
            layer_root_[0] = 1;  // (c = 0, g = 0)
            danger_root_.assign(static_cast<std::size_t>(n_), 0);
            rebuild_danger(layer_root_, danger_root_, 0);
        }
    }

    // Candidate scan; depth 0/1 walk the symmetry rep lists, deeper depths are plain ranges.
    std::int32_t next_candidate(std::int32_t next, std::size_t& rep_index, int depth) {
        if (depth == 0) {
            while (rep_index < reps_.first.size() && reps_.first[rep_index] < next) ++rep_index;
            return rep_index < reps_.first.size() ? reps_.first[rep_index] : -1;
        }
        if (depth == 1) {
            const auto it = std::find(reps_.first.begin(), reps_.first.end(), elems_[0]);
            if (it == reps_.first.end()) return next < n_ ? next : -1;  // non-canonical resume prefix
            const auto& seconds = reps_.second[static_cast<std::size_t>(it - reps_.first.begin())];
            while (rep_index < seconds.size() && seconds[rep_index] < next) ++rep_index;
            return rep_index < seconds.size() ? seconds[rep_index] : -1;
        }
        return next < n_ ? next : -1;
    }

    bool has_candidates(std::int32_t next, std::size_t rep_index, int depth) {
        return next_candidate(next, rep_index, depth) >= 0;
    }

    // Evaluates pushing element e at `depth` (0-based position). Returns false
    // when the extension creates a zero-sum subsequence with length in the
    // avoid set; otherwise the per-depth state for depth+1 is filled in.
    bool accept(int depth, std::int32_t e) {
        if (zsf_) {
            const auto& parent = depth == 0 ? zsf_root_ : zsf_layers_[static_cast<std::size_t>(depth - 1)];
            const int parent_count = depth == 0 ? 0 : zsf_counts_[static_cast<std::size_t>(depth - 1)];
            if (e == 0 || parent[static_cast<std::size_t>(neg_[static_cast<std::size_t>(e)])]) return false;
            if (zsf_layers_.size() <= static_cast<std::size_t>(depth)) {
                zsf_layers_.resize(static_cast<std::size_t>(depth) + 1);
                zsf_counts_.resize(static_cast<std::size_t>(depth) + 1);
            }
            auto& child = zsf_layers_[static_cast<std::size_t>(depth)];
            child = parent;
            int count = parent_count;
            const auto& add_e = add_[static_cast<std::size_t>(e)];
            if (!child[static_cast<std::size_t>(e)]) {
                child[static_cast<std::size_t>(e)] = 1;
                ++count;
            }
            for (std::int64_t v = 0; v < n_; ++v) {
                if (!parent[static_cast<std::size_t>(v)]) continue;
                auto& cell = child[static_cast<std::size_t>(add_e[static_cast<std::size_t>(v)])];
                if (!cell) {
                    cell = 1;
                    ++count;
                }
            }
            zsf_counts_[static_cast<std::size_t>(depth)] = count;
            return true;
        }

        const auto& parent = depth == 0 ? layer_root_ : layers_[static_cast<std::size_t>(depth - 1)];
        const auto& parent_danger = depth == 0 ? danger_root_ : danger_[static_cast<std::size_t>(depth - 1)];
        if (parent_danger[static_cast<std::size_t>(neg_[static_cast<std::size_t>(e)])]) return false;
        if (layers_.size() <= static_cast<std::size_t>(depth)) {
            layers_.resize(static_cast<std::size_t>(depth) + 1);
            danger_.resize(static_cast<std::size_t>(depth) + 1);
        }
        auto& child = layers_[static_cast<std::size_t>(depth)];
        child = parent;
        const auto& add_e = add_[static_cast<std::size_t>(e)];
        const int top = std::min(depth, maxc_ - 1);
        for (int c = top; c >= 0; --c) {
            const auto* row = parent.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(n_);
            auto* nxt = child.data() + static_cast<std::size_t>(c + 1) * static_cast<std::size_t>(n_);
            for (std::int64_t v = 0; v < n_; ++v)
                if (row[v]) nxt[add_e[static_cast<std::size_t>(v)]] = 1;
        }
        auto& child_danger = danger_[static_cast<std::size_t>(depth)];
        child_danger.assign(static_cast<std::size_t>(n_), 0);
        rebuild_danger(child, child_danger, depth + 1);
        return true;
    }

    void rebuild_danger(const std::vector<std::uint8_t>& layer, std::vector<std::uint8_t>& danger, int depth) {
        // danger[g]: adding an element e with -e = g would complete a zero-sum
        // of some avoided length c (the new subsequence takes c-1 items + e).
        const int top = std::min(depth + 1, maxc_);
        for (int c = 1; c <= top; ++c) {
            if (!in_avoid_[static_cast<std::size_t>(c)]) continue;
            const auto* row = layer.data() + static_cast<std::size_t>(c - 1) * static_cast<std::size_t>(n_);
            for (std::int64_t v = 0; v < n_; ++v)
                if (row[v]) danger[static_cast<std::size_t>(v)] = 1;
        }
    }

    void note_best(ItemResult& res, const std::vector<std::int32_t>& seq) {
        if (static_cast<int>(seq.size()) > res.best_len) {
            res.best_len = static_cast<int>(seq.size());
            res.best_ranks = seq;
        }
    }

    bool refute_check(ItemResult& res, int len, const std::vector<std::int32_t>& seq) {
        if (depth_cap_ >= 0 && len >= depth_cap_) {
            res.refuted = true;
            res.refuting = seq;
            return true;
        }
        return false;
    }

    // Whether a child at `len` could still beat the bound that matters.
    bool can_extend(int len, int best_len) {
        if (zsf_) {
            // Every extension of a zero-sum-free sequence adds at least one new
            // subset sum, and sums stay inside G \ {0}.
            const int room = static_cast<int>(n_) - 1 - zsf_counts_[static_cast<std::size_t>(len - 1)];
            const int reach = len + room;
            if (depth_cap_ >= 0) return reach >= depth_cap_;
            return reach > best_len;
        }
        if (depth_cap_ >= 0) return len < depth_cap_;
        return true;
    }

    const GroupSpec& g_;
    LengthSet avoid_;
    std::int64_t n_;
    int depth_cap_;
    bool zsf_;
    int maxc_ = 0;

    std::vector<std::int32_t> neg_;
    std::vector<std::vector<std::int32_t>> add_;
    std::vector<std::uint8_t> in_avoid_;
    SymmetryReps reps_;

    std::vector<std::int32_t> elems_;
    // zero-sum-free mode: reachable nonempty subset sums per depth
    std::vector<std::uint8_t> zsf_root_;
    std::vector<std::vector<std::uint8_t>> zsf_layers_;
    std::vector<int> zsf_counts_;
    // layered mode: (cardinality, sum) reachability per depth
    std::size_t row_count_ = 0;
    std::vector<std::uint8_t> layer_root_;
    std::vector<std::vector<std::uint8_t>> layers_;
    std::vector<std::uint8_t> danger_root_;
    std::vector<std::vector<std::uint8_t>> danger_;
};

struct DriveResult {
    int best_len = -1;
    std::vector<std::int32_t> best_ranks;
    std::uint64_t nodes = 0;
    std::vector<WorkItem> frontier;
    bool refuted = false;
    std::vector<std::int32_t> refuting;
};

// Runs the whole search: splits the root, fans items out over workers, and
// merges results in item order so the outcome is schedule-independent.
DriveResult drive(const GroupSpec& g, const LengthSet& avoid, const SearchOptions& options, int depth_cap,
                  int init_best_len, const std::vector<std::int32_t>& init_best_ranks) {
    DriveResult out;
    out.best_len = init_best_len;
    out.best_ranks = init_best_ranks;

    // max_nodes applies to this run; node totals accumulate across resumes.
    SharedBudget budget(options.budget);
    out.nodes = options.resume_nodes;

    std::vector<WorkItem> items;
    if (!options.resume_items.empty()) {
        items = options.resume_items;
    } else {
        Engine gen(g, avoid, options.use_symmetry, depth_cap);
        ItemResult root = gen.split_root(items);
        budget.charge(root.nodes);
        out.nodes += root.nodes;
        if (root.best_len > out.best_len) {
            out.best_len = root.best_len;
            out.best_ranks = root.best_ranks;
        }
        if (root.refuted) {
            out.refuted = true;
            out.refuting = root.refuting;
            return out;
        }
    }

    const unsigned workers = std::max(1u, options.workers);
    std::vector<ItemResult> results(items.size());
    std::vector<std::uint8_t> done(items.size(), 0);

    if (workers == 1 || items.size() <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (budget.stopped()) break;
            Engine engine(g, avoid, options.use_symmetry, depth_cap);
            results[i] = engine.run_item(items[i], budget, out.best_len);
            done[i] = 1;
            if (depth_cap < 0 && results[i].best_len > out.best_len) {
                out.best_len = results[i].best_len;
                out.best_ranks = results[i].best_ranks;
            }
            if (results[i].refuted) break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int start_best = out.best_len;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, start_best]() {
                Engine engine(g, avoid, options.use_symmetry, depth_cap);
                // Workers share only the budget; the best-so-far is item-local
                // so every item's result is schedule-independent.
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= items.size() || budget.stopped()) return;
                    results[i] = engine.run_item(items[i], budget, start_best);
                    done[i] = 1;
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!done[i]) {
            out.frontier.push_back(items[i]);
            continue;
        }
        const auto& r = results[i];
        out.nodes += r.nodes;
        if (r.best_len > out.best_len) {
            out.best_len = r.best_len;
            out.best_ranks = r.best_ranks;
        }
        for (const auto& w : r.frontier) out.frontier.push_back(w);
        if (r.refuted && !out.refuted) {
            out.refuted = true;
            out.refuting = r.refuting;
        }
    }
    return out;
}

Sequence sequence_from_ranks(const GroupSpec& g, const std::vector<std::int32_t>& ranks) {
    Sequence s(g);
    for (auto r : ranks) s.push(g.element_at(r));
    return s;
}

// Basis sequence prod e_i^{n_i - 1}: zero-sum-free in every abelian group, so
// it seeds the Davenport-type search with a sound initial bound D*(G) - 1.
std::vector<std::int32_t> basis_avoider_ranks(const GroupSpec& g) {
    std::vector<std::int32_t> ranks;
    for (int i = 0; i < g.rank(); ++i) {
        Element e = g.zero();
        e.residues[static_cast<std::size_t>(i)] = 1;
        const auto rank = static_cast<std::int32_t>(g.rank_of(e));
        for (std::int64_t m = 1; m < g.factor(i); ++m) ranks.push_back(rank);
    }
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

void verify_avoider(const LengthSet& avoid, const Sequence& witness) {
    if (find_zero_sum_length_in(witness, avoid).has_value())
        throw InvariantViolation("emitted witness has a zero-sum subsequence with length in " + avoid.to_string());
}

}  // namespace

SearchRun max_avoiding(const GroupSpec& g, const LengthSet& avoid, const SearchOptions& options) {
    if (avoid.empty()) throw DomainError("avoid set must be nonempty");
    const auto t0 = Clock::now();

    int init_len = 0;
    std::vector<std::int32_t> init_ranks;
    if (options.resume_best) {
        init_ranks = *options.resume_best;
        init_len = static_cast<int>(init_ranks.size());
    } else if (avoid.is_all_nonempty()) {
        init_ranks = basis_avoider_ranks(g);
        verify_avoider(avoid, sequence_from_ranks(g, init_ranks));
        init_len = static_cast<int>(init_ranks.size());
    }

    DriveResult r = drive(g, avoid, options, -1, init_len, init_ranks);

    SearchRun run{ExtremalCertificate{g, avoid, sequence_from_ranks(g, r.best_ranks), r.best_len,
                                      r.frontier.empty() ? CertStatus::Exhaustive : CertStatus::LowerBoundOnly,
                                      r.nodes,
                                      std::chrono::duration<double>(Clock::now() - t0).count()},
                  std::move(r.frontier)};
    verify_avoider(avoid, run.certificate.witness);
    return run;
}

SLResult compute_s_L(const GroupSpec& g, const LengthSet& avoid, const SearchOptions& options) {
    SearchRun run = max_avoiding(g, avoid, options);
    return SLResult{run.certificate.witness_length + 1, run.certificate.status == CertStatus::Exhaustive,
                    std::move(run.certificate)};
}

UpperBoundCheck verify_upper_bound(const GroupSpec& g, const LengthSet& avoid, int len,
                                   const SearchOptions& options) {
    if (len < 1) throw DomainError("verify_upper_bound needs a length >= 1");
    if (avoid.empty()) throw DomainError("avoid set must be nonempty");
    const auto t0 = Clock::now();

    DriveResult r = drive(g, avoid, options, len, 0, {});

    UpperBoundCheck check;
    check.nodes_explored = r.nodes;
    check.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    check.frontier = std::move(r.frontier);
    if (r.refuted) {
        check.conclusive = true;
        check.confirmed = false;
        Sequence cex = sequence_from_ranks(g, r.refuting);
        if (cex.length() != len) throw InvariantViolation("refuting sequence has the wrong length");
        verify_avoider(avoid, cex);
        check.counterexample = std::move(cex);
    } else {
        check.conclusive = check.frontier.empty();
        check.confirmed = check.conclusive;
    }
    return check;
}

void write_checkpoint(std::ostream& out, const Checkpoint& cp) {
    out << "zerosum-checkpoint 1\n";
    out << "group " << cp.group.to_string() << '\n';
    out << "avoid " << cp.avoided.to_string() << '\n';
    out << "depth-cap " << cp.depth_cap << '\n';
    out << "symmetry " << (cp.use_symmetry ? 1 : 0) << '\n';
    out << "nodes " << cp.nodes << '\n';
    out << "status " << (cp.complete ? "complete" : "partial") << '\n';
    if (cp.best) {
        out << "best";
        for (auto r : *cp.best) out << ' ' << r;
        out << '\n';
    }
    for (const auto& item : cp.items) {
        out << "item " << item.min_next;
        for (auto r : item.prefix) out << ' ' << r;
        out << '\n';
    }
}

Checkpoint read_checkpoint(std::istream& in) {
    Checkpoint cp;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (!have_header) {
            int version = 0;
            if (key != "zerosum-checkpoint" || !(ls >> version) || version != 1)
                throw ParseError("not a zerosum-checkpoint version 1 file", line_no);
            have_header = true;
            continue;
        }
        if (key == "group") {
            std::string spec;
            ls >> spec;
            cp.group = GroupSpec::parse(spec);
        } else if (key == "avoid") {
            std::string spec;
            ls >> spec;
            cp.avoided = LengthSet::parse(spec);
        } else if (key == "depth-cap") {
            ls >> cp.depth_cap;
        } else if (key == "symmetry") {
            int v = 1;
            ls >> v;
            cp.use_symmetry = v != 0;
        } else if (key == "nodes") {
            ls >> cp.nodes;
        } else if (key == "status") {
            std::string status;
            ls >> status;
            cp.complete = status == "complete";
        } else if (key == "best") {
            std::vector<std::int32_t> ranks;
            std::int64_t r;
            while (ls >> r) ranks.push_back(static_cast<std::int32_t>(r));
            cp.best = std::move(ranks);
        } else if (key == "item") {
            WorkItem item;
            std::int64_t next;
            if (!(ls >> next)) throw ParseError("item line missing min_next", line_no);
            item.min_next = static_cast<std::int32_t>(next);
            std::int64_t r;
            while (ls >> r) item.prefix.push_back(static_cast<std::int32_t>(r));
            cp.items.push_back(std::move(item));
        } else {
            throw ParseError("unknown checkpoint key '" + key + "'", line_no);
        }
    }
    if (!have_header) throw ParseError("empty checkpoint file", 1);
    return cp;
}

}  // namespace zerosum
