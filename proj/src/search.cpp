#include "zerosum/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "zerosum/element_set.hpp"
#include "zerosum/engine.hpp"

namespace zerosum {

// ---------------------------------------------------------------------------
// Equivalence modes and symmetry groups

bool EquivalenceMode::translation_legal(const LengthSet& L, const GroupSpec& G) {
    switch (L.kind()) {
        case LengthSet::Kind::exact_exponent: return true;
        case LengthSet::Kind::up_to_exponent:
        case LengthSet::Kind::any: return false;
        case LengthSet::Kind::interval:
            for (int v = *L.values().begin(); v <= *L.values().rbegin(); ++v)
                if (v % G.exponent() != 0) return false;
            return true;
        case LengthSet::Kind::explicit_set:
            return std::all_of(L.values().begin(), L.values().end(),
                               [&](int v) { return v % G.exponent() == 0; });
    }
    return false;
}

EquivalenceMode EquivalenceMode::automorphism_and_translation(const LengthSet& L, const GroupSpec& G) {
    if (!translation_legal(L, G)) {
        throw PreconditionViolation("translation symmetry requires every length in " + L.to_string() +
                                    " to be a multiple of exp(G)");
    }
    return EquivalenceMode(Kind::automorphism_and_translation);
}

EquivalenceMode EquivalenceMode::strongest(const LengthSet& L, const GroupSpec& G) {
    return translation_legal(L, G) ? EquivalenceMode(Kind::automorphism_and_translation)
                                   : EquivalenceMode(Kind::automorphism);
}

std::string EquivalenceMode::to_string() const {
    return translations() ? "automorphism-and-translation" : "automorphism";
}

SymmetryGroup::SymmetryGroup(const GroupSpec& G, const EquivalenceMode& mode) : group_(G), mode_(mode) {
    G.require_enumerable("SymmetryGroup");
    if (G.size() > kMaxSetElements) throw CapExceeded("SymmetryGroup supports at most 256 elements");
    n_ = G.size();
    index_at_.resize(n_);
    for (int i = 0; i < n_; ++i) index_at_[i] = i;
    std::stable_sort(index_at_.begin(), index_at_.end(),
                     [&](int a, int b) { return G.order(a) < G.order(b); });
    rank_of_.resize(n_);
    for (int r = 0; r < n_; ++r) rank_of_[index_at_[r]] = r;

    const auto autos = enumerate_automorphisms(G);
    const int shifts = mode.translations() ? n_ : 1;
    transforms_ = static_cast<int>(autos.size()) * shifts;
    images_.resize(static_cast<std::size_t>(transforms_) * n_);
    inverses_.resize(images_.size());
    int t = 0;
    for (int shift = 0; shift < shifts; ++shift) {
        for (const auto& phi : autos) {
            auto* img = images_.data() + static_cast<std::size_t>(t) * n_;
            auto* inv = inverses_.data() + static_cast<std::size_t>(t) * n_;
            for (int r = 0; r < n_; ++r) {
                const int y = rank_of_[phi[G.add(index_at_[r], shift)]];
                img[r] = static_cast<std::uint8_t>(y);
                inv[y] = static_cast<std::uint8_t>(r);
            }
            ++t;
        }
    }
}

namespace {

// Compares the image of rank-count vector c under the transform with the
// given inverse table against c itself: negative if the image is smaller.
int compare_image(const std::vector<int>& c, const std::uint8_t* inv, int n) {
    for (int r = 0; r < n; ++r) {
        const int a = c[inv[r]];
        if (a != c[r]) return a > c[r] ? -1 : 1;
    }
    return 0;
}

std::vector<int> rank_counts(const SymmetryGroup& sym, const Sequence& S) {
    std::vector<int> c(sym.element_count(), 0);
    for (const auto& [idx, k] : S.entries()) c[sym.rank_of(idx)] = k;
    return c;
}

Sequence from_rank_counts(const SymmetryGroup& sym, const std::vector<int>& c) {
    std::vector<int> counts(sym.element_count(), 0);
    for (int r = 0; r < sym.element_count(); ++r) counts[sym.index_at(r)] = c[r];
    return Sequence::from_counts(sym.group(), counts);
}

}  // namespace

Sequence SymmetryGroup::apply(int t, const Sequence& S) const {
    auto c = rank_counts(*this, S);
    std::vector<int> out(n_, 0);
    const auto* img = image(t);
    for (int r = 0; r < n_; ++r) out[img[r]] += c[r];
    return from_rank_counts(*this, out);
}

Sequence SymmetryGroup::canonical(const Sequence& S) const {
    if (!(S.group() == group_)) throw ArityMismatch("sequence is over a different group");
    const auto original = rank_counts(*this, S);
    auto best = original;
    std::vector<int> cand(n_);
    for (int t = 1; t < transforms_; ++t) {
        const auto* inv = inverse(t);
        for (int r = 0; r < n_; ++r) cand[r] = original[inv[r]];
        for (int r = 0; r < n_; ++r) {
            if (cand[r] != best[r]) {
                if (cand[r] > best[r]) best = cand;
                break;
            }
        }
    }
    return from_rank_counts(*this, best);
}

bool SymmetryGroup::is_canonical(const Sequence& S) const {
    auto c = rank_counts(*this, S);
    for (int t = 1; t < transforms_; ++t)
        if (compare_image(c, inverse(t), n_) < 0) return false;
    return true;
}

Sequence canonical_form(const Sequence& S, const EquivalenceMode& mode) {
    return SymmetryGroup(S.group(), mode).canonical(S);
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct TaskResult {
    int longest = -1;
    std::vector<std::vector<int>> longest_reps;
    std::vector<std::vector<int>> collected;
    std::vector<std::uint64_t> classes_by_length;
    std::uint64_t nodes = 0;

    void merge(const TaskResult& o) {
        if (o.longest > longest) {
            longest = o.longest;
            longest_reps = o.longest_reps;
        } else if (o.longest == longest) {
            longest_reps.insert(longest_reps.end(), o.longest_reps.begin(), o.longest_reps.end());
        }
        collected.insert(collected.end(), o.collected.begin(), o.collected.end());
        if (classes_by_length.size() < o.classes_by_length.size())
            classes_by_length.resize(o.classes_by_length.size(), 0);
        for (std::size_t i = 0; i < o.classes_by_length.size(); ++i)
            classes_by_length[i] += o.classes_by_length[i];
        nodes += o.nodes;
    }
};

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> truncated{false};
};

class Searcher {
public:
    Searcher(const SymmetryGroup& sym, const LengthSet& L, const SearchOptions& opts, Shared& shared)
        : sym_(sym), G_(sym.group()), n_(sym.element_count()), opts_(opts), shared_(shared) {
        max_length_ = opts.max_length > 0 ? opts.max_length
                                          : static_cast<int>(G_.cardinality() + G_.exponent());
        if (L.kind() == LengthSet::Kind::any) {
            collapsed_ = true;
            top_layer_ = 1;
            check_layers_ = {1};
        } else {
            check_layers_ = resolve_lengths(L, G_, max_length_);
            top_layer_ = check_layers_.empty() ? 0 : check_layers_.back();
        }
        counts_.assign(n_, 0);
        layers_.assign(static_cast<std::size_t>(max_length_) + 2,
                       std::vector<ElementSet>(static_cast<std::size_t>(top_layer_) + 1));
        layers_[0][0].set(0);
    }

    /// Rebuilds the state for a prefix of ranks (assumed canonical and
    /// zero-sum free).
    void load(const std::vector<int>& ranks) {
        std::fill(counts_.begin(), counts_.end(), 0);
        stack_.clear();
        for (int r : ranks) {
            extend_layers(static_cast<int>(stack_.size()), sym_.index_at(r));
            stack_.push_back(r);
            ++counts_[r];
        }
    }

    /// Visits the current node; with expand, also its whole subtree.
    void run(bool expand, std::vector<std::vector<int>>* children) {
        visit(expand, children);
    }

    TaskResult& result() { return result_; }

private:
    bool extend_layers(int depth, int element) {
        const auto& cur = layers_[depth];
        auto& next = layers_[depth + 1];
        next = cur;
        const int top = top_layer_;
        if (top == 0) return false;
        if (collapsed_) next[top] |= cur[top].translated(G_, element);
        for (int l = top; l >= 1; --l) next[l] |= cur[l - 1].translated(G_, element);
        for (int l : check_layers_)
            if (next[l].test(0)) return true;
        return false;
    }

    void record() {
        const int len = static_cast<int>(stack_.size());
        ++result_.nodes;
        if (result_.classes_by_length.size() <= static_cast<std::size_t>(len))
            result_.classes_by_length.resize(len + 1, 0);
        ++result_.classes_by_length[len];
        auto flat = [&] {
            std::vector<int> idx;
            for (int r : stack_) idx.push_back(sym_.index_at(r));
            std::sort(idx.begin(), idx.end());
            return idx;
        };
        if (len > result_.longest) {
            result_.longest = len;
            result_.longest_reps.clear();
        }
        if (len == result_.longest) result_.longest_reps.push_back(flat());
        if (opts_.collect_length && *opts_.collect_length == len) result_.collected.push_back(flat());
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > opts_.node_budget)
            shared_.stop = true;
    }

    // Children x >= last rank whose sorted rank tuple stays least in orbit.
    void admissible_children(std::vector<int>& out) {
        const int last = stack_.empty() ? 0 : stack_.back();
        ElementSet bad;
        ties_.clear();
        for (int t = 1; t < sym_.transform_count(); ++t) {
            const auto* inv = sym_.inverse(t);
            int r = 0;
            while (r < n_ && counts_[inv[r]] == counts_[r]) ++r;
            if (r == n_) {
                // Stabilizer: the child is smaller under t iff t moves x down.
                const auto* img = sym_.image(t);
                for (int x = last; x < n_; ++x)
                    if (img[x] < x) bad.set(x);
                continue;
            }
            // The image of the prefix is larger at rank r.  The child image
            // becomes smaller iff x lands below r, or lands on r and closes
            // the gap exactly (then the tail decides).
            for (int i = 0; i < r; ++i) bad.set(inv[i]);
            if (counts_[r] == counts_[inv[r]] + 1 && inv[r] > r) ties_.emplace_back(t, inv[r]);
        }
        out.clear();
        for (int x = last; x < n_; ++x) {
            if (bad.test(x)) continue;
            bool ok = true;
            ++counts_[x];
            for (const auto& [t, y] : ties_) {
                if (y == x && compare_image(counts_, sym_.inverse(t), n_) < 0) {
                    ok = false;
                    break;
                }
            }
            --counts_[x];
            if (ok) out.push_back(x);
        }
    }

    void visit(bool expand, std::vector<std::vector<int>>* children) {
        record();
        if (shared_.stop) return;
        const int depth = static_cast<int>(stack_.size());
        if (opts_.stop_length && depth >= *opts_.stop_length) return;
        std::vector<int> xs;
        admissible_children(xs);
        for (int x : xs) {
            if (extend_layers(depth, sym_.index_at(x))) continue;
            if (depth == max_length_) {
                shared_.truncated = true;
                shared_.stop = true;
                return;
            }
            stack_.push_back(x);
            ++counts_[x];
            if (children) children->push_back(stack_);
            if (expand) visit(true, nullptr);
            --counts_[x];
            stack_.pop_back();
            if (shared_.stop) return;
        }
    }

    const SymmetryGroup& sym_;
    const GroupSpec& G_;
    int n_;
    const SearchOptions& opts_;
    Shared& shared_;
    int max_length_ = 0;
    bool collapsed_ = false;
    int top_layer_ = 0;
    std::vector<int> check_layers_;
    std::vector<int> counts_;
    std::vector<int> stack_;
    std::vector<std::vector<ElementSet>> layers_;
    std::vector<std::pair<int, int>> ties_;
    TaskResult result_;
};

constexpr std::size_t kMinTasks = 64;
constexpr int kMaxSplitDepth = 4;

std::vector<Sequence> to_sequences(const GroupSpec& G, std::vector<std::vector<int>> reps) {
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    std::vector<Sequence> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(Sequence::from_indices(G, r));
    return out;
}

}  // namespace

SearchOutcome search_zero_sum_free(const GroupSpec& G, const LengthSet& L, const EquivalenceMode& mode,
                                   const SearchOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (mode.translations() && !EquivalenceMode::translation_legal(L, G))
        throw PreconditionViolation("translation symmetry is not legal for " + L.to_string());
    const SymmetryGroup sym(G, mode);
    Shared shared;

    // Breadth-first split of the top of the tree into independent tasks.
    TaskResult head;
    std::vector<std::vector<int>> frontier{{}};
    int depth = 0;
    while (depth < kMaxSplitDepth && !frontier.empty() && frontier.size() < kMinTasks) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : frontier) {
            Searcher s(sym, L, options, shared);
            s.load(prefix);
            s.run(false, &next);
            head.merge(s.result());
        }
        frontier = std::move(next);
        ++depth;
    }

    TaskResult total = head;
    std::vector<char> done(frontier.size(), 0);
    SearchCheckpoint checkpoint;
    if (options.resume) {
        const auto& cp = *options.resume;
        for (auto t : cp.completed_tasks)
            if (t < done.size()) done[t] = 1;
        TaskResult prior;
        prior.longest = cp.longest;
        prior.longest_reps = cp.longest_reps;
        prior.collected = cp.collected;
        prior.classes_by_length = cp.classes_by_length;
        prior.nodes = cp.nodes;
        checkpoint = cp;
        total.merge(prior);
        shared.nodes = total.nodes;
    }

    std::vector<TaskResult> results(frontier.size());
    std::vector<char> finished(frontier.size(), 0);
    std::atomic<std::size_t> next_task{0};
    auto worker = [&] {
        while (!shared.stop) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= frontier.size()) return;
            if (done[t]) continue;
            Searcher s(sym, L, options, shared);
            s.load(frontier[t]);
            s.run(true, nullptr);
            if (shared.stop) return;
            results[t] = std::move(s.result());
            finished[t] = 1;
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    TaskResult fresh;
    for (std::size_t t = 0; t < frontier.size(); ++t) {
        if (!finished[t]) continue;
        fresh.merge(results[t]);
        checkpoint.completed_tasks.push_back(t);
    }
    total.merge(fresh);

    if (shared.stop) {
        // Completed tasks plus whatever the resumed checkpoint carried.
        TaskResult carried;
        if (options.resume) {
            carried.longest = options.resume->longest;
            carried.longest_reps = options.resume->longest_reps;
            carried.collected = options.resume->collected;
            carried.classes_by_length = options.resume->classes_by_length;
            carried.nodes = options.resume->nodes;
        }
        carried.merge(fresh);
        checkpoint.longest = carried.longest;
        checkpoint.longest_reps = carried.longest_reps;
        checkpoint.collected = carried.collected;
        checkpoint.classes_by_length = carried.classes_by_length;
        checkpoint.nodes = carried.nodes;
        std::sort(checkpoint.completed_tasks.begin(), checkpoint.completed_tasks.end());
        const long bound = std::max(total.longest, head.longest) + 1;
        throw BudgetExceeded(shared.truncated ? "search reached the maximum sequence length"
                                              : "search node budget exhausted",
                             bound, std::move(checkpoint));
    }

    SearchOutcome out;
    out.longest = std::max(total.longest, 0);
    out.longest_reps = to_sequences(G, total.longest_reps);
    out.collected = to_sequences(G, total.collected);
    out.classes_by_length = total.classes_by_length;
    out.nodes = total.nodes;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

ConstantResult compute_s_L(const GroupSpec& G, const LengthSet& L, const SearchOptions& options) {
    const auto mode = EquivalenceMode::strongest(L, G);
    auto outcome = search_zero_sum_free(G, L, mode, options);
    return ConstantResult{G,
                          L,
                          mode,
                          outcome.longest + 1,
                          outcome.longest_reps.size(),
                          outcome.longest_reps.empty() ? Sequence(G) : outcome.longest_reps.front(),
                          outcome.classes_by_length,
                          outcome.nodes,
                          outcome.seconds};
}

DavenportResult davenport_constant(const GroupSpec& G, const SearchOptions& options) {
    DavenportResult res{compute_s_L(G, LengthSet::any(), options), 0, false};
    // Appending the negated sum to a longest zero-sum free sequence gives a
    // minimal zero-sum sequence; conversely every minimal zero-sum sequence
    // minus one element is zero-sum free.
    const auto& T = res.certificate;
    auto closing = negate(G, sequence_sum(T));
    auto U = T.with(closing);
    if (is_minimal_zero_sum(U)) res.max_minimal_zero_sum_length = U.length();
    res.lengths_agree = res.max_minimal_zero_sum_length == res.value;
    return res;
}

std::vector<Sequence> enumerate_extremal(const GroupSpec& G, const LengthSet& L,
                                         const EquivalenceMode& mode, const SearchOptions& options) {
    return search_zero_sum_free(G, L, mode, options).longest_reps;
}

std::vector<Sequence> enumerate_zero_sum_free(const GroupSpec& G, const LengthSet& L,
                                              const EquivalenceMode& mode, int length,
                                              const SearchOptions& options) {
    auto opts = options;
    opts.collect_length = length;
    opts.stop_length = length;
    return search_zero_sum_free(G, L, mode, opts).collected;
}

std::vector<Sequence> enumerate_max_minimal_zero_sum(const GroupSpec& G, const SearchOptions& options) {
    auto free_reps = enumerate_extremal(G, LengthSet::any(), EquivalenceMode::automorphism(), options);
    const SymmetryGroup sym(G, EquivalenceMode::automorphism());
    std::vector<Sequence> out;
    for (const auto& T : free_reps) out.push_back(sym.canonical(T.with(negate(G, sequence_sum(T)))));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace zerosum
