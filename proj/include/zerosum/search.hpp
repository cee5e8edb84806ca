#pragma once

// Exact computation of s_L(G) and complete enumeration of extremal sequences
// up to symmetry.
//
// The search extends L-zero-sum free sequences one element at a time, only
// appending elements that are not smaller than the last one in the rank
// order (order of the element, then index).  A node survives only if its
// sorted rank tuple is lexicographically least in its orbit, so every orbit
// is visited exactly once: removing the largest element of a canonical
// sequence leaves a canonical sequence.

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerosum/sequence.hpp"

namespace zerosum {

class EquivalenceMode {
public:
    enum class Kind { automorphism, automorphism_and_translation };

    static EquivalenceMode automorphism() { return EquivalenceMode(Kind::automorphism); }
    /// Throws PreconditionViolation unless translations preserve the
    /// avoidance property for L over G (every length in L is a multiple of
    /// exp(G)).
    static EquivalenceMode automorphism_and_translation(const LengthSet& L, const GroupSpec& G);
    static bool translation_legal(const LengthSet& L, const GroupSpec& G);
    /// Strongest legal mode for the problem.
    static EquivalenceMode strongest(const LengthSet& L, const GroupSpec& G);

    Kind kind() const noexcept { return kind_; }
    bool translations() const noexcept { return kind_ == Kind::automorphism_and_translation; }
    std::string to_string() const;

    bool operator==(const EquivalenceMode&) const = default;

private:
    explicit EquivalenceMode(Kind k) : kind_(k) {}
    Kind kind_;
};

/// The symmetry group acting on elements, as permutations of element ranks.
/// Transform 0 is the identity; with translations, transform (t, phi) maps
/// x to phi(x + t).
class SymmetryGroup {
public:
    SymmetryGroup(const GroupSpec& G, const EquivalenceMode& mode);

    const GroupSpec& group() const noexcept { return group_; }
    const EquivalenceMode& mode() const noexcept { return mode_; }
    int transform_count() const noexcept { return transforms_; }
    int element_count() const noexcept { return n_; }

    int rank_of(int index) const { return rank_of_[index]; }
    int index_at(int rank) const { return index_at_[rank]; }
    /// image(t)[r] = rank of the image of the element with rank r.
    const std::uint8_t* image(int t) const { return images_.data() + static_cast<std::size_t>(t) * n_; }
    const std::uint8_t* inverse(int t) const { return inverses_.data() + static_cast<std::size_t>(t) * n_; }

    /// Lexicographically least image of S under the group.
    Sequence canonical(const Sequence& S) const;
    bool is_canonical(const Sequence& S) const;
    Sequence apply(int t, const Sequence& S) const;

private:
    GroupSpec group_;
    EquivalenceMode mode_;
    int n_ = 0;
    int transforms_ = 0;
    std::vector<int> rank_of_;
    std::vector<int> index_at_;
    std::vector<std::uint8_t> images_;
    std::vector<std::uint8_t> inverses_;
};

Sequence canonical_form(const Sequence& S, const EquivalenceMode& mode);

/// Progress of an interrupted search; pass back through
/// SearchOptions::resume to continue.
struct SearchCheckpoint {
    std::vector<std::size_t> completed_tasks;
    int longest = -1;
    std::vector<std::vector<int>> longest_reps;  // flat element indices
    std::vector<std::vector<int>> collected;
    std::vector<std::uint64_t> classes_by_length;
    std::uint64_t nodes = 0;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, long lower_bound, SearchCheckpoint checkpoint)
        : Error(what), lower_bound_(lower_bound), checkpoint_(std::move(checkpoint)) {}

    /// A verified lower bound for s_L(G): one more than the longest
    /// zero-sum free sequence found before stopping.
    long lower_bound() const noexcept { return lower_bound_; }
    const SearchCheckpoint& checkpoint() const noexcept { return checkpoint_; }

private:
    long lower_bound_;
    SearchCheckpoint checkpoint_;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 2'000'000'000;

struct SearchOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Sequences are never extended beyond this length; reaching it raises
    /// BudgetExceeded.  0 selects |G| + exp(G).
    int max_length = 0;
    /// Also collect every canonical sequence of this length.
    std::optional<int> collect_length;
    /// Sequences of this length are recorded but not extended.
    std::optional<int> stop_length;
    int jobs = 1;
    std::optional<SearchCheckpoint> resume;
};

struct SearchOutcome {
    int longest = 0;
    std::vector<Sequence> longest_reps;
    std::vector<Sequence> collected;
    /// Number of orbits of L-zero-sum free sequences of each length.
    std::vector<std::uint64_t> classes_by_length;
    std::uint64_t nodes = 0;
    double seconds = 0;
};

SearchOutcome search_zero_sum_free(const GroupSpec& G, const LengthSet& L,
                                   const EquivalenceMode& mode, const SearchOptions& options = {});

struct ConstantResult {
    GroupSpec group;
    LengthSet length_set;
    EquivalenceMode mode;
    long value = 0;
    std::size_t extremal_count_up_to_symmetry = 0;
    Sequence certificate;
    std::vector<std::uint64_t> classes_by_length;
    std::uint64_t node_count = 0;
    double seconds = 0;
};

/// s_L(G), searched up to the strongest legal symmetry.
ConstantResult compute_s_L(const GroupSpec& G, const LengthSet& L, const SearchOptions& options = {});

struct DavenportResult : ConstantResult {
    long max_minimal_zero_sum_length = 0;
    bool lengths_agree = false;
};

DavenportResult davenport_constant(const GroupSpec& G, const SearchOptions& options = {});

/// One canonical representative per class of sequences of length s_L(G)-1
/// without an L-zero-sum.
std::vector<Sequence> enumerate_extremal(const GroupSpec& G, const LengthSet& L,
                                         const EquivalenceMode& mode,
                                         const SearchOptions& options = {});

/// Same, for a fixed length.
std::vector<Sequence> enumerate_zero_sum_free(const GroupSpec& G, const LengthSet& L,
                                              const EquivalenceMode& mode, int length,
                                              const SearchOptions& options = {});

/// One canonical representative per automorphism class of minimal zero-sum
/// sequences of length D(G).
std::vector<Sequence> enumerate_max_minimal_zero_sum(const GroupSpec& G,
                                                     const SearchOptions& options = {});

}  // namespace zerosum
