#pragma once

// Sequences over a finite abelian group: finite multisets of elements, kept
// as (element index, multiplicity) pairs sorted by index.

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zerosum/group.hpp"

namespace zerosum {

class Sequence {
public:
    using Entry = std::pair<int, int>;  // element index, multiplicity > 0

    /// The empty sequence.  G must be enumerable.
    explicit Sequence(GroupSpec G);
    Sequence(GroupSpec G, const std::vector<GroupElement>& elements);
    Sequence(GroupSpec G, const std::vector<std::pair<GroupElement, int>>& counted);

    static Sequence from_indices(GroupSpec G, const std::vector<int>& indices);
    /// counts[i] is the multiplicity of element i; counts.size() == |G|.
    static Sequence from_counts(GroupSpec G, const std::vector<int>& counts);

    const GroupSpec& group() const noexcept { return group_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }
    long length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    int multiplicity(int index) const;
    int multiplicity(const GroupElement& g) const { return multiplicity(group_.index_of(g)); }

    std::vector<std::pair<GroupElement, int>> elements() const;
    /// Element indices with repetition, ascending.
    std::vector<int> flat_indices() const;
    std::vector<int> counts() const;

    /// This sequence with k more copies of g.
    Sequence with(const GroupElement& g, int k = 1) const;

    /// Multiset product (concatenation).
    Sequence operator*(const Sequence& other) const;

    bool operator==(const Sequence& other) const {
        return group_ == other.group_ && entries_ == other.entries_;
    }
    /// Lexicographic on flat_indices(); used for deterministic output order.
    bool operator<(const Sequence& other) const;

    std::string to_string() const;

private:
    Sequence(GroupSpec G, std::vector<Entry> entries, long length);
    static std::vector<Entry> normalize(std::vector<Entry> raw);

    GroupSpec group_;
    std::vector<Entry> entries_;
    long length_ = 0;
};

struct SequenceStats {
    long length = 0;
    GroupElement sum;
    int height = 0;
    std::vector<GroupElement> support;
    bool squarefree = true;
};

SequenceStats stats(const Sequence& S);

GroupElement sequence_sum(const Sequence& S);

/// h + S.
Sequence translate(const Sequence& S, const GroupElement& h);

/// S T^{-1}; throws NotADivisor unless T | S.
Sequence divide(const Sequence& S, const Sequence& T);

bool divides(const Sequence& T, const Sequence& S);

/// The permitted subsequence lengths L.
class LengthSet {
public:
    enum class Kind { exact_exponent, up_to_exponent, any, explicit_set, interval };

    static LengthSet exact_exponent() { return LengthSet(Kind::exact_exponent); }
    /// [1, exp(G)]
    static LengthSet short_lengths() { return LengthSet(Kind::up_to_exponent); }
    /// [1, infinity)
    static LengthSet any() { return LengthSet(Kind::any); }
    static LengthSet explicit_set(std::set<int> values);
    static LengthSet interval(int lo, int hi);

    /// Accepts "exp", "short", "any", "a..b", or a comma separated list.
    static LengthSet parse(std::string_view text);
    std::string to_string() const;

    Kind kind() const noexcept { return kind_; }
    const std::set<int>& values() const noexcept { return values_; }

    bool operator==(const LengthSet&) const = default;

private:
    explicit LengthSet(Kind k) : kind_(k) {}
    Kind kind_;
    std::set<int> values_;
};

/// L resolved against G and intersected with [1, max_len], ascending.
std::vector<int> resolve_lengths(const LengthSet& L, const GroupSpec& G, long max_len);

}  // namespace zerosum
