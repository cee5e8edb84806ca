#pragma once

// Length-constrained subsequence sums.
//
// Sigma_L(S) is computed with a table layered by subsequence length: layer l
// holds every sum of an l-element subsequence of the prefix processed so
// far.  Each copy of an element is one update step.

#include <optional>
#include <set>
#include <vector>

#include "zerosum/element_set.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

class SumTable {
public:
    /// Layers 0..max_layer.  With collapse_tail, the last layer instead
    /// holds the sums of every subsequence of length >= max_layer.
    SumTable(const GroupSpec& G, int max_layer, bool collapse_tail = false);

    void push(int element);
    void push(int element, int copies) {
        for (int i = 0; i < copies; ++i) push(element);
    }

    int max_layer() const noexcept { return static_cast<int>(layers_.size()) - 1; }
    const ElementSet& layer(int l) const { return layers_.at(l); }

private:
    const GroupSpec* group_;
    std::vector<ElementSet> layers_;
    bool collapse_tail_;
};

/// Element sets are returned as sorted element index vectors.
std::vector<int> sigma_L_indices(const Sequence& S, const LengthSet& L);
std::set<GroupElement> sigma_L(const Sequence& S, const LengthSet& L);

bool has_zero_sum(const Sequence& S, const LengthSet& L);

/// The lexicographically least (by sorted element list) subsequence T | S
/// with sum 0 and |T| in L, if any.
std::optional<Sequence> witness_zero_sum(const Sequence& S, const LengthSet& L);

bool is_minimal_zero_sum(const Sequence& S);

inline constexpr long kBruteForceGuard = 20;

/// Explicit enumeration of all 2^|S| flat subsequences.  Throws
/// GuardExceeded when |S| > 20.
std::set<GroupElement> brute_sigma_L(const Sequence& S, const LengthSet& L);

}  // namespace zerosum
