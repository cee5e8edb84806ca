#pragma once

#include <random>

#include "oracles.hpp"
#include "zerosum/sequence.hpp"

namespace testutil {

inline oracle::Multiset to_multiset(const zerosum::Sequence& S) {
    oracle::Multiset out;
    for (const auto& [g, k] : S.elements())
        for (int i = 0; i < k; ++i) out.push_back(g.residues);
    std::sort(out.begin(), out.end());
    return out;
}

inline zerosum::Sequence from_multiset(const zerosum::GroupSpec& G, const oracle::Multiset& M) {
    std::vector<zerosum::GroupElement> elems;
    for (const auto& r : M) elems.push_back(zerosum::GroupElement{r});
    return zerosum::Sequence(G, elems);
}

inline zerosum::GroupElement el(std::vector<int> r) { return zerosum::GroupElement{std::move(r)}; }

inline std::set<oracle::Elem> residue_set(const std::set<zerosum::GroupElement>& s) {
    std::set<oracle::Elem> out;
    for (const auto& g : s) out.insert(g.residues);
    return out;
}

inline zerosum::Sequence random_sequence(const zerosum::GroupSpec& G, int length, std::mt19937_64& rng) {
    std::vector<int> idx(length);
    for (auto& x : idx) x = static_cast<int>(rng() % G.size());
    return zerosum::Sequence::from_indices(G, idx);
}

}  // namespace testutil
