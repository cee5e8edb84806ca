#include "zerosum/engine.hpp"

#include <algorithm>

namespace zerosum {

namespace {

void require_engine_size(const GroupSpec& G) {
    G.require_enumerable("zero-sum engine");
    if (G.size() > kMaxSetElements) throw CapExceeded("zero-sum engine supports at most 256 elements");
}

std::set<GroupElement> to_elements(const GroupSpec& G, const ElementSet& s) {
    std::set<GroupElement> out;
    s.for_each([&](int i) { out.insert(G.element(i)); });
    return out;
}

// Sums of subsequences of `pool` (entries) that, together with `base_len`
// already chosen elements, have a total length in `lens`.  Returns whether
// `target` is among them.
bool completion_exists(const GroupSpec& G, const std::vector<Sequence::Entry>& pool, int target,
                       int base_len, const std::vector<int>& lens) {
    const int max_extra = lens.back() - base_len;
    if (max_extra < 0) return false;
    SumTable table(G, max_extra);
    for (const auto& [idx, k] : pool) table.push(idx, std::min(k, max_extra));
    for (int l = 0; l <= max_extra; ++l) {
        const int total = base_len + l;
        if (total >= 1 && std::binary_search(lens.begin(), lens.end(), total) &&
            table.layer(l).test(target))
            return true;
    }
    return false;
}

}  // namespace

SumTable::SumTable(const GroupSpec& G, int max_layer, bool collapse_tail)
    : group_(&G), layers_(static_cast<std::size_t>(std::max(max_layer, 0)) + 1),
      collapse_tail_(collapse_tail && max_layer > 0) {
    require_engine_size(G);
    layers_[0].set(0);
}

void SumTable::push(int element) {
    const int top = max_layer();
    if (top == 0) return;
    if (collapse_tail_) layers_[top] |= layers_[top].translated(*group_, element);
    for (int l = top; l >= 1; --l) layers_[l] |= layers_[l - 1].translated(*group_, element);
}

std::vector<int> sigma_L_indices(const Sequence& S, const LengthSet& L) {
    const auto& G = S.group();
    require_engine_size(G);
    auto lens = resolve_lengths(L, G, S.length());
    if (lens.empty()) return {};
    ElementSet result;
    if (L.kind() == LengthSet::Kind::any) {
        SumTable table(G, 1, true);
        for (const auto& [idx, k] : S.entries()) table.push(idx, k);
        result = table.layer(1);
    } else {
        const int top = lens.back();
        SumTable table(G, top);
        for (const auto& [idx, k] : S.entries()) table.push(idx, std::min(k, top));
        for (int l : lens) result |= table.layer(l);
    }
    std::vector<int> out;
    result.for_each([&](int i) { out.push_back(i); });
    return out;
}

std::set<GroupElement> sigma_L(const Sequence& S, const LengthSet& L) {
    std::set<GroupElement> out;
    for (int i : sigma_L_indices(S, L)) out.insert(S.group().element(i));
    return out;
}

bool has_zero_sum(const Sequence& S, const LengthSet& L) {
    const auto& G = S.group();
    require_engine_size(G);
    auto lens = resolve_lengths(L, G, S.length());
    if (lens.empty()) return false;
    if (L.kind() == LengthSet::Kind::any) {
        SumTable table(G, 1, true);
        for (const auto& [idx, k] : S.entries()) {
            for (int c = 0; c < k; ++c) {
                table.push(idx);
                if (table.layer(1).test(0)) return true;
            }
        }
        return false;
    }
    const int top = lens.back();
    SumTable table(G, top);
    for (const auto& [idx, k] : S.entries()) {
        for (int c = 0; c < std::min(k, top); ++c) {
            table.push(idx);
            for (int l : lens)
                if (table.layer(l).test(0)) return true;
        }
    }
    return false;
}

std::optional<Sequence> witness_zero_sum(const Sequence& S, const LengthSet& L) {
    const auto& G = S.group();
    require_engine_size(G);
    auto lens = resolve_lengths(L, G, S.length());
    if (lens.empty() || !completion_exists(G, S.entries(), 0, 0, lens)) return std::nullopt;

    // Greedy on the sorted element list: stop as soon as the prefix is a
    // valid witness, otherwise append the smallest element that still admits
    // a completion drawn from elements at or after it.
    auto remaining = S.entries();
    std::size_t cursor = 0;
    std::vector<int> chosen;
    int sum = 0;
    while (true) {
        const int len = static_cast<int>(chosen.size());
        if (len >= 1 && sum == 0 && std::binary_search(lens.begin(), lens.end(), len))
            return Sequence::from_indices(G, chosen);
        bool advanced = false;
        for (std::size_t j = cursor; j < remaining.size() && !advanced; ++j) {
            if (remaining[j].second == 0) continue;
            const int e = remaining[j].first;
            std::vector<Sequence::Entry> pool(remaining.begin() + static_cast<long>(j), remaining.end());
            pool.front().second -= 1;
            const int next_sum = G.add(sum, e);
            if (completion_exists(G, pool, G.neg(next_sum), len + 1, lens)) {
                chosen.push_back(e);
                sum = next_sum;
                remaining[j].second -= 1;
                cursor = j;
                advanced = true;
            }
        }
        if (!advanced) return std::nullopt;  // unreachable once a solution exists
    }
}

bool is_minimal_zero_sum(const Sequence& S) {
    if (S.empty()) return false;
    const auto& G = S.group();
    if (G.index_of(sequence_sum(S)) != 0) return false;
    if (S.length() == 1) return true;
    return !has_zero_sum(S, LengthSet::interval(1, static_cast<int>(S.length() - 1)));
}

std::set<GroupElement> brute_sigma_L(const Sequence& S, const LengthSet& L) {
    if (S.length() > kBruteForceGuard)
        throw GuardExceeded("brute_sigma_L accepts at most 20 elements");
    const auto& G = S.group();
    auto lens = resolve_lengths(L, G, S.length());
    auto flat = S.flat_indices();
    const int m = static_cast<int>(flat.size());
    std::vector<char> wanted(m + 1, 0);
    for (int l : lens) wanted[l] = 1;
    // sums[mask] extends sums[mask without its lowest bit] by one element.
    std::vector<int> sums(std::size_t{1} << m, 0);
    ElementSet found;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        const int low = std::countr_zero(mask);
        sums[mask] = G.add(sums[mask & (mask - 1)], flat[low]);
        if (wanted[std::popcount(mask)]) found.set(sums[mask]);
    }
    return to_elements(G, found);
}

}  // namespace zerosum
