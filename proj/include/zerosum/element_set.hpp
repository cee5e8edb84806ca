#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "zerosum/group.hpp"

namespace zerosum {

inline constexpr int kMaxSetElements = 256;

/// Fixed-capacity bitset over element indices of a group with at most 256
/// elements.
class ElementSet {
public:
    void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

    bool any() const noexcept { return (words_[0] | words_[1] | words_[2] | words_[3]) != 0; }
    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    ElementSet& operator|=(const ElementSet& o) noexcept {
        for (int i = 0; i < 4; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    bool operator==(const ElementSet&) const = default;

    template <typename F>
    void for_each(F&& f) const {
        for (int w = 0; w < 4; ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1)
                f(w * 64 + std::countr_zero(bits));
        }
    }

    /// { g + x : g in this }.
    ElementSet translated(const GroupSpec& G, int x) const {
        ElementSet out;
        for_each([&](int g) { out.set(G.add(g, x)); });
        return out;
    }

private:
    std::array<std::uint64_t, 4> words_{};
};

}  // namespace zerosum
