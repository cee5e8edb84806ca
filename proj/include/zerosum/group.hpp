#pragma once

// Finite abelian groups presented as direct sums of cyclic groups.
//
// Elements are residue vectors.  When the cardinality is within the
// enumeration cap, every element also has a dense index: the mixed-radix
// value of its residues with the first factor most significant, so index
// order coincides with lexicographic order on residues.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zerosum/errors.hpp"

namespace zerosum {

inline constexpr std::size_t kDefaultEnumerationCap = 256;

struct GroupElement {
    std::vector<int> residues;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

std::string to_string(const GroupElement& g);

class GroupSpec {
public:
    /// Throws InvalidGroup if the list is empty or any order is below 2.
    explicit GroupSpec(std::vector<int> orders,
                       std::size_t enumeration_cap = kDefaultEnumerationCap);

    const std::vector<int>& orders() const noexcept { return orders_; }
    std::size_t arity() const noexcept { return orders_.size(); }
    long exponent() const noexcept { return exponent_; }
    long cardinality() const noexcept { return cardinality_; }

    /// True when element tables exist (cardinality within the cap).
    bool enumerable() const noexcept { return tables_ != nullptr; }
    /// Throws CapExceeded unless enumerable().
    void require_enumerable(std::string_view what) const;

    // Index-based access; all of these require enumerable().
    int size() const { return static_cast<int>(cardinality_); }
    int index_of(const GroupElement& g) const;
    GroupElement element(int index) const;
    int add(int a, int b) const { return tables_->add[a * tables_->n + b]; }
    int neg(int a) const { return tables_->neg[a]; }
    int order(int a) const { return tables_->order[a]; }
    int multiple(int a, long k) const;
    std::span<const int> residues(int index) const {
        return {tables_->residues.data() + index * arity(), arity()};
    }

    GroupElement zero_element() const { return GroupElement{std::vector<int>(arity(), 0)}; }

    std::string to_string() const;

    bool operator==(const GroupSpec& other) const { return orders_ == other.orders_; }

private:
    struct Tables {
        int n = 0;
        std::vector<int> residues;  // n * arity
        std::vector<std::uint16_t> add;
        std::vector<int> neg;
        std::vector<int> order;
    };

    std::vector<int> orders_;
    long exponent_ = 1;
    long cardinality_ = 1;
    std::shared_ptr<const Tables> tables_;
};

/// Throws ArityMismatch if g is not a reduced element of G.
void validate(const GroupSpec& G, const GroupElement& g);

/// a + k*b, reduced componentwise.
GroupElement combine(const GroupSpec& G, const GroupElement& a, const GroupElement& b,
                     long k = 1);

GroupElement negate(const GroupSpec& G, const GroupElement& a);

/// Least k >= 1 with k*a = 0.
long order_of(const GroupSpec& G, const GroupElement& a);

/// Invariant factors d1 | d2 | ... | dk (all >= 2) of the direct sum of
/// cyclic groups with the given orders.
std::vector<int> normalize_orders(const std::vector<int>& orders);

/// n such that G is isomorphic to C2 + C2 + C2n, if any.
std::optional<int> c2c2c2n_parameter(const GroupSpec& G);

struct Basis {
    std::vector<GroupElement> generators;
    std::vector<int> declared_orders;

    bool operator==(const Basis&) const = default;
};

/// True iff the generators are independent, have the declared orders and
/// generate G.
bool is_basis(const GroupSpec& G, const Basis& basis);

/// Element with the given coefficients in the basis.
GroupElement basis_combination(const GroupSpec& G, const Basis& basis,
                               std::span<const long> coefficients);

/// All ordered bases with ord(generators[i]) == profile[i], lexicographic on
/// the concatenated residues.
std::vector<Basis> enumerate_bases(const GroupSpec& G, const std::vector<int>& profile);

/// An automorphism as a permutation of element indices.
using Automorphism = std::vector<int>;

/// Every automorphism of G; the identity comes first and the rest follow in
/// lexicographic order of the images of the standard generators.
std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& G);

struct SplitData {
    std::vector<GroupElement> subgroup_elements;  // sorted
    GroupSpec quotient_spec;
    /// projection[i] = index in quotient_spec of the image of element i of G.
    std::vector<int> projection;

    GroupElement project(const GroupSpec& G, const GroupElement& g) const;
};

/// For G isomorphic to C2 + C2 + C2n: H = 2G (cyclic of order n) and the
/// projection onto C2^3.  Throws UnsupportedShape for other groups.
SplitData canonical_split(const GroupSpec& G);

/// Split by the subgroup generated by the given elements.
SplitData canonical_split(const GroupSpec& G, const std::vector<GroupElement>& subgroup_generators);

}  // namespace zerosum
