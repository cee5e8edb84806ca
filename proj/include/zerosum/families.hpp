#pragma once

// Parametric families of extremal sequences over C2 + C2 + C2n and over
// cyclic groups, with generators, a classifier, and checks of the
// structural corollaries that accompany them.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zerosum/search.hpp"
#include "zerosum/sequence.hpp"

namespace zerosum {

enum class FamilyLabel {
    D1, D2, D3, D4, D5, D6,
    eta1, eta2, eta3,
    eta_n1,  // C2^3: all nonzero elements
    s1, s2, s3,
    s_n1,  // C2^3: all elements
    cyc_eta_1, cyc_eta_2a, cyc_eta_2b,
    cyc_s_1, cyc_s_2a, cyc_s_2b,
};

std::string_view label_name(FamilyLabel label);
FamilyLabel parse_label(std::string_view name);
std::vector<FamilyLabel> all_labels();

enum class Problem { davenport_max, eta_extremal, s_extremal, cyclic_eta, cyclic_s };

std::string_view problem_name(Problem p);
Problem parse_problem(std::string_view name);

/// Labels whose members answer the problem.
std::vector<FamilyLabel> labels_for(Problem p, const GroupSpec& G);

using ParamValue = std::variant<long, std::vector<GroupElement>>;

struct FamilyWitness {
    FamilyLabel label;
    /// (f1, f2, f3) for the rank-three families; a generator of order n
    /// for the cyclic ones.
    Basis basis;
    /// In printed order: v, v1.., a, b, c, alpha, beta, gamma, d, g, h.
    std::vector<std::pair<std::string, ParamValue>> params;
    std::optional<GroupElement> translation;

    long int_param(std::string_view name) const;
    const std::vector<GroupElement>& element_param(std::string_view name) const;
    bool has_param(std::string_view name) const;

    bool operator==(const FamilyWitness&) const = default;
};

/// The printed sequence for the witness, translated by its translation.
/// Throws ParameterOutOfRange for parameters outside the printed ranges and
/// PreconditionViolation for a basis that does not fit G.
Sequence generate(const FamilyWitness& witness, const GroupSpec& G);

/// The standard basis used by enumerate_family: the unit vectors when G is
/// literally [2,2,2n], otherwise the first basis with profile (2,2,2n).
Basis standard_basis(const GroupSpec& G);

/// Every legal witness of the label over the standard basis.
std::vector<FamilyWitness> family_witnesses(const GroupSpec& G, FamilyLabel label);

/// Canonical representatives of the closure of the family under the
/// problem's symmetry (translations included for s-labels).
std::vector<Sequence> enumerate_family(const GroupSpec& G, FamilyLabel label);

/// Reusable classifier; the catalog of family members over the standard
/// basis is built once.
class Classifier {
public:
    Classifier(const GroupSpec& G, Problem problem);

    /// Every witness under which S is a printed family member.  Throws
    /// PreconditionViolation if |S| is not an extremal length for the
    /// problem.
    std::vector<FamilyWitness> classify(const Sequence& S, bool first_only = false) const;

    const GroupSpec& group() const noexcept { return group_; }
    Problem problem() const noexcept { return problem_; }
    /// Lengths accepted by classify.
    const std::vector<long>& lengths() const noexcept { return lengths_; }

private:
    struct Member {
        std::vector<int> key;  // sorted element indices over the standard basis
        FamilyWitness witness;
    };
    std::vector<FamilyWitness> lookup(const std::vector<int>& key) const;

    GroupSpec group_;
    Problem problem_;
    std::vector<long> lengths_;
    std::vector<Member> members_;  // sorted by key
    std::vector<Basis> bases_;
    std::vector<std::vector<int>> to_standard_;  // per basis: element -> standard coordinates
    std::vector<std::vector<int>> from_standard_;
};

std::vector<FamilyWitness> classify(const Sequence& S, Problem problem, bool first_only = false);

/// -f + S = C T with C = 0^(2u+1) f1^(2v) f2^(2w) of length exp(G)-1 and T of
/// length eta(G)-1 without a short zero-sum.
struct CTDecomposition {
    GroupElement f;
    GroupElement f1;
    GroupElement f2;
    long u = 0, v = 0, w = 0;
    Sequence C;
    Sequence T;
};

/// Throws PreconditionViolation unless S is s-extremal over C2 + C2 + C2n
/// with n >= 2.
std::optional<CTDecomposition> decompose_CT(const Sequence& S);

struct FilterLemmaCheck {
    bool hypotheses_hold = false;
    bool conclusion_holds = false;
};

/// Hypotheses: |S| = eta + exp(G) - 1, j f in Sigma_j(C') for j in
/// [1, |C'|], and |C'| >= floor((exp(G) - 1) / 2).  Conclusion: S has a
/// zero-sum subsequence of length exp(G).  Throws NotADivisor unless C' | S.
FilterLemmaCheck check_filter_lemma(const Sequence& S, const Sequence& c_prime, const GroupElement& f,
                                    long eta);

struct HeightProfile {
    int min_height = 0;
    Sequence attaining;
};

/// Throws PreconditionViolation on an empty input.
HeightProfile height_profile(std::span<const Sequence> sequences);

/// The height bound for s-extremal sequences over C2 + C2 + C2n.
long height_lower_bound(int n);

/// 0^(2a+1) f1^(2b+1) f2^(2c+1) (f3+f1)^(2a+1) (f3+f2)^(2b+1) (f3+f1+f2)^(2c+1)
/// over the standard basis, with (a, b, c) chosen by n mod 3; it attains
/// height_lower_bound(n).
Sequence height_witness(const GroupSpec& G);

}  // namespace zerosum
