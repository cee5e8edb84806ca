#include "zerosum/families.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "zerosum/engine.hpp"

namespace zerosum {

namespace {

struct LabelName {
    FamilyLabel label;
    std::string_view name;
};

constexpr std::array<LabelName, 20> kLabelNames{{
    {FamilyLabel::D1, "D1"},
    {FamilyLabel::D2, "D2"},
    {FamilyLabel::D3, "D3"},
    {FamilyLabel::D4, "D4"},
    {FamilyLabel::D5, "D5"},
    {FamilyLabel::D6, "D6"},
    {FamilyLabel::eta1, "eta1"},
    {FamilyLabel::eta2, "eta2"},
    {FamilyLabel::eta3, "eta3"},
    {FamilyLabel::eta_n1, "eta-n1"},
    {FamilyLabel::s1, "s1"},
    {FamilyLabel::s2, "s2"},
    {FamilyLabel::s3, "s3"},
    {FamilyLabel::s_n1, "s-n1"},
    {FamilyLabel::cyc_eta_1, "cyc-eta-1"},
    {FamilyLabel::cyc_eta_2a, "cyc-eta-2a"},
    {FamilyLabel::cyc_eta_2b, "cyc-eta-2b"},
    {FamilyLabel::cyc_s_1, "cyc-s-1"},
    {FamilyLabel::cyc_s_2a, "cyc-s-2a"},
    {FamilyLabel::cyc_s_2b, "cyc-s-2b"},
}};

constexpr std::array<std::pair<Problem, std::string_view>, 5> kProblemNames{{
    {Problem::davenport_max, "davenport-max"},
    {Problem::eta_extremal, "eta-extremal"},
    {Problem::s_extremal, "s-extremal"},
    {Problem::cyclic_eta, "cyclic-eta"},
    {Problem::cyclic_s, "cyclic-s"},
}};

bool is_cyclic_label(FamilyLabel l) { return l >= FamilyLabel::cyc_eta_1; }

bool is_cyclic_s_label(FamilyLabel l) { return l >= FamilyLabel::cyc_s_1; }

bool is_s_label(FamilyLabel l) {
    return l == FamilyLabel::s1 || l == FamilyLabel::s2 || l == FamilyLabel::s3 || l == FamilyLabel::s_n1;
}

bool is_eta_label(FamilyLabel l) {
    return l == FamilyLabel::eta1 || l == FamilyLabel::eta2 || l == FamilyLabel::eta3 ||
           l == FamilyLabel::eta_n1;
}

bool translation_closed(FamilyLabel l) { return is_s_label(l) || is_cyclic_s_label(l); }

int rank3_n(const GroupSpec& G) {
    auto n = c2c2c2n_parameter(G);
    if (!n) throw UnsupportedShape("group " + G.to_string() + " is not C2 + C2 + C2n");
    G.require_enumerable("family generation");
    return *n;
}

int cyclic_n(const GroupSpec& G) {
    if (normalize_orders(G.orders()).size() != 1)
        throw UnsupportedShape("group " + G.to_string() + " is not cyclic");
    G.require_enumerable("family generation");
    if (G.size() < 3) throw UnsupportedShape("cyclic families need C_n with n >= 3");
    return G.size();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterOutOfRange(what);
}

long mod(long x, long m) { return ((x % m) + m) % m; }

// Collects the printed factors of a rank-three family member.
class Builder {
public:
    Builder(const GroupSpec& G, const Basis& B, long m) : G_(G), B_(B), m_(m) {}

    GroupElement at(long c1, long c2, long c3) const {
        const std::array<long, 3> c{mod(c1, 2), mod(c2, 2), mod(c3, m_)};
        return basis_combination(G_, B_, c);
    }
    void add(long c1, long c2, long c3, long k = 1) { add(at(c1, c2, c3), k); }
    void add(const GroupElement& g, long k = 1) {
        if (k > 0) items_.emplace_back(g, static_cast<int>(k));
    }
    Sequence build() const { return Sequence(G_, items_); }

private:
    const GroupSpec& G_;
    const Basis& B_;
    long m_;
    std::vector<std::pair<GroupElement, int>> items_;
};

// The d-list of eta3, s3 and D6: elements of <f1, f2>, returned as
// coefficient pairs.
std::vector<std::array<int, 2>> d_coefficients(const GroupSpec& G, const Basis& B,
                                              const std::vector<GroupElement>& d) {
    std::vector<std::array<int, 2>> out;
    for (const auto& x : d) {
        validate(G, x);
        bool found = false;
        for (int c1 = 0; c1 < 2 && !found; ++c1)
            for (int c2 = 0; c2 < 2 && !found; ++c2) {
                const std::array<long, 3> c{c1, c2, 0};
                if (basis_combination(G, B, c) == x) {
                    out.push_back({c1, c2});
                    found = true;
                }
            }
        require(found, "d element " + to_string(x) + " is not in <f1, f2>");
    }
    return out;
}

// sigma(S') as a coefficient pair, and whether it lies in supp(S').
std::pair<std::array<int, 2>, bool> d_sum_in_support(const std::vector<std::array<int, 2>>& d) {
    std::array<int, 2> s{0, 0};
    for (const auto& c : d) {
        s[0] ^= c[0];
        s[1] ^= c[1];
    }
    return {s, std::find(d.begin(), d.end(), s) != d.end()};
}

void add_shifted_d(Builder& b, const std::vector<std::array<int, 2>>& d) {
    for (const auto& c : d) b.add(c[0], c[1], 1);
}

Sequence generate_rank3(const FamilyWitness& w, const GroupSpec& G) {
    const long n = rank3_n(G);
    const long m = 2 * n;
    const auto& B = w.basis;
    if (B.generators.size() != 3 || B.declared_orders != std::vector<int>{2, 2, static_cast<int>(m)} ||
        !is_basis(G, B))
        throw PreconditionViolation("basis order profile mismatch: expected (2, 2, " + std::to_string(m) +
                                    ")");
    const auto L = w.label;
    if ((L == FamilyLabel::eta_n1 || L == FamilyLabel::s_n1) && n != 1)
        throw UnsupportedShape(std::string(label_name(L)) + " exists only over C2^3");
    if ((L == FamilyLabel::eta1 || L == FamilyLabel::eta2 || L == FamilyLabel::eta3 ||
         L == FamilyLabel::s1 || L == FamilyLabel::s2 || L == FamilyLabel::s3) &&
        n < 2)
        throw UnsupportedShape(std::string(label_name(L)) + " needs n >= 2");

    auto in = [](long x, long lo, long hi) { return lo <= x && x <= hi; };
    auto odd = [](long x) { return x >= 1 && x % 2 == 1; };
    Builder b(G, B, m);
    switch (L) {
        case FamilyLabel::D1: {
            const long v3 = w.int_param("v3"), v2 = w.int_param("v2"), v1 = w.int_param("v1");
            require(odd(v1) && odd(v2) && odd(v3), "D1: v1, v2, v3 must be odd positive");
            require(v3 >= v2 && v2 >= v1, "D1: need v3 >= v2 >= v1");
            require(v1 + v2 + v3 == m + 1, "D1: need v1 + v2 + v3 = 2n + 1");
            b.add(0, 0, 1, v3);
            b.add(0, 1, 1, v2);
            b.add(1, 0, 1, v1);
            b.add(1, 1, -1);
            break;
        }
        case FamilyLabel::D2: {
            const long v3 = w.int_param("v3"), v2 = w.int_param("v2"), a = w.int_param("a");
            require(odd(v2) && odd(v3), "D2: v2, v3 must be odd positive");
            require(v3 >= v2 && v2 + v3 == m, "D2: need v3 >= v2 and v2 + v3 = 2n");
            require(in(a, 2, n - 1), "D2: a must lie in [2, n-1]");
            b.add(0, 0, 1, v3);
            b.add(0, 1, 1, v2);
            b.add(1, 0, a);
            b.add(1, 1, -a);
            break;
        }
        case FamilyLabel::D3: {
            const long a = w.int_param("a"), bb = w.int_param("b"), c = w.int_param("c");
            require(a + bb + c == m + 1, "D3: need a + b + c = 2n + 1");
            require(a <= bb && bb <= c, "D3: need a <= b <= c");
            require(in(a, 2, n - 1) && in(bb, 2, n - 1), "D3: a, b must lie in [2, n-1]");
            require(in(c, 2, m - 3) && c != n && c != n + 1, "D3: c must lie in [2, 2n-3] minus {n, n+1}");
            b.add(0, 0, 1, m - 1);
            b.add(0, 1, a);
            b.add(1, 0, bb);
            b.add(1, 1, c);
            break;
        }
        case FamilyLabel::D4:
        case FamilyLabel::eta1: {
            const long v = w.int_param("v"), a = w.int_param("a");
            require(in(v, 0, n - 1), std::string(label_name(L)) + ": v must lie in [0, n-1]");
            require(in(a, 2, n - 1), std::string(label_name(L)) + ": a must lie in [2, n-1]");
            const long extra = L == FamilyLabel::eta1 ? 1 : 0;
            b.add(0, 0, 1, m - 1 - 2 * v);
            b.add(0, 1, 1, 2 * v + extra);
            b.add(0, 1, 0);
            b.add(1, 0, a);
            b.add(1, 1, 1 - a);
            break;
        }
        case FamilyLabel::D5:
        case FamilyLabel::eta2:
        case FamilyLabel::s2: {
            const long a = w.int_param("a"), bb = w.int_param("b");
            require(in(a, 2, n - 1) && in(bb, 2, n - 1),
                    std::string(label_name(L)) + ": a, b must lie in [2, n-1]");
            require(a >= bb, std::string(label_name(L)) + ": need a >= b");
            if (L == FamilyLabel::s2) b.add(0, 0, 0, m - 1);
            b.add(0, 0, 1, L == FamilyLabel::D5 ? m - 2 : m - 1);
            b.add(0, 1, a);
            b.add(0, 1, 1 - a);
            b.add(1, 0, bb);
            b.add(1, 0, 1 - bb);
            break;
        }
        case FamilyLabel::D6:
        case FamilyLabel::eta3: {
            const auto d = d_coefficients(G, B, w.element_param("d"));
            const long len = L == FamilyLabel::D6 ? m : m + 1;
            require(static_cast<long>(d.size()) == len,
                    std::string(label_name(L)) + ": d-list must have length " + std::to_string(len));
            const auto [sum, in_support] = d_sum_in_support(d);
            if (L == FamilyLabel::D6)
                require(sum == std::array<int, 2>{1, 1}, "D6: sigma(S') must equal f1 + f2");
            else
                require(!in_support, "eta3: sigma(S') must not lie in supp(S')");
            add_shifted_d(b, d);
            b.add(0, 1, 0);
            b.add(1, 0, 0);
            break;
        }
        case FamilyLabel::s1: {
            const long alpha = w.int_param("alpha"), beta = w.int_param("beta"), a = w.int_param("a");
            require(in(alpha, 0, n - 1) && in(beta, 0, n - 1), "s1: alpha, beta must lie in [0, n-1]");
            require(in(a, 2, n - 1), "s1: a must lie in [2, n-1]");
            b.add(0, 0, 0, 2 * alpha + 1);
            b.add(0, 1, 0, m - 2 * alpha - 1);
            b.add(0, 0, 1, m - 1 - 2 * beta);
            b.add(0, 1, 1, 2 * beta + 1);
            b.add(1, 0, a);
            b.add(1, 1, 1 - a);
            break;
        }
        case FamilyLabel::s3: {
            const long alpha = w.int_param("alpha"), beta = w.int_param("beta"), gamma = w.int_param("gamma");
            require(in(alpha, 0, n - 1) && in(beta, 0, n - 1) && in(gamma, 0, n - 1),
                    "s3: alpha, beta, gamma must lie in [0, n-1]");
            require(alpha + beta + gamma == n - 1, "s3: need alpha + beta + gamma = n - 1");
            const auto d = d_coefficients(G, B, w.element_param("d"));
            require(static_cast<long>(d.size()) == m + 1, "s3: d-list must have length 2n+1");
            require(!d_sum_in_support(d).second, "s3: sigma(S') must not lie in supp(S')");
            b.add(0, 0, 0, 2 * alpha + 1);
            b.add(1, 0, 0, 2 * beta + 1);
            b.add(0, 1, 0, 2 * gamma + 1);
            add_shifted_d(b, d);
            break;
        }
        case FamilyLabel::eta_n1:
        case FamilyLabel::s_n1:
            for (int c = L == FamilyLabel::eta_n1 ? 1 : 0; c < 8; ++c) b.add(c >> 2 & 1, c >> 1 & 1, c & 1);
            break;
        default:
            throw UnsupportedShape("not a rank-three family");
    }
    return b.build();
}

Sequence generate_cyclic(const FamilyWitness& w, const GroupSpec& G) {
    const int n = cyclic_n(G);
    const auto& B = w.basis;
    if (B.generators.size() != 1 || B.declared_orders != std::vector<int>{n} || !is_basis(G, B))
        throw PreconditionViolation("basis order profile mismatch: expected a generator of order " +
                                    std::to_string(n));
    auto single = [&](std::string_view name) {
        const auto& v = w.element_param(name);
        require(v.size() == 1, std::string(name) + " must be a single element");
        validate(G, v.front());
        return v.front();
    };
    const GroupElement g = single("g");
    std::vector<std::pair<GroupElement, int>> items;
    auto add = [&](const GroupElement& x, int k) {
        if (k > 0) items.emplace_back(x, k);
    };
    if (!is_cyclic_s_label(w.label)) {
        require(order_of(G, g) == n, "g must have order n");
        switch (w.label) {
            case FamilyLabel::cyc_eta_1: add(g, n - 1); break;
            case FamilyLabel::cyc_eta_2a: add(g, n - 2); break;
            default:
                add(g, n - 3);
                add(combine(G, g, g), 1);
        }
    } else {
        const GroupElement h = single("h");
        require(order_of(G, combine(G, g, h, -1)) == n, "g - h must have order n");
        add(g, n - 1);
        switch (w.label) {
            case FamilyLabel::cyc_s_1: add(h, n - 1); break;
            case FamilyLabel::cyc_s_2a: add(h, n - 2); break;
            default:
                add(h, n - 3);
                add(combine(G, combine(G, h, h), g, -1), 1);
        }
    }
    return Sequence(G, items);
}

FamilyWitness make_witness(FamilyLabel label, const Basis& B,
                           std::vector<std::pair<std::string, ParamValue>> params) {
    FamilyWitness w{label, B, std::move(params), std::nullopt};
    return w;
}

// Multisets of size k over the four elements of <f1, f2>, as sorted
// element lists, in lexicographic order of the count vector.
std::vector<std::vector<GroupElement>> d_lists(const GroupSpec& G, const Basis& B, long k) {
    std::array<GroupElement, 4> pool;
    for (int c = 0; c < 4; ++c) {
        const std::array<long, 3> coeff{c >> 1 & 1, c & 1, 0};
        pool[c] = basis_combination(G, B, coeff);
    }
    std::vector<std::vector<GroupElement>> out;
    for (long c0 = k; c0 >= 0; --c0)
        for (long c1 = k - c0; c1 >= 0; --c1)
            for (long c2 = k - c0 - c1; c2 >= 0; --c2) {
                const long c3 = k - c0 - c1 - c2;
                std::vector<GroupElement> d;
                d.insert(d.end(), c0, pool[0]);
                d.insert(d.end(), c1, pool[1]);
                d.insert(d.end(), c2, pool[2]);
                d.insert(d.end(), c3, pool[3]);
                std::sort(d.begin(), d.end());
                out.push_back(std::move(d));
            }
    return out;
}

EquivalenceMode family_mode(FamilyLabel label, const GroupSpec& G) {
    if (translation_closed(label))
        return EquivalenceMode::automorphism_and_translation(LengthSet::exact_exponent(), G);
    return EquivalenceMode::automorphism();
}

}  // namespace

std::string_view label_name(FamilyLabel label) {
    for (const auto& [l, name] : kLabelNames)
        if (l == label) return name;
    throw Error("unknown family label");
}

FamilyLabel parse_label(std::string_view name) {
    for (const auto& [l, s] : kLabelNames)
        if (s == name) return l;
    throw ParameterOutOfRange("unknown family label '" + std::string(name) + "'");
}

std::vector<FamilyLabel> all_labels() {
    std::vector<FamilyLabel> out;
    for (const auto& entry : kLabelNames) out.push_back(entry.label);
    return out;
}

std::string_view problem_name(Problem p) {
    for (const auto& [q, name] : kProblemNames)
        if (q == p) return name;
    throw Error("unknown problem");
}

Problem parse_problem(std::string_view name) {
    for (const auto& [p, s] : kProblemNames)
        if (s == name) return p;
    throw ParameterOutOfRange("unknown problem '" + std::string(name) + "'");
}

std::vector<FamilyLabel> labels_for(Problem p, const GroupSpec& G) {
    using F = FamilyLabel;
    switch (p) {
        case Problem::davenport_max:
            rank3_n(G);
            return {F::D1, F::D2, F::D3, F::D4, F::D5, F::D6};
        case Problem::eta_extremal:
            if (rank3_n(G) == 1) return {F::eta_n1};
            return {F::eta1, F::eta2, F::eta3};
        case Problem::s_extremal:
            if (rank3_n(G) == 1) return {F::s_n1};
            return {F::s1, F::s2, F::s3};
        case Problem::cyclic_eta:
            cyclic_n(G);
            return {F::cyc_eta_1, F::cyc_eta_2a, F::cyc_eta_2b};
        case Problem::cyclic_s:
            cyclic_n(G);
            return {F::cyc_s_1, F::cyc_s_2a, F::cyc_s_2b};
    }
    throw Error("unknown problem");
}

long FamilyWitness::int_param(std::string_view name) const {
    for (const auto& [key, value] : params)
        if (key == name) {
            if (const long* x = std::get_if<long>(&value)) return *x;
            throw ParameterOutOfRange("parameter " + key + " must be an integer");
        }
    throw ParameterOutOfRange("missing parameter " + std::string(name));
}

const std::vector<GroupElement>& FamilyWitness::element_param(std::string_view name) const {
    for (const auto& [key, value] : params)
        if (key == name) {
            if (const auto* x = std::get_if<std::vector<GroupElement>>(&value)) return *x;
            throw ParameterOutOfRange("parameter " + key + " must be an element list");
        }
    throw ParameterOutOfRange("missing parameter " + std::string(name));
}

bool FamilyWitness::has_param(std::string_view name) const {
    return std::any_of(params.begin(), params.end(), [&](const auto& p) { return p.first == name; });
}

Sequence generate(const FamilyWitness& witness, const GroupSpec& G) {
    Sequence S = is_cyclic_label(witness.label) ? generate_cyclic(witness, G) : generate_rank3(witness, G);
    if (!witness.translation) return S;
    if (!translation_closed(witness.label))
        throw PreconditionViolation(std::string(label_name(witness.label)) + " takes no translation");
    validate(G, *witness.translation);
    return translate(S, *witness.translation);
}

Basis standard_basis(const GroupSpec& G) {
    if (normalize_orders(G.orders()).size() == 1) {
        const int n = cyclic_n(G);
        for (int i = 0; i < G.size(); ++i)
            if (G.order(i) == n) return Basis{{G.element(i)}, {n}};
    }
    const int n = rank3_n(G);
    if (G.orders() == std::vector<int>{2, 2, 2 * n}) {
        Basis B;
        for (int i = 0; i < 3; ++i) {
            GroupElement e{{0, 0, 0}};
            e.residues[i] = 1;
            B.generators.push_back(e);
        }
        B.declared_orders = {2, 2, 2 * n};
        return B;
    }
    return enumerate_bases(G, {2, 2, 2 * n}).front();
}

std::vector<FamilyWitness> family_witnesses(const GroupSpec& G, FamilyLabel label) {
    using F = FamilyLabel;
    std::vector<FamilyWitness> out;
    auto push = [&](const Basis& B, std::vector<std::pair<std::string, ParamValue>> params) {
        out.push_back(make_witness(label, B, std::move(params)));
    };
    if (is_cyclic_label(label)) {
        const int n = cyclic_n(G);
        for (int gi = 0; gi < G.size(); ++gi) {
            const GroupElement g = G.element(gi);
            if (!is_cyclic_s_label(label)) {
                if (G.order(gi) == n) push(Basis{{g}, {n}}, {{"g", std::vector{g}}});
                continue;
            }
            for (int hi = 0; hi < G.size(); ++hi) {
                const int diff = G.add(gi, G.neg(hi));
                if (G.order(diff) != n) continue;
                push(Basis{{G.element(diff)}, {n}}, {{"g", std::vector{g}}, {"h", std::vector{G.element(hi)}}});
            }
        }
        return out;
    }

    const long n = rank3_n(G);
    const long m = 2 * n;
    const Basis B = standard_basis(G);
    if ((label == F::eta_n1 || label == F::s_n1) && n != 1) return out;
    if ((is_eta_label(label) || is_s_label(label)) && label != F::eta_n1 && label != F::s_n1 && n < 2)
        return out;
    auto pairs_desc = [&](auto&& fn) {  // a >= b, both in [2, n-1]
        for (long a = 2; a <= n - 1; ++a)
            for (long b = 2; b <= a; ++b) fn(a, b);
    };
    switch (label) {
        case F::D1:
            for (long v1 = 1; v1 <= m + 1; v1 += 2)
                for (long v2 = v1; v1 + 2 * v2 <= m + 1; v2 += 2) {
                    const long v3 = m + 1 - v1 - v2;
                    if (v3 >= v2 && v3 % 2 == 1) push(B, {{"v3", v3}, {"v2", v2}, {"v1", v1}});
                }
            break;
        case F::D2:
            for (long v2 = 1; 2 * v2 <= m; v2 += 2)
                for (long a = 2; a <= n - 1; ++a) push(B, {{"v3", m - v2}, {"v2", v2}, {"a", a}});
            break;
        case F::D3:
            for (long a = 2; a <= n - 1; ++a)
                for (long b = a; b <= n - 1; ++b) {
                    const long c = m + 1 - a - b;
                    if (c >= b && c >= 2 && c <= m - 3 && c != n && c != n + 1)
                        push(B, {{"a", a}, {"b", b}, {"c", c}});
                }
            break;
        case F::D4:
        case F::eta1:
            for (long v = 0; v <= n - 1; ++v)
                for (long a = 2; a <= n - 1; ++a) push(B, {{"v", v}, {"a", a}});
            break;
        case F::D5:
        case F::eta2:
        case F::s2:
            pairs_desc([&](long a, long b) { push(B, {{"a", a}, {"b", b}}); });
            break;
        case F::D6:
        case F::eta3: {
            const long len = label == F::D6 ? m : m + 1;
            for (auto& d : d_lists(G, B, len)) {
                FamilyWitness w = make_witness(label, B, {{"d", d}});
                try {
                    generate(w, G);
                } catch (const ParameterOutOfRange&) {
                    continue;
                }
                out.push_back(std::move(w));
            }
            break;
        }
        case F::s1:
            for (long alpha = 0; alpha <= n - 1; ++alpha)
                for (long beta = 0; beta <= n - 1; ++beta)
                    for (long a = 2; a <= n - 1; ++a) push(B, {{"alpha", alpha}, {"beta", beta}, {"a", a}});
            break;
        case F::s3: {
            const auto lists = d_lists(G, B, m + 1);
            for (long alpha = 0; alpha <= n - 1; ++alpha)
                for (long beta = 0; alpha + beta <= n - 1; ++beta)
                    for (const auto& d : lists) {
                        FamilyWitness w = make_witness(
                            label, B, {{"alpha", alpha}, {"beta", beta}, {"gamma", n - 1 - alpha - beta}, {"d", d}});
                        try {
                            generate(w, G);
                        } catch (const ParameterOutOfRange&) {
                            continue;
                        }
                        out.push_back(std::move(w));
                    }
            break;
        }
        case F::eta_n1:
        case F::s_n1:
            push(B, {});
            break;
        default:
            break;
    }
    return out;
}

std::vector<Sequence> enumerate_family(const GroupSpec& G, FamilyLabel label) {
    const auto witnesses = family_witnesses(G, label);
    const SymmetryGroup sym(G, family_mode(label, G));
    std::vector<Sequence> out;
    for (const auto& w : witnesses) out.push_back(sym.canonical(generate(w, G)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Classifier::Classifier(const GroupSpec& G, Problem problem) : group_(G), problem_(problem) {
    const auto labels = labels_for(problem, G);
    const bool cyclic = problem == Problem::cyclic_eta || problem == Problem::cyclic_s;
    const long n = cyclic ? cyclic_n(G) : rank3_n(G);
    switch (problem) {
        case Problem::davenport_max: lengths_ = {2 * n + 2}; break;
        case Problem::eta_extremal: lengths_ = {n == 1 ? 7 : 2 * n + 3}; break;
        case Problem::s_extremal: lengths_ = {n == 1 ? 8 : 4 * n + 2}; break;
        case Problem::cyclic_eta: lengths_ = {n - 2, n - 1}; break;
        case Problem::cyclic_s: lengths_ = {2 * n - 3, 2 * n - 2}; break;
    }
    for (auto label : labels)
        for (auto& w : family_witnesses(G, label)) members_.push_back({generate(w, G).flat_indices(), std::move(w)});
    std::stable_sort(members_.begin(), members_.end(),
                     [](const Member& a, const Member& b) { return a.key < b.key; });
    if (cyclic) return;

    const Basis B0 = standard_basis(G);
    bases_ = enumerate_bases(G, {2, 2, static_cast<int>(2 * n)});
    for (const auto& B : bases_) {
        std::vector<int> to(G.size(), -1), from(G.size(), -1);
        for (long c1 = 0; c1 < 2; ++c1)
            for (long c2 = 0; c2 < 2; ++c2)
                for (long c3 = 0; c3 < 2 * n; ++c3) {
                    const std::array<long, 3> c{c1, c2, c3};
                    const int x = G.index_of(basis_combination(G, B, c));
                    const int y = G.index_of(basis_combination(G, B0, c));
                    to[x] = y;
                    from[y] = x;
                }
        to_standard_.push_back(std::move(to));
        from_standard_.push_back(std::move(from));
    }
}

std::vector<FamilyWitness> Classifier::lookup(const std::vector<int>& key) const {
    std::vector<FamilyWitness> out;
    auto it = std::lower_bound(members_.begin(), members_.end(), key,
                               [](const Member& m, const std::vector<int>& k) { return m.key < k; });
    for (; it != members_.end() && it->key == key; ++it) out.push_back(it->witness);
    return out;
}

std::vector<FamilyWitness> Classifier::classify(const Sequence& S, bool first_only) const {
    if (!(S.group() == group_)) throw PreconditionViolation("sequence is over a different group");
    if (std::find(lengths_.begin(), lengths_.end(), S.length()) == lengths_.end())
        throw PreconditionViolation("length " + std::to_string(S.length()) + " is not extremal for " +
                                    std::string(problem_name(problem_)) + " over " + group_.to_string());
    const auto flat = S.flat_indices();
    if (bases_.empty()) {
        auto out = lookup(flat);
        if (first_only && out.size() > 1) out.resize(1);
        return out;
    }

    const GroupSpec& G = group_;
    const bool translate_too = problem_ == Problem::s_extremal;
    std::vector<FamilyWitness> out;
    std::vector<int> key(flat.size());
    for (std::size_t b = 0; b < bases_.size(); ++b) {
        const auto& to = to_standard_[b];
        const auto& from = from_standard_[b];
        for (int f = 0; f < (translate_too ? G.size() : 1); ++f) {
            const int minus_f = G.neg(f);
            for (std::size_t i = 0; i < flat.size(); ++i) key[i] = to[G.add(flat[i], minus_f)];
            std::sort(key.begin(), key.end());
            for (auto w : lookup(key)) {
                w.basis = bases_[b];
                for (auto& [name, value] : w.params)
                    if (auto* elems = std::get_if<std::vector<GroupElement>>(&value)) {
                        for (auto& e : *elems) e = G.element(from[G.index_of(e)]);
                        std::sort(elems->begin(), elems->end());
                    }
                if (translate_too) w.translation = G.element(f);
                out.push_back(std::move(w));
                if (first_only) return out;
            }
        }
    }
    return out;
}

std::vector<FamilyWitness> classify(const Sequence& S, Problem problem, bool first_only) {
    return Classifier(S.group(), problem).classify(S, first_only);
}

std::optional<CTDecomposition> decompose_CT(const Sequence& S) {
    const auto& G = S.group();
    auto n = c2c2c2n_parameter(G);
    if (!n || *n < 2) throw PreconditionViolation("decomposition needs C2 + C2 + C2n with n >= 2");
    if (S.length() != 4L * *n + 2 || has_zero_sum(S, LengthSet::exact_exponent()))
        throw PreconditionViolation("sequence is not s-extremal");

    std::vector<int> involutions;
    for (int i = 0; i < G.size(); ++i)
        if (G.order(i) == 2) involutions.push_back(i);

    for (int f = 0; f < G.size(); ++f) {
        const Sequence shifted = translate(S, negate(G, G.element(f)));
        const int zero_count = shifted.multiplicity(0);
        if (zero_count == 0) continue;
        for (std::size_t p = 0; p < involutions.size(); ++p)
            for (std::size_t q = p + 1; q < involutions.size(); ++q) {
                const int f1 = involutions[p], f2 = involutions[q];
                for (long u = *n - 1; u >= 0; --u) {
                    if (2 * u + 1 > zero_count) continue;
                    for (long v = *n - 1 - u; v >= 0; --v) {
                        const long w = *n - 1 - u - v;
                        if (2 * v > shifted.multiplicity(f1) || 2 * w > shifted.multiplicity(f2)) continue;
                        std::vector<int> counts(G.size(), 0);
                        counts[0] = static_cast<int>(2 * u + 1);
                        counts[f1] = static_cast<int>(2 * v);
                        counts[f2] = static_cast<int>(2 * w);
                        Sequence C = Sequence::from_counts(G, counts);
                        Sequence T = divide(shifted, C);
                        if (has_zero_sum(T, LengthSet::short_lengths())) continue;
                        return CTDecomposition{G.element(f), G.element(f1), G.element(f2), u, v, w,
                                               std::move(C), std::move(T)};
                    }
                }
            }
    }
    return std::nullopt;
}

FilterLemmaCheck check_filter_lemma(const Sequence& S, const Sequence& c_prime, const GroupElement& f,
                                    long eta) {
    if (!divides(c_prime, S)) throw NotADivisor("C' does not divide S");
    const auto& G = S.group();
    validate(G, f);
    FilterLemmaCheck out;
    const long e = G.exponent();
    const int k = static_cast<int>(c_prime.length());
    bool hyp = S.length() == eta + e - 1 && k >= (e - 1) / 2;
    if (hyp && k > 0) {
        SumTable table(G, k);
        for (const auto& [idx, mult] : c_prime.entries()) table.push(idx, mult);
        const int fi = G.index_of(f);
        for (int j = 1; j <= k && hyp; ++j) hyp = table.layer(j).test(G.multiple(fi, j));
    }
    out.hypotheses_hold = hyp;
    out.conclusion_holds = has_zero_sum(S, LengthSet::exact_exponent());
    return out;
}

HeightProfile height_profile(std::span<const Sequence> sequences) {
    if (sequences.empty()) throw PreconditionViolation("height profile of an empty stream");
    const Sequence* best = nullptr;
    int best_height = 0;
    for (const auto& S : sequences) {
        const int h = stats(S).height;
        if (!best || h < best_height) {
            best = &S;
            best_height = h;
        }
    }
    return {best_height, *best};
}

long height_lower_bound(int n) {
    if (n < 2) throw PreconditionViolation("height bound needs n >= 2");
    switch (n % 3) {
        case 0: return (2L * n + 3) / 3;
        case 1: return (2L * n + 1) / 3;
        default: return (2L * n + 5) / 3;
    }
}

Sequence height_witness(const GroupSpec& G) {
    const long n = rank3_n(G);
    if (n < 2) throw PreconditionViolation("height witness needs n >= 2");
    long a = 0, b = 0, c = 0;
    switch (n % 3) {
        case 0: a = n / 3, b = n / 3, c = (n - 3) / 3; break;
        case 1: a = b = c = (n - 1) / 3; break;
        default: a = (n + 1) / 3, b = (n - 2) / 3, c = (n - 2) / 3; break;
    }
    const Basis B = standard_basis(G);
    Builder s(G, B, 2 * n);
    s.add(0, 0, 0, 2 * a + 1);
    s.add(1, 0, 0, 2 * b + 1);
    s.add(0, 1, 0, 2 * c + 1);
    s.add(1, 0, 1, 2 * a + 1);
    s.add(0, 1, 1, 2 * b + 1);
    s.add(1, 1, 1, 2 * c + 1);
    return s.build();
}

}  // namespace zerosum
