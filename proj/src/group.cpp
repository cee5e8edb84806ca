#include "zerosum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace zerosum {

namespace {

constexpr long kAutomorphismCandidateLimit = 50'000'000;

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::pair<int, int>> factorize(int n) {
    std::vector<std::pair<int, int>> out;
    for (int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

int ipow(int b, int e) {
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Invariant factors from a multiset of prime-power elementary divisors.
std::vector<int> invariant_factors(std::map<int, std::vector<int>> divisors_by_prime) {
    std::size_t k = 0;
    for (auto& [p, powers] : divisors_by_prime) {
        std::sort(powers.begin(), powers.end(), std::greater<>());
        k = std::max(k, powers.size());
    }
    // The largest invariant factor collects the largest power of every prime.
    std::vector<int> factors(k, 1);
    for (auto& [p, powers] : divisors_by_prime) {
        for (std::size_t i = 0; i < powers.size(); ++i) factors[k - 1 - i] *= powers[i];
    }
    return factors;
}

// Structure of a finite abelian group known only through an addition table on
// labels 0..q-1 (0 is the identity).
struct AbstractGroup {
    int q = 0;
    std::vector<int> add;  // q*q

    int sum(int a, int b) const { return add[a * q + b]; }
    int mul(int a, long k) const {
        int r = 0;
        for (long i = 0; i < k; ++i) r = sum(r, a);
        return r;
    }
    int order(int a) const {
        int k = 1;
        for (int x = a; x != 0; x = sum(x, a)) ++k;
        return k;
    }
};

std::vector<int> abstract_invariant_factors(const AbstractGroup& Q) {
    std::map<int, std::vector<int>> divisors;
    for (auto [p, e] : factorize(Q.q)) {
        // count[k] = |{x : p^k x = 0}| = p^(sum_i min(k, e_i)).
        std::vector<int> log_count(e + 2, 0);
        for (int k = 1; k <= e + 1; ++k) {
            int pk = ipow(p, k);
            int c = 0;
            for (int x = 0; x < Q.q; ++x)
                if (Q.mul(x, pk) == 0) ++c;
            int lg = 0;
            while (c > 1) {
                c /= p;
                ++lg;
            }
            log_count[k] = lg;
        }
        // Number of cyclic p-factors of exponent >= k.
        std::vector<int> at_least(e + 2, 0);
        for (int k = 1; k <= e + 1; ++k) at_least[k] = log_count[k] - log_count[k - 1];
        for (int k = 1; k <= e; ++k) {
            int exactly = at_least[k] - at_least[k + 1];
            for (int i = 0; i < exactly; ++i) divisors[p].push_back(ipow(p, k));
        }
    }
    return invariant_factors(std::move(divisors));
}

}  // namespace

std::string to_string(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < g.residues.size(); ++i) os << (i ? "," : "") << g.residues[i];
    os << ')';
    return os.str();
}

GroupSpec::GroupSpec(std::vector<int> orders, std::size_t enumeration_cap)
    : orders_(std::move(orders)) {
    if (orders_.empty()) throw InvalidGroup("group needs at least one cyclic factor");
    for (int m : orders_) {
        if (m < 2) throw InvalidGroup("cyclic factor orders must be >= 2");
        exponent_ = std::lcm(exponent_, static_cast<long>(m));
        cardinality_ *= m;
        if (cardinality_ > (1L << 40)) throw InvalidGroup("group too large");
    }
    if (static_cast<std::size_t>(cardinality_) > enumeration_cap || cardinality_ > 65535) return;

    auto t = std::make_shared<Tables>();
    const int n = static_cast<int>(cardinality_);
    const std::size_t k = orders_.size();
    t->n = n;
    t->residues.resize(static_cast<std::size_t>(n) * k);
    for (int idx = 0; idx < n; ++idx) {
        int rest = idx;
        for (std::size_t i = k; i-- > 0;) {
            t->residues[idx * k + i] = rest % orders_[i];
            rest /= orders_[i];
        }
    }
    auto encode = [&](const int* r) {
        int idx = 0;
        for (std::size_t i = 0; i < k; ++i) idx = idx * orders_[i] + r[i];
        return idx;
    };
    t->add.resize(static_cast<std::size_t>(n) * n);
    t->neg.resize(n);
    std::vector<int> buf(k);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i)
                buf[i] = (t->residues[a * k + i] + t->residues[b * k + i]) % orders_[i];
            t->add[a * n + b] = static_cast<std::uint16_t>(encode(buf.data()));
        }
        for (std::size_t i = 0; i < k; ++i)
            buf[i] = (orders_[i] - t->residues[a * k + i]) % orders_[i];
        t->neg[a] = encode(buf.data());
    }
    t->order.resize(n);
    for (int a = 0; a < n; ++a) {
        long o = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const int r = t->residues[a * k + i];
            o = std::lcm(o, static_cast<long>(orders_[i] / std::gcd(orders_[i], r)));
        }
        t->order[a] = static_cast<int>(o);
    }
    tables_ = std::move(t);
}

void GroupSpec::require_enumerable(std::string_view what) const {
    if (!enumerable()) {
        throw CapExceeded(std::string(what) + ": group " + to_string() +
                          " exceeds the enumeration cap");
    }
}

int GroupSpec::index_of(const GroupElement& g) const {
    require_enumerable("index_of");
    validate(*this, g);
    int idx = 0;
    for (std::size_t i = 0; i < arity(); ++i) idx = idx * orders_[i] + g.residues[i];
    return idx;
}

GroupElement GroupSpec::element(int index) const {
    require_enumerable("element");
    auto r = residues(index);
    return GroupElement{std::vector<int>(r.begin(), r.end())};
}

int GroupSpec::multiple(int a, long k) const {
    const long o = order(a);
    long m = mod(k, o);
    int r = 0;
    // Double-and-add keeps this cheap for large k.
    int base = a;
    while (m > 0) {
        if (m & 1) r = add(r, base);
        base = add(base, base);
        m >>= 1;
    }
    return r;
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < orders_.size(); ++i) os << (i ? "," : "") << orders_[i];
    os << ']';
    return os.str();
}

void validate(const GroupSpec& G, const GroupElement& g) {
    if (g.residues.size() != G.arity()) {
        throw ArityMismatch("element " + to_string(g) + " does not match group " + G.to_string());
    }
    for (std::size_t i = 0; i < G.arity(); ++i) {
        if (g.residues[i] < 0 || g.residues[i] >= G.orders()[i]) {
            throw ArityMismatch("element " + to_string(g) + " is not reduced in group " +
                                G.to_string());
        }
    }
}

GroupElement combine(const GroupSpec& G, const GroupElement& a, const GroupElement& b, long k) {
    validate(G, a);
    validate(G, b);
    GroupElement out{std::vector<int>(G.arity())};
    for (std::size_t i = 0; i < G.arity(); ++i) {
        const long m = G.orders()[i];
        out.residues[i] =
            static_cast<int>(mod(a.residues[i] + mod(k, m) * b.residues[i], m));
    }
    return out;
}

GroupElement negate(const GroupSpec& G, const GroupElement& a) {
    return combine(G, G.zero_element(), a, -1);
}

long order_of(const GroupSpec& G, const GroupElement& a) {
    validate(G, a);
    long o = 1;
    for (std::size_t i = 0; i < G.arity(); ++i) {
        const long m = G.orders()[i];
        o = std::lcm(o, m / std::gcd(m, static_cast<long>(a.residues[i])));
    }
    return o;
}

std::vector<int> normalize_orders(const std::vector<int>& orders) {
    std::map<int, std::vector<int>> divisors;
    for (int m : orders) {
        if (m < 2) throw InvalidGroup("cyclic factor orders must be >= 2");
        for (auto [p, e] : factorize(m)) divisors[p].push_back(ipow(p, e));
    }
    return invariant_factors(std::move(divisors));
}

std::optional<int> c2c2c2n_parameter(const GroupSpec& G) {
    auto inv = normalize_orders(G.orders());
    if (inv.size() == 3 && inv[0] == 2 && inv[1] == 2 && inv[2] % 2 == 0) return inv[2] / 2;
    return std::nullopt;
}

GroupElement basis_combination(const GroupSpec& G, const Basis& basis,
                               std::span<const long> coefficients) {
    if (coefficients.size() != basis.generators.size())
        throw ArityMismatch("coefficient count does not match basis size");
    GroupElement acc = G.zero_element();
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        acc = combine(G, acc, basis.generators[i], coefficients[i]);
    return acc;
}

namespace {

// Number of distinct elements sum c_i g_i with 0 <= c_i < orders[i]; equals
// the product of the orders iff the map from the abstract direct sum is
// injective.
bool spans_bijectively(const GroupSpec& G, std::span<const int> gens, std::span<const int> orders,
                       std::vector<char>& seen) {
    long product = 1;
    for (int o : orders) product *= o;
    if (product != G.cardinality()) return false;
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> coeff(gens.size(), 0);
    int current = 0;
    long count = 0;
    while (true) {
        if (seen[current]) return false;
        seen[current] = 1;
        ++count;
        // Odometer over coefficients; ord(gens[i]) divides orders[i], so one
        // more addition at the wrap returns that digit to zero.
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            current = G.add(current, gens[i]);
            if (++coeff[i] < orders[i]) break;
            coeff[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return count == G.cardinality();
}

}  // namespace

bool is_basis(const GroupSpec& G, const Basis& basis) {
    G.require_enumerable("is_basis");
    if (basis.generators.size() != basis.declared_orders.size()) return false;
    std::vector<int> gens;
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
        if (order_of(G, basis.generators[i]) != basis.declared_orders[i]) return false;
        gens.push_back(G.index_of(basis.generators[i]));
    }
    std::vector<char> seen(G.size());
    return spans_bijectively(G, gens, basis.declared_orders, seen);
}

std::vector<Basis> enumerate_bases(const GroupSpec& G, const std::vector<int>& profile) {
    G.require_enumerable("enumerate_bases");
    std::vector<Basis> out;
    long product = 1;
    for (int o : profile) {
        if (o < 1) throw ParameterOutOfRange("order profile entries must be positive");
        product *= o;
    }
    if (product != G.cardinality() || profile.empty()) return out;

    std::vector<std::vector<int>> candidates(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
        for (int x = 0; x < G.size(); ++x)
            if (G.order(x) == profile[i]) candidates[i].push_back(x);

    std::vector<int> chosen(profile.size());
    std::vector<char> seen(G.size());
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == profile.size()) {
            if (spans_bijectively(G, chosen, profile, seen)) {
                Basis b;
                for (int x : chosen) b.generators.push_back(G.element(x));
                b.declared_orders = profile;
                out.push_back(std::move(b));
            }
            return;
        }
        for (int x : candidates[depth]) {
            chosen[depth] = x;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    return out;
}

std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& G) {
    G.require_enumerable("enumerate_automorphisms");
    const std::size_t k = G.arity();
    const int n = G.size();

    // Image of the i-th standard generator must be killed by orders[i].
    std::vector<std::vector<int>> candidates(k);
    long total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (int x = 0; x < n; ++x)
            if (G.orders()[i] % G.order(x) == 0) candidates[i].push_back(x);
        total *= static_cast<long>(candidates[i].size());
        if (total > kAutomorphismCandidateLimit)
            throw CapExceeded("enumerate_automorphisms: too many candidate endomorphisms");
    }

    std::vector<Automorphism> out;
    std::optional<std::size_t> identity_pos;
    std::vector<int> images(k);
    std::vector<char> seen(n);
    Automorphism table(n);
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int x = 0; x < n; ++x) {
                auto r = G.residues(x);
                int y = 0;
                for (std::size_t i = 0; i < k; ++i) y = G.add(y, G.multiple(images[i], r[i]));
                if (seen[y]) return;
                seen[y] = 1;
                table[x] = y;
            }
            bool is_identity = true;
            for (int x = 0; x < n && is_identity; ++x) is_identity = table[x] == x;
            if (is_identity) identity_pos = out.size();
            out.push_back(table);
            return;
        }
        for (int x : candidates[depth]) {
            images[depth] = x;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    if (identity_pos && *identity_pos != 0) {
        std::rotate(out.begin(), out.begin() + static_cast<long>(*identity_pos),
                    out.begin() + static_cast<long>(*identity_pos) + 1);
    }
    return out;
}

GroupElement SplitData::project(const GroupSpec& G, const GroupElement& g) const {
    return quotient_spec.element(projection[G.index_of(g)]);
}

SplitData canonical_split(const GroupSpec& G) {
    G.require_enumerable("canonical_split");
    auto n = c2c2c2n_parameter(G);
    if (!n) {
        throw UnsupportedShape("canonical_split: " + G.to_string() +
                               " is not of the form C2 + C2 + C2n; pass a subgroup");
    }
    const auto& o = G.orders();
    const bool literal = o.size() == 3 && o[0] == 2 && o[1] == 2 && o[2] == 2 * *n;
    if (!literal) {
        std::vector<GroupElement> doubles;
        for (int x = 0; x < G.size(); ++x) doubles.push_back(G.element(G.add(x, x)));
        return canonical_split(G, doubles);
    }
    SplitData split{{}, GroupSpec({2, 2, 2}), {}};
    for (int c = 0; c < o[2]; c += 2) split.subgroup_elements.push_back(GroupElement{{0, 0, c}});
    split.projection.resize(G.size());
    for (int x = 0; x < G.size(); ++x) {
        auto r = G.residues(x);
        split.projection[x] = r[0] * 4 + r[1] * 2 + r[2] % 2;
    }
    return split;
}

SplitData canonical_split(const GroupSpec& G, const std::vector<GroupElement>& subgroup_generators) {
    G.require_enumerable("canonical_split");
    const int n = G.size();
    std::vector<char> in_h(n, 0);
    in_h[0] = 1;
    std::vector<int> members{0};
    for (const auto& gen : subgroup_generators) {
        const int g = G.index_of(gen);
        // Closure under adding g; members grows as new cosets of <g> appear.
        for (std::size_t i = 0; i < members.size(); ++i) {
            int y = G.add(members[i], g);
            if (!in_h[y]) {
                in_h[y] = 1;
                members.push_back(y);
            }
        }
    }
    std::sort(members.begin(), members.end());

    // Coset label = smallest index in the coset.
    std::vector<int> coset_of(n, -1);
    std::vector<int> reps;
    for (int x = 0; x < n; ++x) {
        if (coset_of[x] != -1) continue;
        const int label = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : members) coset_of[G.add(x, h)] = label;
    }
    AbstractGroup Q;
    Q.q = static_cast<int>(reps.size());
    Q.add.resize(static_cast<std::size_t>(Q.q) * Q.q);
    for (int a = 0; a < Q.q; ++a)
        for (int b = 0; b < Q.q; ++b) Q.add[a * Q.q + b] = coset_of[G.add(reps[a], reps[b])];

    SplitData split{{}, GroupSpec({2}), {}};
    for (int h : members) split.subgroup_elements.push_back(G.element(h));

    if (Q.q == 1) throw UnsupportedShape("canonical_split: subgroup is all of G");
    auto profile = abstract_invariant_factors(Q);
    split.quotient_spec = GroupSpec(profile);

    // Find cosets with the profile orders that map bijectively.
    std::vector<int> chosen(profile.size());
    std::vector<int> coords_to_label;
    bool found = false;
    auto try_basis = [&]() {
        std::vector<int> label_of(split.quotient_spec.size(), -1);
        std::vector<char> hit(Q.q, 0);
        for (int y = 0; y < split.quotient_spec.size(); ++y) {
            auto r = split.quotient_spec.residues(y);
            int acc = 0;
            for (std::size_t i = 0; i < profile.size(); ++i) acc = Q.sum(acc, Q.mul(chosen[i], r[i]));
            if (hit[acc]) return false;
            hit[acc] = 1;
            label_of[y] = acc;
        }
        coords_to_label = std::move(label_of);
        return true;
    };
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (found) return;
        if (depth == profile.size()) {
            found = try_basis();
            return;
        }
        for (int c = 0; c < Q.q && !found; ++c) {
            if (Q.order(c) != profile[depth]) continue;
            chosen[depth] = c;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
    std::vector<int> label_to_coords(Q.q);
    for (int y = 0; y < static_cast<int>(coords_to_label.size()); ++y) label_to_coords[coords_to_label[y]] = y;
    split.projection.resize(n);
    for (int x = 0; x < n; ++x) split.projection[x] = label_to_coords[coset_of[x]];
    return split;
}

}  // namespace zerosum
