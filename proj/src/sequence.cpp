#include "zerosum/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace zerosum {

Sequence::Sequence(GroupSpec G) : group_(std::move(G)) {
    group_.require_enumerable("Sequence");
}

Sequence::Sequence(GroupSpec G, std::vector<Entry> entries, long length)
    : group_(std::move(G)), entries_(std::move(entries)), length_(length) {}

std::vector<Sequence::Entry> Sequence::normalize(std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end());
    std::vector<Entry> out;
    for (const auto& [idx, k] : raw) {
        if (k < 0) throw ParameterOutOfRange("negative multiplicity");
        if (k == 0) continue;
        if (!out.empty() && out.back().first == idx)
            out.back().second += k;
        else
            out.emplace_back(idx, k);
    }
    return out;
}

Sequence::Sequence(GroupSpec G, const std::vector<GroupElement>& elements) : Sequence(std::move(G)) {
    std::vector<Entry> raw;
    raw.reserve(elements.size());
    for (const auto& g : elements) raw.emplace_back(group_.index_of(g), 1);
    entries_ = normalize(std::move(raw));
    length_ = static_cast<long>(elements.size());
}

Sequence::Sequence(GroupSpec G, const std::vector<std::pair<GroupElement, int>>& counted)
    : Sequence(std::move(G)) {
    std::vector<Entry> raw;
    for (const auto& [g, k] : counted) raw.emplace_back(group_.index_of(g), k);
    entries_ = normalize(std::move(raw));
    for (const auto& e : entries_) length_ += e.second;
}

Sequence Sequence::from_indices(GroupSpec G, const std::vector<int>& indices) {
    G.require_enumerable("Sequence");
    std::vector<Entry> raw;
    for (int i : indices) {
        if (i < 0 || i >= G.size()) throw ArityMismatch("element index out of range");
        raw.emplace_back(i, 1);
    }
    auto entries = normalize(std::move(raw));
    return Sequence(std::move(G), std::move(entries), static_cast<long>(indices.size()));
}

Sequence Sequence::from_counts(GroupSpec G, const std::vector<int>& counts) {
    G.require_enumerable("Sequence");
    if (counts.size() != static_cast<std::size_t>(G.size()))
        throw ArityMismatch("count vector does not match group size");
    std::vector<Entry> entries;
    long length = 0;
    for (int i = 0; i < G.size(); ++i) {
        if (counts[i] < 0) throw ParameterOutOfRange("negative multiplicity");
        if (counts[i] > 0) {
            entries.emplace_back(i, counts[i]);
            length += counts[i];
        }
    }
    return Sequence(std::move(G), std::move(entries), length);
}

int Sequence::multiplicity(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
    return it != entries_.end() && it->first == index ? it->second : 0;
}

std::vector<std::pair<GroupElement, int>> Sequence::elements() const {
    std::vector<std::pair<GroupElement, int>> out;
    out.reserve(entries_.size());
    for (const auto& [idx, k] : entries_) out.emplace_back(group_.element(idx), k);
    return out;
}

std::vector<int> Sequence::flat_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (const auto& [idx, k] : entries_) out.insert(out.end(), k, idx);
    return out;
}

std::vector<int> Sequence::counts() const {
    std::vector<int> c(group_.size(), 0);
    for (const auto& [idx, k] : entries_) c[idx] = k;
    return c;
}

Sequence Sequence::with(const GroupElement& g, int k) const {
    auto raw = entries_;
    raw.emplace_back(group_.index_of(g), k);
    return Sequence(group_, normalize(std::move(raw)), length_ + k);
}

Sequence Sequence::operator*(const Sequence& other) const {
    if (!(group_ == other.group_)) throw ArityMismatch("sequences over different groups");
    auto raw = entries_;
    raw.insert(raw.end(), other.entries_.begin(), other.entries_.end());
    return Sequence(group_, normalize(std::move(raw)), length_ + other.length_);
}

bool Sequence::operator<(const Sequence& other) const {
    return flat_indices() < other.flat_indices();
}

std::string Sequence::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, k] : entries_) {
        os << (first ? "" : " ") << zerosum::to_string(group_.element(idx));
        if (k > 1) os << '^' << k;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

GroupElement sequence_sum(const Sequence& S) {
    const auto& G = S.group();
    int acc = 0;
    for (const auto& [idx, k] : S.entries()) acc = G.add(acc, G.multiple(idx, k));
    return G.element(acc);
}

SequenceStats stats(const Sequence& S) {
    SequenceStats st;
    st.length = S.length();
    st.sum = sequence_sum(S);
    for (const auto& [idx, k] : S.entries()) {
        st.height = std::max(st.height, k);
        st.support.push_back(S.group().element(idx));
        if (k > 1) st.squarefree = false;
    }
    return st;
}

Sequence translate(const Sequence& S, const GroupElement& h) {
    const auto& G = S.group();
    const int t = G.index_of(h);
    std::vector<int> c(G.size(), 0);
    for (const auto& [idx, k] : S.entries()) c[G.add(idx, t)] += k;
    return Sequence::from_counts(G, c);
}

bool divides(const Sequence& T, const Sequence& S) {
    if (!(T.group() == S.group())) throw ArityMismatch("sequences over different groups");
    for (const auto& [idx, k] : T.entries())
        if (S.multiplicity(idx) < k) return false;
    return true;
}

Sequence divide(const Sequence& S, const Sequence& T) {
    if (!divides(T, S)) throw NotADivisor(T.to_string() + " does not divide " + S.to_string());
    auto c = S.counts();
    for (const auto& [idx, k] : T.entries()) c[idx] -= k;
    return Sequence::from_counts(S.group(), c);
}

LengthSet LengthSet::explicit_set(std::set<int> values) {
    if (values.empty()) throw ParameterOutOfRange("explicit length set is empty");
    if (*values.begin() < 1) throw ParameterOutOfRange("lengths must be positive");
    LengthSet L(Kind::explicit_set);
    L.values_ = std::move(values);
    return L;
}

LengthSet LengthSet::interval(int lo, int hi) {
    if (lo < 1 || hi < lo) throw ParameterOutOfRange("length interval must satisfy 1 <= a <= b");
    LengthSet L(Kind::interval);
    L.values_ = {lo, hi};
    return L;
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParameterOutOfRange("bad length specification '" + std::string(s) + "'");
    return v;
}

}  // namespace

LengthSet LengthSet::parse(std::string_view text) {
    if (text == "exp") return exact_exponent();
    if (text == "short") return short_lengths();
    if (text == "any") return any();
    if (auto dots = text.find(".."); dots != std::string_view::npos)
        return interval(parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2)));
    std::set<int> values;
    while (!text.empty()) {
        auto comma = text.find(',');
        values.insert(parse_int(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return explicit_set(std::move(values));
}

std::string LengthSet::to_string() const {
    switch (kind_) {
        case Kind::exact_exponent: return "exp";
        case Kind::up_to_exponent: return "short";
        case Kind::any: return "any";
        case Kind::interval:
            return std::to_string(*values_.begin()) + ".." + std::to_string(*values_.rbegin());
        case Kind::explicit_set: {
            std::string s;
            for (int v : values_) s += (s.empty() ? "" : ",") + std::to_string(v);
            return s;
        }
    }
    return {};
}

std::vector<int> resolve_lengths(const LengthSet& L, const GroupSpec& G, long max_len) {
    std::vector<int> out;
    auto keep = [&](long v) {
        if (v >= 1 && v <= max_len) out.push_back(static_cast<int>(v));
    };
    switch (L.kind()) {
        case LengthSet::Kind::exact_exponent: keep(G.exponent()); break;
        case LengthSet::Kind::up_to_exponent:
            for (long v = 1; v <= G.exponent(); ++v) keep(v);
            break;
        case LengthSet::Kind::any:
            for (long v = 1; v <= max_len; ++v) keep(v);
            break;
        case LengthSet::Kind::interval:
            for (long v = *L.values().begin(); v <= *L.values().rbegin(); ++v) keep(v);
            break;
        case LengthSet::Kind::explicit_set:
            for (int v : L.values()) keep(v);
            break;
    }
    return out;
}

}  // namespace zerosum
