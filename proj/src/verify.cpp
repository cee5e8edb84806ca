#include "zerosum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include "zerosum/engine.hpp"
#include "zerosum/families.hpp"

namespace zerosum {

namespace {

Json sequence_list(std::vector<Sequence> seqs) {
    std::sort(seqs.begin(), seqs.end());
    Json out = Json::array();
    for (const auto& s : seqs) out.push_back(to_json(s));
    return out;
}

std::vector<Sequence> closure(const GroupSpec& G, Problem p) {
    std::set<Sequence> all;
    for (auto label : labels_for(p, G))
        for (auto& s : enumerate_family(G, label)) all.insert(std::move(s));
    return {all.begin(), all.end()};
}

std::size_t count_classified(const Classifier& cl, const std::vector<Sequence>& seqs) {
    return static_cast<std::size_t>(std::count_if(seqs.begin(), seqs.end(), [&](const Sequence& s) {
        return !cl.classify(s, true).empty();
    }));
}

EquivalenceMode affine(const GroupSpec& G) {
    return EquivalenceMode::automorphism_and_translation(LengthSet::exact_exponent(), G);
}

void paper_suite(VerifyReport& r, const VerifyOptions& o) {
    const int n = o.n;
    if (n < 1) throw ParameterOutOfRange("paper suite needs n >= 1");
    const GroupSpec G({2, 2, 2 * n});
    const long exp = 2L * n;

    const auto dav = davenport_constant(G, o.search);
    r.node_counts["davenport"] = dav.node_count;
    const auto eta_run = search_zero_sum_free(G, LengthSet::short_lengths(), EquivalenceMode::automorphism(), o.search);
    r.node_counts["eta"] = eta_run.nodes;
    const auto s_run = search_zero_sum_free(G, LengthSet::exact_exponent(), affine(G), o.search);
    r.node_counts["s"] = s_run.nodes;
    const long eta = eta_run.longest + 1;
    const long s = s_run.longest + 1;

    r.add("D", "D(G) = 2n + 2", 2L * n + 2, dav.value);
    r.add("D-minimal", "longest minimal zero-sum length equals D(G)", true, dav.lengths_agree);
    r.add("eta", "eta(G) = 2n + 4 (8 for n = 1)", n == 1 ? 8L : 2L * n + 4, eta);
    r.add("s", "s(G) = 4n + 3 (9 for n = 1)", n == 1 ? 9L : 4L * n + 3, s);
    r.add("s-eta-exp", "s(G) = eta(G) + exp(G) - 1", s, eta + exp - 1);
    r.add("ordering", "D(G) <= eta(G) <= s(G)", true, dav.value <= eta && eta <= s);

    const auto d_classes = enumerate_max_minimal_zero_sum(G, o.search);
    const auto& eta_classes = eta_run.longest_reps;
    const auto& s_classes = s_run.longest_reps;
    r.add("inverse-D", "maximal minimal zero-sum classes equal the closure of D1..D6",
          sequence_list(closure(G, Problem::davenport_max)), sequence_list(d_classes));
    r.add("inverse-eta", "eta-extremal classes equal the closure of the eta families",
          sequence_list(closure(G, Problem::eta_extremal)), sequence_list(eta_classes));
    r.add("inverse-s", "s-extremal classes equal the closure of the s families",
          sequence_list(closure(G, Problem::s_extremal)), sequence_list(s_classes));

    const Classifier cd(G, Problem::davenport_max), ce(G, Problem::eta_extremal), cs(G, Problem::s_extremal);
    r.add("classify-D", "every maximal minimal zero-sum class has a witness", d_classes.size(),
          count_classified(cd, d_classes));
    r.add("classify-eta", "every eta-extremal class has a witness", eta_classes.size(),
          count_classified(ce, eta_classes));
    r.add("classify-s", "every s-extremal class has a witness", s_classes.size(), count_classified(cs, s_classes));

    std::size_t sound = 0, members = 0;
    for (auto label : labels_for(Problem::davenport_max, G))
        for (const auto& S : enumerate_family(G, label)) {
            ++members;
            sound += S.length() == dav.value && is_minimal_zero_sum(S);
        }
    for (auto label : labels_for(Problem::eta_extremal, G))
        for (const auto& S : enumerate_family(G, label)) {
            ++members;
            sound += S.length() == eta - 1 && !has_zero_sum(S, LengthSet::short_lengths());
        }
    for (auto label : labels_for(Problem::s_extremal, G))
        for (const auto& S : enumerate_family(G, label)) {
            ++members;
            sound += S.length() == s - 1 && !has_zero_sum(S, LengthSet::exact_exponent());
        }
    r.add("family-soundness", "every family member is extremal for its problem", members, sound);

    if (n < 2) return;
    const long bound = height_lower_bound(n);
    r.add("height-min", "minimum height over s-extremal classes attains the bound", bound,
          static_cast<long>(height_profile(s_classes).min_height));
    const Sequence W = height_witness(G);
    Json expected_w = {{"length", 4L * n + 2}, {"zero_sum_free", true}, {"height", bound}};
    Json actual_w = {{"length", W.length()},
                     {"zero_sum_free", !has_zero_sum(W, LengthSet::exact_exponent())},
                     {"height", stats(W).height}};
    r.add("height-witness", "explicit witness is s-extremal with the bound as height", expected_w, actual_w);

    std::size_t decomposed = 0;
    for (const auto& S : s_classes) decomposed += decompose_CT(S).has_value();
    r.add("decompose", "every s-extremal class splits as f + C T", s_classes.size(), decomposed);
}

// Expected subsum set: H minus the listed elements.
Json all_but(const GroupSpec& H, std::initializer_list<int> missing) {
    std::vector<int> out;
    for (int i = 0; i < H.size(); ++i)
        if (std::find(missing.begin(), missing.end(), i) == missing.end()) out.push_back(i);
    return out;
}

void cyclic_suite(VerifyReport& r, const VerifyOptions& o) {
    const int n = o.n;
    if (n < 3) throw ParameterOutOfRange("cyclic suite needs n >= 3");
    const GroupSpec H({n});
    const Classifier ce(H, Problem::cyclic_eta), cs(H, Problem::cyclic_s);
    auto idx = [&](const std::vector<GroupElement>& v) { return H.index_of(v.front()); };

    struct Case {
        std::string id;
        Problem problem;
        int length;
    };
    const std::vector<Case> cases{{"eta-1", Problem::cyclic_eta, n - 1},
                                  {"eta-2", Problem::cyclic_eta, n - 2},
                                  {"s-1", Problem::cyclic_s, 2 * n - 2},
                                  {"s-2", Problem::cyclic_s, 2 * n - 3}};
    for (const auto& c : cases) {
        const bool s_case = c.problem == Problem::cyclic_s;
        const auto L = s_case ? LengthSet::exact_exponent() : LengthSet::any();
        const auto mode = s_case ? affine(H) : EquivalenceMode::automorphism();
        const auto reps = enumerate_zero_sum_free(H, L, mode, c.length, o.search);
        const Classifier& cl = s_case ? cs : ce;
        std::size_t matched = 0, sigma_ok = 0, sigma_checked = 0;
        for (const auto& T : reps) {
            const auto witnesses = cl.classify(T);
            matched += !witnesses.empty();
            for (const auto& w : witnesses) {
                const int g = idx(w.element_param("g"));
                Json expected;
                std::vector<int> actual;
                if (w.label == FamilyLabel::cyc_eta_2a) {
                    expected = all_but(H, {0, H.neg(g)});
                    actual = sigma_L_indices(T, LengthSet::any());
                } else if (w.label == FamilyLabel::cyc_eta_2b && n > 3) {
                    expected = all_but(H, {0});
                    actual = sigma_L_indices(T, LengthSet::any());
                } else if (w.label == FamilyLabel::cyc_s_2a) {
                    const int h = idx(w.element_param("h"));
                    expected = all_but(H, {H.neg(H.add(g, h))});
                    actual = sigma_L_indices(T, LengthSet::explicit_set({n - 2}));
                } else if (w.label == FamilyLabel::cyc_s_2b && n > 3) {
                    expected = all_but(H, {});
                    actual = sigma_L_indices(T, LengthSet::explicit_set({n - 2}));
                } else {
                    continue;
                }
                ++sigma_checked;
                sigma_ok += expected == Json(actual);
            }
        }
        std::vector<Sequence> fam;
        {
            std::set<Sequence> all;
            const SymmetryGroup sym(H, mode);
            for (auto label : labels_for(c.problem, H))
                for (const auto& w : family_witnesses(H, label)) {
                    const Sequence S = generate(w, H);
                    if (S.length() == c.length) all.insert(sym.canonical(S));
                }
            fam.assign(all.begin(), all.end());
        }
        r.add(c.id + "-classify", "every extremal class matches a printed form", reps.size(), matched);
        r.add(c.id + "-closure", "classes equal the closure of the printed forms", sequence_list(fam),
              sequence_list(reps));
        r.add(c.id + "-subsums", "printed subsum sets hold for every witness", sigma_checked, sigma_ok);
    }
}

void elementary_suite(VerifyReport& r, const VerifyOptions& o) {
    for (int rank = 2; rank <= 4; ++rank) {
        const GroupSpec G(std::vector<int>(rank, 2));
        const auto res = compute_s_L(G, LengthSet::interval(1, 3), o.search);
        r.node_counts["s13-rank" + std::to_string(rank)] = res.node_count;
        r.add("s13-rank" + std::to_string(rank), "s_[1,3](C2^r) = 1 + 2^(r-1)", 1L + (1L << (rank - 1)),
              res.value);
    }
    const GroupSpec G({2, 2, 2});
    std::size_t total = 0, unique = 0;
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 5) continue;
        std::vector<int> idx;
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1) idx.push_back(i);
        ++total;
        int zero4 = 0;
        for (int skip = 0; skip < 5; ++skip) {
            int sum = 0;
            for (int i = 0; i < 5; ++i)
                if (i != skip) sum = G.add(sum, idx[i]);
            zero4 += sum == 0;
        }
        unique += zero4 == 1;
    }
    r.add("squarefree-5", "squarefree length-5 sequences over C2^3", 56UL, total);
    r.add("unique-zero-sum-4", "each has exactly one zero-sum subsequence of length 4", total, unique);
}

LengthSet random_length_set(std::mt19937_64& rng) {
    switch (rng() % 5) {
        case 0: return LengthSet::any();
        case 1: return LengthSet::short_lengths();
        case 2: return LengthSet::exact_exponent();
        case 3: {
            const int lo = 1 + static_cast<int>(rng() % 4);
            return LengthSet::interval(lo, lo + static_cast<int>(rng() % 5));
        }
        default: {
            std::set<int> v;
            for (int i = 0; i < 3; ++i) v.insert(1 + static_cast<int>(rng() % 10));
            return LengthSet::explicit_set(v);
        }
    }
}

void oracle_suite(VerifyReport& r, const VerifyOptions& o) {
    std::mt19937_64 rng(o.seed);
    std::size_t inputs = 0, mismatches = 0;
    const std::vector<LengthSet> lens{LengthSet::any(), LengthSet::short_lengths(), LengthSet::exact_exponent(),
                                      LengthSet::interval(1, 3)};
    // Exhaustive over every multiset of length <= 6 on a few small groups.
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 2}, {6}, {2, 4}, {3, 3}}) {
        const GroupSpec G(orders);
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            const Sequence S = Sequence::from_indices(G, cur);
            for (const auto& L : lens) {
                ++inputs;
                mismatches += sigma_L(S, L) != brute_sigma_L(S, L);
            }
            if (cur.size() == 6) return;
            for (int x = from; x < G.size(); ++x) {
                cur.push_back(x);
                self(self, x);
                cur.pop_back();
            }
        };
        rec(rec, 0);
    }
    r.add("exhaustive", "sigma_L agrees with brute force on every small multiset", 0UL, mismatches);

    const std::vector<std::vector<int>> groups{{2, 2, 4}, {4, 4}, {2, 2, 2, 2}, {6, 6}, {2, 2, 8},
                                               {36},      {3, 9}, {2, 3, 5},    {5, 5}};
    std::size_t random_mismatches = 0;
    for (int t = 0; t < 1000; ++t) {
        const GroupSpec G(groups[rng() % groups.size()]);
        const int len = 1 + static_cast<int>(rng() % 16);
        std::vector<int> idx;
        for (int i = 0; i < len; ++i) idx.push_back(static_cast<int>(rng() % G.size()));
        const Sequence S = Sequence::from_indices(G, idx);
        const LengthSet L = random_length_set(rng);
        random_mismatches += sigma_L(S, L) != brute_sigma_L(S, L);
    }
    r.add("random", "sigma_L agrees with brute force on 1000 seeded inputs", 0UL, random_mismatches);
    r.node_counts["exhaustive-inputs"] = inputs;
}

void filter_suite(VerifyReport& r, const VerifyOptions& o) {
    const int n = o.n;
    if (n < 2) throw ParameterOutOfRange("filter suite needs n >= 2");
    const GroupSpec G({2, 2, 2 * n});
    const long eta = compute_s_L(G, LengthSet::short_lengths(), o.search).value;
    const long len = eta + G.exponent() - 1;
    std::vector<int> involutions;
    for (int i = 0; i < G.size(); ++i)
        if (G.order(i) == 2) involutions.push_back(i);

    std::mt19937_64 rng(o.seed);
    std::size_t held = 0, violations = 0;
    for (int t = 0; t < o.trials; ++t) {
        // C' = f + 0^(2u+1) f1^(2v) f2^(2w), padded with random elements.
        const int f = static_cast<int>(rng() % G.size());
        const int budget = static_cast<int>(rng() % n);  // u + v + w
        const int u = static_cast<int>(rng() % (budget + 1));
        const int v = static_cast<int>(rng() % (budget - u + 1));
        const int w = budget - u - v;
        const int f1 = involutions[rng() % involutions.size()];
        const int f2 = involutions[rng() % involutions.size()];
        std::vector<int> c;
        c.insert(c.end(), 2 * u + 1, f);
        c.insert(c.end(), 2 * v, G.add(f, f1));
        c.insert(c.end(), 2 * w, G.add(f, f2));
        std::vector<int> s = c;
        while (static_cast<long>(s.size()) < len) s.push_back(static_cast<int>(rng() % G.size()));
        const Sequence S = Sequence::from_indices(G, s);
        const auto res = check_filter_lemma(S, Sequence::from_indices(G, c), G.element(f), eta);
        held += res.hypotheses_hold;
        violations += res.hypotheses_hold && !res.conclusion_holds;
    }
    r.add("hypotheses", "generated instances satisfy the hypotheses", static_cast<std::size_t>(o.trials), held);
    r.add("conclusion", "no instance with the hypotheses lacks a zero-sum of length exp(G)", 0UL, violations);
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerifyReport::add(std::string id, std::string description, Json expected, Json actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(id), std::move(description), std::move(expected), std::move(actual), pass});
}

Json to_json(const VerifyReport& report) {
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(
            {{"id", c.id}, {"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    Json j;
    j["suite"] = report.suite;
    j["pass"] = report.passed();
    j["checks"] = std::move(checks);
    j["wall_time"] = report.wall_time;
    j["node_counts"] = report.node_counts;
    return j;
}

std::vector<std::string> suite_names() { return {"paper", "cyclic", "elementary", "oracle", "filter"}; }

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport r;
    r.suite = std::string(suite);
    if (suite == "paper")
        paper_suite(r, options);
    else if (suite == "cyclic")
        cyclic_suite(r, options);
    else if (suite == "elementary")
        elementary_suite(r, options);
    else if (suite == "oracle")
        oracle_suite(r, options);
    else if (suite == "filter")
        filter_suite(r, options);
    else
        throw ParameterOutOfRange("unknown suite '" + std::string(suite) + "'");
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace zerosum
