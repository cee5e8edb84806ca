// zs: command-line front end for the zero-sum toolkit.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "zerosum/engine.hpp"
#include "zerosum/families.hpp"
#include "zerosum/json_io.hpp"
#include "zerosum/search.hpp"
#include "zerosum/verify.hpp"

using namespace zerosum;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Global {
    bool json = false;
    std::string out;
    int jobs = 1;
    std::uint64_t seed = kDefaultSeed;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open " + path + " for writing");
        }
    }
    std::ostream& operator()() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchOptions search_options(const Global& g, const std::string& resume) {
    SearchOptions o;
    o.jobs = g.jobs;
    if (const char* env = std::getenv("ZS_NODE_BUDGET")) {
        try {
            o.node_budget = std::stoull(env);
        } catch (const std::exception&) {
            throw ParameterOutOfRange(std::string("ZS_NODE_BUDGET is not a number: ") + env);
        }
    }
    if (!resume.empty()) o.resume = checkpoint_from_json(parse_json(read_file(resume)));
    return o;
}

LengthSet which_lengths(const std::string& which) {
    if (which == "D" || which == "davenport") return LengthSet::any();
    if (which == "eta") return LengthSet::short_lengths();
    if (which == "s") return LengthSet::exact_exponent();
    return LengthSet::parse(which);
}

EquivalenceMode parse_mode(const std::string& name, const LengthSet& L, const GroupSpec& G) {
    if (name == "strongest") return EquivalenceMode::strongest(L, G);
    if (name == "automorphism") return EquivalenceMode::automorphism();
    if (name == "affine" || name == "automorphism-and-translation")
        return EquivalenceMode::automorphism_and_translation(L, G);
    throw ParameterOutOfRange("unknown mode '" + name + "'");
}

void print_table(std::ostream& os, const VerifyReport& r) {
    os << "suite " << r.suite << "\n";
    for (const auto& c : r.checks) {
        os << (c.pass ? "  PASS " : "  FAIL ") << std::left << std::setw(22) << c.id << c.description;
        if (!c.pass) os << "\n       expected " << c.expected.dump() << "\n       actual   " << c.actual.dump();
        os << "\n";
    }
    os << (r.passed() ? "all checks passed" : "some checks FAILED") << " in " << r.wall_time << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero-sum constants, extremal sequences and their structure"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--json", g.json, "Emit JSON instead of text");
    app.add_option("--out", g.out, "Write output to this file");
    app.add_option("--jobs", g.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized checks");

    std::string group_text, which = "D", mode_name = "strongest", resume, checkpoint_path;
    std::string problem_name_text, input, label_text, params_text = "{}", translation_text, basis_text;
    std::string suite = "paper", lengths_text = "any";
    int n = 2, length = 0, trials = 10000, count = 1000;
    bool first_only = false;

    auto* constants = app.add_subcommand("constants", "Compute s_L(G)");
    constants->add_option("--group", group_text, "Cyclic orders, e.g. 2,2,4")->required();
    constants->add_option("--which", which, "D, eta, s, or a length set (short|exp|any|a..b|list)");
    constants->add_option("--resume", resume, "Resume from a checkpoint file");
    constants->add_option("--checkpoint", checkpoint_path, "Write a checkpoint here if the budget runs out");

    auto* enumerate = app.add_subcommand("enumerate", "Stream extremal sequences up to symmetry");
    enumerate->add_option("--group", group_text, "Cyclic orders")->required();
    enumerate->add_option("--lengths", lengths_text, "short|exp|any|a..b|list");
    enumerate->add_option("--mode", mode_name, "strongest|automorphism|affine");
    enumerate->add_option("--length", length, "Fixed length instead of the extremal one");
    enumerate->add_option("--resume", resume, "Resume from a checkpoint file");
    enumerate->add_option("--checkpoint", checkpoint_path, "Write a checkpoint here if the budget runs out");

    auto* classify_cmd = app.add_subcommand("classify", "Find family witnesses for a sequence");
    classify_cmd->add_option("--problem", problem_name_text,
                             "davenport-max|eta-extremal|s-extremal|cyclic-eta|cyclic-s")
        ->required();
    classify_cmd->add_option("--input", input, "Sequence JSON file")->required();
    classify_cmd->add_flag("--first", first_only, "Stop at the first witness");

    auto* generate_cmd = app.add_subcommand("generate", "Build a family member");
    generate_cmd->add_option("--group", group_text, "Cyclic orders")->required();
    generate_cmd->add_option("--witness", input, "Witness JSON file");
    generate_cmd->add_option("--label", label_text, "Family label (with --params)");
    generate_cmd->add_option("--params", params_text, "Parameters as a JSON object");
    generate_cmd->add_option("--basis", basis_text, "Basis as a JSON list of residue lists");
    generate_cmd->add_option("--translation", translation_text, "Translation as a JSON residue list");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "paper|cyclic|elementary|oracle|filter");
    verify_cmd->add_option("--n", n, "Group parameter");
    verify_cmd->add_option("--trials", trials, "Trials for randomized suites");

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare Sigma_L with brute force");
    oracle_cmd->add_option("--input", input, "Sequence JSON file (otherwise random inputs)");
    oracle_cmd->add_option("--lengths", lengths_text, "Length set");
    oracle_cmd->add_option("--group", group_text, "Group for random inputs");
    oracle_cmd->add_option("--count", count, "Random inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Output out(g.out);
        if (*constants) {
            const GroupSpec G = parse_group(group_text);
            try {
                const auto opts = search_options(g, resume);
                const auto L = which_lengths(which);
                if (which == "D" || which == "davenport") {
                    const auto r = davenport_constant(G, opts);
                    if (g.json) {
                        Json j = to_json(static_cast<const ConstantResult&>(r));
                        j["max_minimal_zero_sum_length"] = r.max_minimal_zero_sum_length;
                        out() << j.dump() << "\n";
                    } else {
                        out() << r.value << "\n";
                    }
                } else {
                    const auto r = compute_s_L(G, L, opts);
                    if (g.json)
                        out() << to_json(r).dump() << "\n";
                    else
                        out() << r.value << "\n";
                }
            } catch (const BudgetExceeded& e) {
                if (!checkpoint_path.empty()) std::ofstream(checkpoint_path) << to_json(e.checkpoint()).dump() << "\n";
                std::cerr << "zs: " << e.what() << "; verified lower bound " << e.lower_bound() << "\n";
                if (g.json) out() << Json{{"error", e.what()}, {"lower_bound", e.lower_bound()}}.dump() << "\n";
                return kExitBudget;
            }
            return kExitOk;
        }

        if (*enumerate) {
            const GroupSpec G = parse_group(group_text);
            const auto L = LengthSet::parse(lengths_text);
            const auto mode = parse_mode(mode_name, L, G);
            try {
                auto opts = search_options(g, resume);
                if (length > 0) opts.collect_length = opts.stop_length = length;
                const auto outcome = search_zero_sum_free(G, L, mode, opts);
                const auto& reps = length > 0 ? outcome.collected : outcome.longest_reps;
                for (const auto& S : reps) out() << to_json(S).dump() << "\n";
                Json summary{{"value", outcome.longest + 1},
                             {"class_count", reps.size()},
                             {"node_count", outcome.nodes},
                             {"wall_time", outcome.seconds}};
                out() << Json{{"summary", summary}}.dump() << "\n";
            } catch (const BudgetExceeded& e) {
                if (!checkpoint_path.empty()) std::ofstream(checkpoint_path) << to_json(e.checkpoint()).dump() << "\n";
                std::cerr << "zs: " << e.what() << "; verified lower bound " << e.lower_bound() << "\n";
                return kExitBudget;
            }
            return kExitOk;
        }

        if (*classify_cmd) {
            const Sequence S = sequence_from_json(parse_json(read_file(input)));
            const auto witnesses = classify(S, parse_problem(problem_name_text), first_only);
            if (g.json) {
                Json list = Json::array();
                for (const auto& w : witnesses) list.push_back(to_json(w));
                out() << list.dump() << "\n";
            } else {
                out() << witnesses.size() << " witness(es)\n";
                for (const auto& w : witnesses) out() << "  " << to_json(w).dump() << "\n";
            }
            return kExitOk;
        }

        if (*generate_cmd) {
            const GroupSpec G = parse_group(group_text);
            FamilyWitness w{};
            if (!input.empty()) {
                w = witness_from_json(G, parse_json(read_file(input)));
            } else {
                if (label_text.empty()) throw ParameterOutOfRange("generate needs --witness or --label");
                Json j{{"label", label_text}, {"basis", Json::array()}, {"params", parse_json(params_text)}};
                if (!translation_text.empty()) j["translation"] = parse_json(translation_text);
                if (!basis_text.empty()) {
                    j["basis"] = parse_json(basis_text);
                } else {
                    for (const auto& e : standard_basis(G).generators) j["basis"].push_back(to_json(e));
                }
                w = witness_from_json(G, j);
            }
            const Sequence S = generate(w, G);
            if (g.json)
                out() << to_json(S).dump() << "\n";
            else
                out() << S.to_string() << "\n";
            return kExitOk;
        }

        if (*verify_cmd) {
            VerifyOptions vo;
            vo.n = n;
            vo.seed = g.seed;
            vo.trials = trials;
            vo.search = search_options(g, "");
            VerifyReport r;
            try {
                r = run_suite(suite, vo);
            } catch (const BudgetExceeded& e) {
                std::cerr << "zs: " << e.what() << "; verified lower bound " << e.lower_bound() << "\n";
                return kExitBudget;
            }
            if (g.json)
                out() << to_json(r).dump(2) << "\n";
            else
                print_table(out(), r);
            return r.passed() ? kExitOk : kExitFailed;
        }

        if (*oracle_cmd) {
            const auto L = LengthSet::parse(lengths_text);
            std::size_t checked = 0, mismatches = 0;
            auto check = [&](const Sequence& S) {
                ++checked;
                if (sigma_L(S, L) != brute_sigma_L(S, L)) {
                    ++mismatches;
                    std::cerr << "mismatch on " << S.to_string() << "\n";
                }
            };
            if (!input.empty()) {
                check(sequence_from_json(parse_json(read_file(input))));
            } else {
                const GroupSpec G = parse_group(group_text.empty() ? "2,2,4" : group_text);
                std::mt19937_64 rng(g.seed);
                for (int t = 0; t < count; ++t) {
                    std::vector<int> idx(1 + rng() % 16);
                    for (auto& x : idx) x = static_cast<int>(rng() % G.size());
                    check(Sequence::from_indices(G, idx));
                }
            }
            if (g.json)
                out() << Json{{"checked", checked}, {"mismatches", mismatches}}.dump() << "\n";
            else
                out() << checked << " input(s), " << mismatches << " mismatch(es)\n";
            return mismatches == 0 ? kExitOk : kExitFailed;
        }
    } catch (const Error& e) {
        std::cerr << "zs: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
