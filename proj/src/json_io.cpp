#include "zerosum/json_io.hpp"

#include <charconv>

namespace zerosum {

namespace {

template <class F>
auto guarded(const char* what, F&& fn) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const GroupElement& g) { return Json(g.residues); }

GroupElement element_from_json(const GroupSpec& G, const Json& j) {
    return guarded("element", [&] {
        if (!j.is_array()) throw FormatError("element must be a residue list");
        GroupElement g{j.get<std::vector<int>>()};
        validate(G, g);
        return g;
    });
}

Json to_json(const GroupSpec& G) { return Json(G.orders()); }

GroupSpec group_from_json(const Json& j) {
    return guarded("group", [&] {
        if (!j.is_array()) throw FormatError("group must be a list of orders");
        return GroupSpec(j.get<std::vector<int>>());
    });
}

Json to_json(const Sequence& S) {
    Json elems = Json::array();
    for (const auto& [g, k] : S.elements()) elems.push_back(Json::array({to_json(g), k}));
    Json j;
    j["group"] = to_json(S.group());
    j["elements"] = std::move(elems);
    return j;
}

Sequence sequence_from_json(const Json& j) {
    return guarded("sequence", [&] {
        if (!j.is_object() || !j.contains("group") || !j.contains("elements"))
            throw FormatError("sequence needs \"group\" and \"elements\"");
        GroupSpec G = group_from_json(j.at("group"));
        std::vector<std::pair<GroupElement, int>> items;
        for (const auto& e : j.at("elements")) {
            if (!e.is_array() || e.size() != 2) throw FormatError("element entry must be [residues, multiplicity]");
            const int k = e.at(1).get<int>();
            if (k <= 0) throw FormatError("multiplicities must be positive");
            items.emplace_back(element_from_json(G, e.at(0)), k);
        }
        return Sequence(G, items);
    });
}

Json to_json(const FamilyWitness& w) {
    Json j;
    j["label"] = std::string(label_name(w.label));
    Json basis = Json::array();
    for (const auto& g : w.basis.generators) basis.push_back(to_json(g));
    j["basis"] = std::move(basis);
    Json params = Json::object();
    for (const auto& [name, value] : w.params) {
        if (const long* x = std::get_if<long>(&value)) {
            params[name] = *x;
        } else {
            Json list = Json::array();
            for (const auto& g : std::get<std::vector<GroupElement>>(value)) list.push_back(to_json(g));
            params[name] = std::move(list);
        }
    }
    j["params"] = std::move(params);
    j["translation"] = w.translation ? to_json(*w.translation) : Json(nullptr);
    return j;
}

FamilyWitness witness_from_json(const GroupSpec& G, const Json& j) {
    return guarded("witness", [&] {
        if (!j.is_object()) throw FormatError("witness must be an object");
        FamilyWitness w{parse_label(j.at("label").get<std::string>()), {}, {}, std::nullopt};
        for (const auto& g : j.at("basis")) {
            auto e = element_from_json(G, g);
            w.basis.declared_orders.push_back(static_cast<int>(order_of(G, e)));
            w.basis.generators.push_back(std::move(e));
        }
        for (const auto& [name, value] : j.at("params").items()) {
            if (value.is_number_integer()) {
                w.params.emplace_back(name, value.get<long>());
            } else if (value.is_array()) {
                std::vector<GroupElement> list;
                for (const auto& g : value) list.push_back(element_from_json(G, g));
                w.params.emplace_back(name, std::move(list));
            } else {
                throw FormatError("parameter " + name + " must be an integer or an element list");
            }
        }
        if (j.contains("translation") && !j.at("translation").is_null())
            w.translation = element_from_json(G, j.at("translation"));
        return w;
    });
}

Json to_json(const SearchCheckpoint& cp) {
    Json j;
    j["completed_tasks"] = cp.completed_tasks;
    j["longest"] = cp.longest;
    j["longest_reps"] = cp.longest_reps;
    j["collected"] = cp.collected;
    j["classes_by_length"] = cp.classes_by_length;
    j["nodes"] = cp.nodes;
    return j;
}

SearchCheckpoint checkpoint_from_json(const Json& j) {
    return guarded("checkpoint", [&] {
        SearchCheckpoint cp;
        cp.completed_tasks = j.at("completed_tasks").get<std::vector<std::size_t>>();
        cp.longest = j.at("longest").get<int>();
        cp.longest_reps = j.at("longest_reps").get<std::vector<std::vector<int>>>();
        cp.collected = j.at("collected").get<std::vector<std::vector<int>>>();
        cp.classes_by_length = j.at("classes_by_length").get<std::vector<std::uint64_t>>();
        cp.nodes = j.at("nodes").get<std::uint64_t>();
        return cp;
    });
}

Json to_json(const ConstantResult& r) {
    Json j;
    j["group"] = to_json(r.group);
    j["length_set"] = r.length_set.to_string();
    j["mode"] = r.mode.to_string();
    j["value"] = r.value;
    j["extremal_count_up_to_symmetry"] = r.extremal_count_up_to_symmetry;
    j["certificate"] = to_json(r.certificate);
    j["classes_by_length"] = r.classes_by_length;
    j["node_count"] = r.node_count;
    j["wall_time"] = r.seconds;
    return j;
}

Json parse_json(std::string_view text) {
    return guarded("json", [&] { return Json::parse(text.begin(), text.end()); });
}

GroupSpec parse_group(std::string_view text) {
    std::vector<int> orders;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const auto part = text.substr(pos, comma - pos);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw InvalidGroup("cannot parse group '" + std::string(text) + "'");
        orders.push_back(value);
        pos = comma + 1;
    }
    return GroupSpec(orders);
}

}  // namespace zerosum
