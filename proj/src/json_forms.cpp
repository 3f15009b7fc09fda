#include "corelab/json_forms.hpp"

#include "corelab/error.hpp"

#include <string>

namespace corelab {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InvalidInput(std::string("JSON payload lacks \"") + name + "\"");
    return j.at(name);
}

int int_field(const nlohmann::json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_number_integer()) throw InvalidInput(std::string("JSON field \"") + name + "\" must be an integer");
    return v.get<int>();
}

std::vector<int> int_array(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a JSON array");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InvalidInput(std::string(what) + " must hold integers");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

nlohmann::json to_json(const Partition& p) { return {{"parts", p.parts()}}; }

Partition partition_from_json(const nlohmann::json& j) {
    return Partition(int_array(field(j, "parts"), "parts"));
}

nlohmann::json to_json(const OddHookSet& h) { return h.values(); }

OddHookSet hooks_from_json(const nlohmann::json& j) { return OddHookSet(int_array(j, "hook set")); }

nlohmann::json to_json(const PlanarIdeal& ideal) {
    nlohmann::json elems = nlohmann::json::array();
    for (PlanarPoint p : ideal.members) elems.push_back({p.a2, p.b});
    return {{"s", ideal.s}, {"k", ideal.k}, {"elements", elems}};
}

PlanarIdeal planar_ideal_from_json(const nlohmann::json& j) {
    const int s = int_field(j, "s");
    const int k = int_field(j, "k");
    std::vector<PlanarPoint> pts;
    const auto& elems = field(j, "elements");
    if (!elems.is_array()) throw InvalidInput("elements must be a JSON array");
    for (const auto& e : elems) {
        const auto pair = int_array(e, "planar element");
        if (pair.size() != 2) throw InvalidInput("planar element must be [a2, b]");
        pts.push_back({pair[0], pair[1]});
    }
    return make_ideal(build_planar_poset(s, k), std::move(pts));
}

nlohmann::json to_json(const CoreIdeal& ideal) {
    return {{"s", ideal.s}, {"k", ideal.k}, {"elements", ideal.members}};
}

CoreIdeal core_ideal_from_json(const nlohmann::json& j) {
    const int s = int_field(j, "s");
    const int k = int_field(j, "k");
    return make_ideal(build_core_poset(s, k), int_array(field(j, "elements"), "elements"));
}

nlohmann::json path_to_json(int s, int k, const PathWord& w) {
    if (w.kparam != k) throw InvalidInput("word kparam does not match k");
    nlohmann::json steps = nlohmann::json::array();
    for (const Step& st : w.steps) steps.push_back(to_string(st));
    return {{"s", s}, {"k", k}, {"steps", steps}};
}

PathWord path_from_json(const nlohmann::json& j) {
    int_field(j, "s");
    const int k = int_field(j, "k");
    const auto& steps = field(j, "steps");
    if (!steps.is_array()) throw InvalidInput("steps must be a JSON array");
    std::string text;
    for (const auto& st : steps) {
        if (!st.is_string()) throw InvalidInput("steps must hold strings");
        text += st.get<std::string>() + " ";
    }
    return parse_word(text, k);
}

} // namespace corelab
