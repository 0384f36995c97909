#include "qshuffle/serialize.hpp"

#include <json.hpp>

#include "qshuffle/expr_parse.hpp"

namespace qshuffle {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

json tree_node(const TreePtr& t) {
    if (!t) return nullptr;
    return json::array({tree_node(t->left), tree_node(t->right)});
}

TreePtr tree_parse(const json& j) {
    if (j.is_null()) return nullptr;
    if (!j.is_array() || j.size() != 2)
        throw ParseError("tree: nodes must be [left, right] pairs or null");
    return std::make_shared<const BinaryTree>(BinaryTree{tree_parse(j[0]), tree_parse(j[1])});
}

}  // namespace

std::string combo_to_json(const WordCombo& c) {
    json j = json::object();
    for (const auto& [w, coeff] : c.terms()) j[word_to_string(w)] = coeff.str();
    return j.dump();
}

WordCombo combo_from_json(const std::string& text) {
    json j = parse_or_throw(text, "combo");
    if (!j.is_object()) throw ParseError("combo: expected an object of word -> coefficient");
    WordCombo c;
    size_t len = 0;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        ShuffleWord w = word_from_string(key);
        if (first) {
            len = w.size();
            first = false;
        } else if (w.size() != len) {
            throw ParseError("combo: words of unequal length");
        }
        if (!value.is_string()) throw ParseError("combo: coefficients must be strings");
        c.add(w, parse_param_rat(value.get<std::string>()));
    }
    return c;
}

std::string subset_to_json(const GridSubset& s) {
    json j = json::array();
    for (const auto& v : s.vertices()) j.push_back(json::array({v.a, v.b}));
    return j.dump();
}

GridSubset subset_from_json(const std::string& text) {
    json j = parse_or_throw(text, "subset");
    if (!j.is_array()) throw ParseError("subset: expected a JSON array of [a,b] pairs");
    GridSubset s;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw ParseError("subset: entries must be integer pairs");
        int a = item[0].get<int>(), b = item[1].get<int>();
        if (a < 0 || b < 0) throw ParseError("subset: coordinates must be nonnegative");
        s.insert({a, b});
    }
    return s;
}

std::string tree_to_json(const TreePtr& t) { return tree_node(t).dump(); }

TreePtr tree_from_json(const std::string& text) {
    return tree_parse(parse_or_throw(text, "tree"));
}

std::string report_to_json(const MultiplicityReport& r) {
    json j;
    j["conditions_verified"] = r.conditions_verified;
    j["expected"] = r.expected.get_str();
    j["matches_expected"] = r.matches_expected;
    j["k"] = r.k;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["conditions"] = json::array();
    for (const auto& c : r.conditions)
        j["conditions"].push_back({{"id", c.id}, {"status", c.holds ? "pass" : "fail"}});
    return j.dump();
}

}  // namespace qshuffle
