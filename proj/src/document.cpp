#include "framekit/document.hpp"
#include "framekit/errors.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace framekit {

namespace {

// Cycle check on the cover digraph: 0 = unvisited, 1 = on stack, 2 = done.
bool has_cycle(int n, const std::vector<std::vector<int>>& succ) {
    std::vector<int> state(n, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int root = 0; root < n; ++root) {
        if (state[root] != 0)
            continue;
        stack.emplace_back(root, 0);
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < succ[v].size()) {
                int w = succ[v][next++];
                if (state[w] == 1)
                    return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

} // namespace

void validate_document(const LatticeDocument& doc) {
    if (doc.elements.empty())
        throw SemanticError("document declares no elements");
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < doc.elements.size(); ++i)
        if (!index.emplace(doc.elements[i], static_cast<int>(i)).second)
            throw SemanticError("duplicate element name '" + doc.elements[i] + "'");
    std::vector<std::vector<int>> succ(doc.elements.size());
    for (const auto& [lo, hi] : doc.covers) {
        auto ilo = index.find(lo);
        auto ihi = index.find(hi);
        if (ilo == index.end())
            throw SemanticError("cover references undeclared element '" + lo + "'");
        if (ihi == index.end())
            throw SemanticError("cover references undeclared element '" + hi + "'");
        if (ilo->second == ihi->second)
            throw SemanticError("cover pair relates '" + lo + "' to itself");
        succ[ilo->second].push_back(ihi->second);
    }
    if (has_cycle(static_cast<int>(doc.elements.size()), succ))
        throw SemanticError("covers contain a cycle");
}

LatticeDocument parse_lattice_document(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("document is not valid JSON");
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw ParseError("document must be an object with 'elements' and 'covers'");
    if (!j["elements"].is_array() || !j["covers"].is_array())
        throw ParseError("'elements' and 'covers' must be arrays");

    LatticeDocument doc;
    for (const auto& e : j["elements"]) {
        if (!e.is_string())
            throw ParseError("element names must be strings");
        doc.elements.push_back(e.get<std::string>());
    }
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw ParseError("each cover must be a [lower, upper] pair of names");
        doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    validate_document(doc);
    return doc;
}

std::string serialize_document(const LatticeDocument& doc) {
    nlohmann::json j;
    j["elements"] = doc.elements;
    auto covers = doc.covers;
    std::sort(covers.begin(), covers.end());
    j["covers"] = nlohmann::json::array();
    for (const auto& [lo, hi] : covers)
        j["covers"].push_back({lo, hi});
    return j.dump();
}

} // namespace framekit
