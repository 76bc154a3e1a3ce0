#include "tqft/webs.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tqft {

int LadderWeb::edge_label(const std::string& name) const {
    for (const auto& [n, v] : edges)
        if (n == name) return v;
    throw std::invalid_argument("no edge named '" + name + "'");
}

bool LadderWeb::flow_ok() const {
    for (const auto& v : vertices) {
        int in = 0, out = 0;
        for (const auto& e : v.in) in += edge_label(e);
        for (const auto& e : v.out) out += edge_label(e);
        if (in != out) return false;
    }
    return true;
}

namespace {

LadderWeb make_ladder(int a, int b, int k) {
    LadderWeb w;
    w.a = a;
    w.b = b;
    w.k = k;
    w.edges = {
        {"bottom_left", b},  {"bottom_right", a}, {"mid_left", b + k}, {"mid_right", a - k},
        {"top_left", a},     {"top_right", b},    {"rung_bottom", k},  {"rung_top", b + k - a},
    };
    w.vertices = {
        {{"bottom_left", "rung_bottom"}, {"mid_left"}},   // lower left merge
        {{"bottom_right"}, {"rung_bottom", "mid_right"}}, // lower right split
        {{"mid_left"}, {"top_left", "rung_top"}},         // upper left split
        {{"mid_right", "rung_top"}, {"top_right"}},       // upper right merge
    };
    return w;
}

}  // namespace

WebResolution resolve_crossing_general(int a, int b, int sign) {
    if (a < 1 || b < 1) throw std::invalid_argument("resolve_crossing_general: thickness must be positive");
    if (sign != 1 && sign != -1) throw std::invalid_argument("resolve_crossing_general: sign must be +1 or -1");
    WebResolution r;
    r.a = a;
    r.b = b;
    r.sign = sign;
    for (int k = std::max(0, a - b); k <= a; ++k) {
        bigint unit = (a - k) % 2 == 0 ? 1 : -1;
        // positive: (-1)^(k-a) q^(a-k); negative: (-1)^(a-k) q^(k-a)
        Laurent coeff = Laurent::monomial(unit, sign > 0 ? a - k : k - a);
        r.terms.push_back({k, coeff, make_ladder(a, b, k)});
    }
    return r;
}

std::string WebResolution::json() const {
    nlohmann::ordered_json j;
    j["a"] = a;
    j["b"] = b;
    j["sign"] = sign;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) {
        nlohmann::ordered_json tj;
        tj["k"] = t.k;
        tj["coeff"] = t.coeff.text();
        nlohmann::ordered_json edges = nlohmann::ordered_json::object();
        for (const auto& [name, label] : t.web.edges) edges[name] = label;
        tj["web"] = {{"edges", edges}};
        j["terms"].push_back(tj);
    }
    return j.dump(2);
}

}  // namespace tqft
