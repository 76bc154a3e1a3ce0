#include "tqft/cobordism.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "tqft/errors.hpp"

namespace tqft {

ComponentKind Component::kind() const {
    if (closed) return ComponentKind::circle;
    if (tail && head) return ComponentKind::arc;
    if (!tail && !head) return ComponentKind::floating_interval;
    const Slot& outer = tail ? *tail : *head;
    return outer.top ? ComponentKind::half_interval_in : ComponentKind::half_interval_out;
}

namespace {

std::string least_rotation(std::string w) {
    if (w.size() < 2) return w;
    std::string best = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

// Tails live at bottom + or top - slots; heads at top + or bottom -.
bool tail_slot_ok(const Morphism& m, const Slot& s) {
    return s.top ? m.target[s.index] == Sign::minus : m.source[s.index] == Sign::plus;
}
bool head_slot_ok(const Morphism& m, const Slot& s) {
    return s.top ? m.target[s.index] == Sign::plus : m.source[s.index] == Sign::minus;
}

}  // namespace

void Morphism::validate() const {
    std::vector<int> bottom_uses(source.size(), 0), top_uses(target.size(), 0);
    auto touch = [&](const Slot& s) {
        auto& uses = s.top ? top_uses : bottom_uses;
        if (s.index < 0 || s.index >= static_cast<int>(uses.size()))
            throw std::invalid_argument("morphism: slot " + s.name() + " out of range");
        ++uses[s.index];
    };
    for (const auto& c : components) {
        if (c.closed && (c.tail || c.head))
            throw std::invalid_argument("morphism: circle with endpoints");
        if (c.tail) {
            touch(*c.tail);
            if (!tail_slot_ok(*this, *c.tail))
                throw std::invalid_argument("morphism: orientation clash at " + c.tail->name());
        }
        if (c.head) {
            touch(*c.head);
            if (!head_slot_ok(*this, *c.head))
                throw std::invalid_argument("morphism: orientation clash at " + c.head->name());
        }
    }
    for (std::size_t i = 0; i < bottom_uses.size(); ++i)
        if (bottom_uses[i] != 1)
            throw std::invalid_argument("morphism: slot b" + std::to_string(i) + " covered " +
                                        std::to_string(bottom_uses[i]) + " times");
    for (std::size_t i = 0; i < top_uses.size(); ++i)
        if (top_uses[i] != 1)
            throw std::invalid_argument("morphism: slot t" + std::to_string(i) + " covered " +
                                        std::to_string(top_uses[i]) + " times");
}

Morphism Morphism::canonical() const {
    Morphism m = *this;
    for (auto& c : m.components)
        if (c.closed) c.dots = least_rotation(c.dots);
    auto key = [](const Component& c) {
        auto enc = [](const std::optional<Slot>& s) {
            return s ? (s->top ? 1 : 0) * 1000000 + s->index : -1;
        };
        return std::make_tuple(static_cast<int>(c.kind()), enc(c.tail), enc(c.head), c.dots);
    };
    std::sort(m.components.begin(), m.components.end(),
              [&](const Component& a, const Component& b) { return key(a) < key(b); });
    return m;
}

bool operator==(const Morphism& a, const Morphism& b) {
    if (a.source != b.source || a.target != b.target) return false;
    Morphism ca = a.canonical(), cb = b.canonical();
    if (ca.components.size() != cb.components.size()) return false;
    for (std::size_t i = 0; i < ca.components.size(); ++i) {
        const auto& x = ca.components[i];
        const auto& y = cb.components[i];
        if (!(x.tail == y.tail && x.head == y.head && x.closed == y.closed && x.dots == y.dots))
            return false;
    }
    return true;
}

Morphism identity_morphism(const SignedSeq& s) {
    Morphism m{s, s, {}};
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        Slot bottom{false, i}, top{true, i};
        if (s[i] == Sign::plus)
            m.components.push_back({bottom, top, false, ""});
        else
            m.components.push_back({top, bottom, false, ""});
    }
    return m;
}

Morphism dotted_strand(Sign s, char letter) {
    Morphism m = identity_morphism({s});
    m.components[0].dots = std::string(1, letter);
    return m;
}

Morphism cup(Sign first) {
    Morphism m{{}, {first, opposite(first)}, {}};
    Slot t0{true, 0}, t1{true, 1};
    if (first == Sign::plus)
        m.components.push_back({t1, t0, false, ""});  // tail at the - slot
    else
        m.components.push_back({t0, t1, false, ""});
    return m;
}

Morphism cap(Sign first) {
    Morphism m{{first, opposite(first)}, {}, {}};
    Slot b0{false, 0}, b1{false, 1};
    if (first == Sign::minus)
        m.components.push_back({b1, b0, false, ""});  // tail at the + slot
    else
        m.components.push_back({b0, b1, false, ""});
    return m;
}

Morphism transposition(Sign s0, Sign s1) {
    Morphism m{{s0, s1}, {s1, s0}, {}};
    auto strand = [&](int bottom_index, int top_index, Sign s) {
        Slot bottom{false, bottom_index}, top{true, top_index};
        if (s == Sign::plus)
            m.components.push_back({bottom, top, false, ""});
        else
            m.components.push_back({top, bottom, false, ""});
    };
    strand(0, 1, s0);
    strand(1, 0, s1);
    return m;
}

Morphism half_in(Sign s) {
    Morphism m{{}, {s}, {}};
    Slot t0{true, 0};
    if (s == Sign::plus)
        m.components.push_back({std::nullopt, t0, false, ""});
    else
        m.components.push_back({t0, std::nullopt, false, ""});
    return m;
}

Morphism half_out(Sign s) {
    Morphism m{{s}, {}, {}};
    Slot b0{false, 0};
    if (s == Sign::plus)
        m.components.push_back({b0, std::nullopt, false, ""});
    else
        m.components.push_back({std::nullopt, b0, false, ""});
    return m;
}

namespace {

// Gluing bookkeeping: ends are outer slots of the composite, inner
// endpoints, or interface ids to be stitched.
struct End {
    enum class Type { outer, inner, interface };
    Type type = Type::inner;
    Slot slot;      // for outer
    int iface = -1; // for interface
};

struct Piece {
    End tail, head;
    std::string dots;
    bool closed = false;
    bool used = false;
};

End map_end(const std::optional<Slot>& s, bool from_top_morphism) {
    if (!s) return {End::Type::inner, {}, -1};
    if (from_top_morphism) {
        if (s->top) return {End::Type::outer, *s, -1};     // stays a target slot
        return {End::Type::interface, {}, s->index};       // glued
    }
    if (s->top) return {End::Type::interface, {}, s->index};
    return {End::Type::outer, *s, -1};                     // stays a source slot
}

}  // namespace

Morphism compose(const Morphism& top, const Morphism& bottom) {
    if (bottom.target != top.source)
        throw std::invalid_argument("compose: boundary mismatch");
    bottom.validate();
    top.validate();

    std::vector<Piece> pieces;
    for (const auto& c : bottom.components)
        pieces.push_back({map_end(c.tail, false), map_end(c.head, false), c.dots, c.closed, false});
    for (const auto& c : top.components)
        pieces.push_back({map_end(c.tail, true), map_end(c.head, true), c.dots, c.closed, false});

    const int n_iface = static_cast<int>(bottom.target.size());
    std::vector<int> tail_at(n_iface, -1);
    for (std::size_t p = 0; p < pieces.size(); ++p)
        if (pieces[p].tail.type == End::Type::interface) tail_at[pieces[p].tail.iface] = static_cast<int>(p);

    Morphism out{bottom.source, top.target, {}};

    auto slot_of = [](const End& e) -> std::optional<Slot> {
        if (e.type == End::Type::outer) return e.slot;
        return std::nullopt;
    };

    // Chains: start wherever a tail is not glued.
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (pieces[p].closed) {
            out.components.push_back({std::nullopt, std::nullopt, true, least_rotation(pieces[p].dots)});
            pieces[p].used = true;
            continue;
        }
        if (pieces[p].tail.type == End::Type::interface) continue;
        std::string dots;
        std::size_t cur = p;
        for (;;) {
            pieces[cur].used = true;
            dots += pieces[cur].dots;
            if (pieces[cur].head.type != End::Type::interface) break;
            int next = tail_at[pieces[cur].head.iface];
            if (next < 0) throw std::logic_error("compose: unmatched interface");
            cur = static_cast<std::size_t>(next);
        }
        out.components.push_back({slot_of(pieces[p].tail), slot_of(pieces[cur].head), false, dots});
    }

    // Remaining pieces sit on interface-only cycles: new circles.
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        if (pieces[p].used) continue;
        std::string dots;
        std::size_t cur = p;
        do {
            pieces[cur].used = true;
            dots += pieces[cur].dots;
            cur = static_cast<std::size_t>(tail_at[pieces[cur].head.iface]);
        } while (cur != p);
        out.components.push_back({std::nullopt, std::nullopt, true, least_rotation(dots)});
    }

    out.validate();
    return out;
}

Morphism tensor(const Morphism& left, const Morphism& right) {
    Morphism out{left.source, left.target, left.components};
    out.source.insert(out.source.end(), right.source.begin(), right.source.end());
    out.target.insert(out.target.end(), right.target.begin(), right.target.end());
    const int ds = static_cast<int>(left.source.size());
    const int dt = static_cast<int>(left.target.size());
    for (Component c : right.components) {
        auto shift = [&](std::optional<Slot>& s) {
            if (s) s->index += s->top ? dt : ds;
        };
        shift(c.tail);
        shift(c.head);
        out.components.push_back(std::move(c));
    }
    return out;
}

std::vector<ClosedPart> closed_components(const Morphism& m) {
    std::vector<ClosedPart> out;
    for (const auto& c : m.components) {
        auto k = c.kind();
        if (k == ComponentKind::circle)
            out.push_back({k, least_rotation(c.dots)});
        else if (k == ComponentKind::floating_interval)
            out.push_back({k, c.dots});
    }
    return out;
}

std::string dot_multiset(const Morphism& m) {
    std::string all;
    for (const auto& c : m.components) all += c.dots;
    std::sort(all.begin(), all.end());
    return all;
}

namespace {

const char* kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::arc: return "arc";
        case ComponentKind::half_interval_in: return "half-interval-in";
        case ComponentKind::half_interval_out: return "half-interval-out";
        case ComponentKind::floating_interval: return "floating-interval";
        case ComponentKind::circle: return "circle";
    }
    return "?";
}

Slot parse_slot(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'b' && s[0] != 't'))
        throw ParseError("bad slot reference '" + s + "'");
    return {s[0] == 't', std::stoi(s.substr(1))};
}

Sign parse_sign(const std::string& s) {
    if (s == "+") return Sign::plus;
    if (s == "-") return Sign::minus;
    throw ParseError("bad sign '" + s + "'");
}

}  // namespace

std::string to_json(const Morphism& m) {
    nlohmann::ordered_json j;
    auto signs = [](const SignedSeq& seq) {
        std::vector<std::string> out;
        for (Sign s : seq) out.push_back(s == Sign::plus ? "+" : "-");
        return out;
    };
    j["source"] = signs(m.source);
    j["target"] = signs(m.target);
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : m.components) {
        nlohmann::ordered_json cj;
        cj["kind"] = kind_name(c.kind());
        if (c.tail) cj["from"] = c.tail->name();
        if (c.head) cj["to"] = c.head->name();
        std::vector<std::string> dots;
        for (char d : c.dots) dots.emplace_back(1, d);
        cj["dots"] = dots;
        j["components"].push_back(cj);
    }
    return j.dump(2);
}

Morphism morphism_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("morphism JSON: ") + e.what());
    }
    Morphism m;
    try {
        for (const auto& s : j.at("source").get<std::vector<std::string>>())
            m.source.push_back(parse_sign(s));
        for (const auto& s : j.at("target").get<std::vector<std::string>>())
            m.target.push_back(parse_sign(s));
        for (const auto& cj : j.at("components")) {
            Component c;
            std::string kind = cj.at("kind").get<std::string>();
            if (cj.contains("from")) c.tail = parse_slot(cj.at("from").get<std::string>());
            if (cj.contains("to")) c.head = parse_slot(cj.at("to").get<std::string>());
            if (cj.contains("dots"))
                for (const auto& d : cj.at("dots").get<std::vector<std::string>>()) {
                    if (d.size() != 1) throw ParseError("dot labels must be single letters");
                    c.dots += d[0];
                }
            c.closed = kind == "circle";
            if (kind_name(c.kind()) != kind)
                throw ParseError("component kind '" + kind + "' does not match its endpoints");
            m.components.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("morphism JSON: ") + e.what());
    }
    m.validate();
    return m;
}

}  // namespace tqft
