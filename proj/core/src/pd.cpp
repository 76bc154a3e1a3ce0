#include "tqft/pd.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace tqft {

namespace {

struct PortRef {
    int crossing;
    int role;  // 0 under_in, 1 under_out, 2 over_in, 3 over_out
};

int& port(Crossing& c, int role) {
    switch (role) {
        case 0: return c.under_in;
        case 1: return c.under_out;
        case 2: return c.over_in;
        default: return c.over_out;
    }
}
int port(const Crossing& c, int role) {
    switch (role) {
        case 0: return c.under_in;
        case 1: return c.under_out;
        case 2: return c.over_in;
        default: return c.over_out;
    }
}

bool is_in_role(int role) { return role == 0 || role == 2; }

// arc -> (consumer port, producer port)
struct ArcIndex {
    std::map<int, PortRef> consumer, producer;
};

ArcIndex index_arcs(const LinkDiagram& d) {
    ArcIndex ix;
    for (int c = 0; c < static_cast<int>(d.crossings.size()); ++c)
        for (int role = 0; role < 4; ++role) {
            int arc = port(d.crossings[c], role);
            auto& side = is_in_role(role) ? ix.consumer : ix.producer;
            if (side.count(arc))
                throw ParseError("arc " + std::to_string(arc) +
                                 (is_in_role(role) ? " consumed" : " produced") + " twice");
            side[arc] = {c, role};
        }
    return ix;
}

}  // namespace

void LinkDiagram::validate() const {
    ArcIndex ix = index_arcs(*this);
    for (const auto& [arc, ref] : ix.consumer)
        if (!ix.producer.count(arc))
            throw ParseError("dangling arc label " + std::to_string(arc));
    for (const auto& [arc, ref] : ix.producer)
        if (!ix.consumer.count(arc))
            throw ParseError("dangling arc label " + std::to_string(arc));
}

int LinkDiagram::writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
}

std::vector<std::vector<int>> LinkDiagram::components() const {
    ArcIndex ix = index_arcs(*this);
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (const auto& [start, ref] : ix.consumer) {
        if (seen.count(start)) continue;
        std::vector<int> comp;
        int arc = start;
        do {
            comp.push_back(arc);
            seen.insert(arc);
            auto it = ix.consumer.find(arc);
            if (it == ix.consumer.end()) throw ParseError("dangling arc label " + std::to_string(arc));
            const auto& c = crossings[it->second.crossing];
            arc = it->second.role == 0 ? c.under_out : c.over_out;
        } while (arc != start);
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

struct RawCrossing {
    int a[4];  // counterclockwise from the incoming under arc
};

// Over-strand direction: 0 = unknown, 1 = enters at slot 1 (negative
// crossing), 2 = enters at slot 3 (positive: the under direction is the
// over direction rotated a quarter turn counterclockwise).
struct Resolver {
    const std::vector<RawCrossing>& raw;
    std::vector<int> dir;
    // occurrence list per arc label: (crossing, slot)
    std::map<int, std::vector<std::pair<int, int>>> occ;
    // role per (crossing, slot): 0 unknown, 1 consume, 2 produce
    std::vector<std::array<int, 4>> role;

    explicit Resolver(const std::vector<RawCrossing>& r) : raw(r), dir(r.size(), 0) {
        role.assign(raw.size(), {0, 0, 0, 0});
        for (int c = 0; c < static_cast<int>(raw.size()); ++c)
            for (int s = 0; s < 4; ++s) occ[raw[c].a[s]].push_back({c, s});
        for (const auto& [arc, places] : occ)
            if (places.size() != 2)
                throw ParseError("arc label " + std::to_string(arc) + " appears " +
                                 std::to_string(places.size()) + " times (need 2)");
    }

    void set_role(int c, int s, int r, std::vector<std::pair<int, int>>& work) {
        if (role[c][s] == r) return;
        if (role[c][s] != 0) throw ParseError("inconsistent orientation in PD code");
        role[c][s] = r;
        if (s == 1 || s == 3) {
            // fixing one over slot fixes the crossing direction and the
            // other over slot
            int d = (s == 1) == (r == 1) ? 1 : 2;
            if (dir[c] != 0 && dir[c] != d) throw ParseError("inconsistent orientation in PD code");
            dir[c] = d;
            int other = s == 1 ? 3 : 1;
            int other_role = r == 1 ? 2 : 1;
            if (role[c][other] == 0) {
                role[c][other] = other_role;
                work.push_back({c, other});
            } else if (role[c][other] != other_role) {
                throw ParseError("inconsistent orientation in PD code");
            }
        }
        work.push_back({c, s});
    }

    void propagate(std::vector<std::pair<int, int>>& work) {
        while (!work.empty()) {
            auto [c, s] = work.back();
            work.pop_back();
            int arc = raw[c].a[s];
            const auto& places = occ[arc];
            auto other = places[0] == std::make_pair(c, s) ? places[1] : places[0];
            int opposite = role[c][s] == 1 ? 2 : 1;
            if (role[other.first][other.second] == 0)
                set_role(other.first, other.second, opposite, work);
            else if (role[other.first][other.second] != opposite)
                throw ParseError("inconsistent orientation for arc " + std::to_string(arc));
        }
    }

    void run() {
        std::vector<std::pair<int, int>> work;
        for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
            set_role(c, 0, 1, work);
            set_role(c, 2, 2, work);
        }
        propagate(work);
        // Components that never pass under leave their crossings
        // undirected; fall back to consecutive arc numbering.
        for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
            if (dir[c] != 0) continue;
            int j = raw[c].a[1], l = raw[c].a[3];
            int d;
            if (l == j + 1) d = 1;        // j -> l
            else if (j == l + 1) d = 2;   // l -> j
            else d = j > l ? 1 : 2;       // wraparound: larger label is the tail
            set_role(c, 1, d == 1 ? 1 : 2, work);
            propagate(work);
        }
    }
};

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    std::vector<RawCrossing> raw;
    int free_loops = 0;
    std::size_t pos = 0;
    auto skip = [&]() {
        while (pos < text.size()) {
            char ch = text[pos];
            if (ch == '#') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto integer = [&]() {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected arc label", start);
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char ch) {
        skip();
        if (pos >= text.size() || text[pos] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos);
        ++pos;
    };

    for (skip(); pos < text.size(); skip()) {
        char ch = text[pos];
        if (ch == 'O' || ch == 'U') {
            ++pos;
            ++free_loops;
            continue;
        }
        if (ch != 'X') throw ParseError("expected X[...] or O", pos);
        ++pos;
        expect('[');
        RawCrossing rc;
        rc.a[0] = integer();
        expect(',');
        rc.a[1] = integer();
        expect(',');
        rc.a[2] = integer();
        expect(',');
        rc.a[3] = integer();
        expect(']');
        raw.push_back(rc);
    }

    LinkDiagram d;
    d.free_loops = free_loops;
    if (!raw.empty()) {
        Resolver res(raw);
        res.run();
        for (int c = 0; c < static_cast<int>(raw.size()); ++c) {
            Crossing cr;
            cr.under_in = raw[c].a[0];
            cr.under_out = raw[c].a[2];
            if (res.dir[c] == 1) {
                cr.over_in = raw[c].a[1];
                cr.over_out = raw[c].a[3];
                cr.sign = -1;
            } else {
                cr.over_in = raw[c].a[3];
                cr.over_out = raw[c].a[1];
                cr.sign = +1;
            }
            d.crossings.push_back(cr);
        }
        d.validate();
        d.components();  // verifies the traversal closes up
    }
    return d;
}

std::string pd_text(const LinkDiagram& d) {
    std::ostringstream out;
    for (const auto& c : d.crossings) {
        int j = c.sign > 0 ? c.over_out : c.over_in;
        int l = c.sign > 0 ? c.over_in : c.over_out;
        out << "X[" << c.under_in << "," << j << "," << c.under_out << "," << l << "]\n";
    }
    for (int i = 0; i < d.free_loops; ++i) out << "O\n";
    return out.str();
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
    if (c < 0 || c >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("switch_crossing: bad crossing index");
    LinkDiagram out = d;
    Crossing& x = out.crossings[c];
    std::swap(x.under_in, x.over_in);
    std::swap(x.under_out, x.over_out);
    x.sign = -x.sign;
    return out;
}

namespace {

// Replace every occurrence of arc `from` with `to` across all crossings.
void relabel(LinkDiagram& d, int from, int to) {
    for (auto& c : d.crossings)
        for (int role = 0; role < 4; ++role)
            if (port(c, role) == from) port(c, role) = to;
}

// Each pair joins the strand ending at arc `first` to the strand starting
// as arc `second`; the two labels become one arc. Joining an arc to itself
// closes a crossing-free loop. Later pairs are patched when an earlier
// fusion renames one of their labels.
void apply_fusions(LinkDiagram& d, std::vector<std::pair<int, int>> pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [head, tail] = pairs[i];
        if (head == tail) {
            ++d.free_loops;
            continue;
        }
        relabel(d, tail, head);
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (pairs[j].first == tail) pairs[j].first = head;
            if (pairs[j].second == tail) pairs[j].second = head;
        }
    }
}

}  // namespace

LinkDiagram smooth_crossing(const LinkDiagram& d, int c) {
    if (c < 0 || c >= static_cast<int>(d.crossings.size()))
        throw std::invalid_argument("smooth_crossing: bad crossing index");
    LinkDiagram out = d;
    Crossing x = out.crossings[c];
    out.crossings.erase(out.crossings.begin() + c);
    // The oriented smoothing reconnects each incoming strand to the other
    // strand's outgoing arc.
    apply_fusions(out, {{x.under_in, x.over_out}, {x.over_in, x.under_out}});
    return out;
}

LinkDiagram disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
    int max_arc = 0;
    for (const auto& c : d1.crossings)
        for (int role = 0; role < 4; ++role) max_arc = std::max(max_arc, port(c, role));
    LinkDiagram out = d1;
    out.free_loops += d2.free_loops;
    for (Crossing c : d2.crossings) {
        for (int role = 0; role < 4; ++role) port(c, role) += max_arc;
        out.crossings.push_back(c);
    }
    return out;
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw std::invalid_argument("braid_closure: need at least one strand");
    LinkDiagram d;
    std::vector<int> initial(strands), current(strands);
    int next_arc = 1;
    for (int p = 0; p < strands; ++p) initial[p] = current[p] = next_arc++;
    for (int g : word) {
        int i = std::abs(g);
        if (i < 1 || i >= strands) throw std::invalid_argument("braid_closure: bad generator");
        int left = current[i - 1], right = current[i];
        int out_left = next_arc++, out_right = next_arc++;
        Crossing c;
        if (g > 0) {  // left strand passes over
            c.over_in = left;
            c.over_out = out_right;
            c.under_in = right;
            c.under_out = out_left;
            c.sign = +1;
        } else {
            c.over_in = right;
            c.over_out = out_left;
            c.under_in = left;
            c.under_out = out_right;
            c.sign = -1;
        }
        d.crossings.push_back(c);
        current[i - 1] = out_left;
        current[i] = out_right;
    }
    for (int p = 0; p < strands; ++p) {
        if (current[p] == initial[p]) {
            ++d.free_loops;
            continue;
        }
        relabel(d, initial[p], current[p]);
    }
    d.validate();
    return d;
}

LinkDiagram simplify(const LinkDiagram& d) {
    LinkDiagram cur = d;
    bool changed = true;
    while (changed) {
        changed = false;
        // Reidemeister I: a strand passing twice through one crossing.
        for (int c = 0; c < static_cast<int>(cur.crossings.size()) && !changed; ++c) {
            const Crossing x = cur.crossings[c];
            if (x.under_out == x.over_in) {
                cur.crossings.erase(cur.crossings.begin() + c);
                apply_fusions(cur, {{x.under_in, x.over_out}});
                changed = true;
            } else if (x.over_out == x.under_in) {
                cur.crossings.erase(cur.crossings.begin() + c);
                apply_fusions(cur, {{x.over_in, x.under_out}});
                changed = true;
            }
        }
        if (changed) continue;
        // Reidemeister II: same strand over at both crossings of a bigon,
        // opposite signs.
        const int n = static_cast<int>(cur.crossings.size());
        for (int c = 0; c < n && !changed; ++c)
            for (int e = 0; e < n && !changed; ++e) {
                if (c == e) continue;
                const Crossing& a = cur.crossings[c];
                const Crossing& b = cur.crossings[e];
                if (a.over_out != b.over_in || a.sign == b.sign) continue;
                bool parallel = a.under_out == b.under_in;
                bool antiparallel = b.under_out == a.under_in;
                if (!parallel && !antiparallel) continue;
                LinkDiagram next = cur;
                Crossing ca = a, cb = b;
                next.crossings.erase(next.crossings.begin() + std::max(c, e));
                next.crossings.erase(next.crossings.begin() + std::min(c, e));
                int h2 = parallel ? ca.under_in : cb.under_in;
                int t2 = parallel ? cb.under_out : ca.under_out;
                apply_fusions(next, {{ca.over_in, cb.over_out}, {h2, t2}});
                cur = std::move(next);
                changed = true;
            }
    }
    return cur;
}

LinkDiagram add_r1_kink(const LinkDiagram& d, int arc, bool positive, bool over_first) {
    LinkDiagram out = d;
    int max_arc = 0;
    bool found = false;
    for (const auto& c : out.crossings)
        for (int role = 0; role < 4; ++role) {
            max_arc = std::max(max_arc, port(c, role));
            if (port(c, role) == arc && is_in_role(role)) found = true;
        }
    if (!found) throw std::invalid_argument("add_r1_kink: arc not present");
    int mid = max_arc + 1, tail = max_arc + 2;
    // Redirect the old consumer of `arc` to consume the new tail arc.
    for (auto& c : out.crossings)
        for (int role = 0; role < 4; ++role)
            if (port(c, role) == arc && is_in_role(role)) port(c, role) = tail;
    Crossing k;
    if (over_first) {
        k.over_in = arc;
        k.over_out = mid;
        k.under_in = mid;
        k.under_out = tail;
    } else {
        k.under_in = arc;
        k.under_out = mid;
        k.over_in = mid;
        k.over_out = tail;
    }
    k.sign = positive ? +1 : -1;
    out.crossings.push_back(k);
    out.validate();
    return out;
}

std::string canonical_key(const LinkDiagram& d) {
    auto comps = d.components();
    const int n_comps = static_cast<int>(comps.size());

    std::string best;
    auto encode = [&](const std::vector<int>& comp_order, const std::vector<int>& rotations) {
        std::map<int, int> newid;
        int next = 1;
        for (int ci : comp_order) {
            const auto& comp = comps[ci];
            int r = rotations[ci];
            for (std::size_t i = 0; i < comp.size(); ++i)
                newid[comp[(i + r) % comp.size()]] = next++;
        }
        std::vector<std::array<int, 5>> tuples;
        for (const auto& c : d.crossings)
            tuples.push_back({newid[c.under_in], newid[c.over_in], newid[c.under_out],
                              newid[c.over_out], c.sign});
        std::sort(tuples.begin(), tuples.end());
        std::ostringstream out;
        out << d.free_loops << ";";
        for (const auto& t : tuples)
            out << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "," << t[4] << ";";
        std::string s = out.str();
        if (best.empty() || s < best) best = s;
    };

    std::vector<int> order(n_comps);
    for (int i = 0; i < n_comps; ++i) order[i] = i;
    std::vector<int> rotations(n_comps, 0);

    auto iterate_rotations = [&](const std::vector<int>& ord) {
        std::fill(rotations.begin(), rotations.end(), 0);
        for (;;) {
            encode(ord, rotations);
            int i = 0;
            while (i < n_comps) {
                if (++rotations[i] < static_cast<int>(comps[i].size())) break;
                rotations[i] = 0;
                ++i;
            }
            if (i == n_comps) break;
        }
    };

    if (n_comps == 0) return std::to_string(d.free_loops) + ";";
    if (n_comps <= 4) {
        std::sort(order.begin(), order.end());
        do {
            iterate_rotations(order);
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        iterate_rotations(order);
    }
    return best;
}

}  // namespace tqft
