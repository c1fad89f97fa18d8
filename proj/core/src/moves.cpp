#include "vknot/moves.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <random>

#include "vknot/errors.hpp"

namespace vknot {
namespace {

std::vector<Spot> all_arcs(const MultiDiagram& m) {
    std::vector<Spot> arcs;
    for (std::size_t c = 0; c < m.circle_count(); ++c)
        for (std::size_t g = 0; g < m.gap_count(c); ++g)
            arcs.push_back(Spot{static_cast<int>(c), g});
    return arcs;
}

// Splices payload endpoint runs into their gaps; payloads aimed at the
// same gap land in list order.
MultiDiagram insert_endpoints(
    const MultiDiagram& m,
    const std::vector<std::pair<Spot, std::vector<Endpoint>>>& payloads,
    const std::map<int, int>& new_signs) {
    std::vector<std::vector<Endpoint>> words;
    words.reserve(m.circle_count());
    for (std::size_t c = 0; c < m.circle_count(); ++c) {
        const auto& w = m.circle(c);
        std::vector<Endpoint> out;
        for (std::size_t g = 0; g < m.gap_count(c); ++g) {
            for (const auto& [spot, pay] : payloads)
                if (spot.circle == static_cast<int>(c) && spot.pos == g)
                    out.insert(out.end(), pay.begin(), pay.end());
            if (g < w.size()) out.push_back(w[g]);
        }
        words.push_back(std::move(out));
    }
    auto signs = m.signs();
    for (const auto& [id, s] : new_signs) signs[id] = s;
    return MultiDiagram(std::move(words), std::move(signs));
}

MultiDiagram remove_endpoints(const MultiDiagram& m, std::vector<Spot> spots,
                              const std::vector<int>& dead_ids) {
    auto words = m.circles();
    std::sort(spots.begin(), spots.end());
    for (auto it = spots.rbegin(); it != spots.rend(); ++it)
        words[static_cast<std::size_t>(it->circle)].erase(
            words[static_cast<std::size_t>(it->circle)].begin() +
            static_cast<std::ptrdiff_t>(it->pos));
    auto signs = m.signs();
    for (int id : dead_ids) signs.erase(id);
    return MultiDiagram(std::move(words), std::move(signs));
}

// ---- R1 ----

struct KinkSpots {
    Spot first, second; // second follows first along the circle
};

std::optional<KinkSpots> kink_spots(const MultiDiagram& m, int chord) {
    auto [over, under] = m.chord_spots(chord);
    if (over.circle != under.circle) return std::nullopt;
    const std::size_t len = m.circle(static_cast<std::size_t>(over.circle)).size();
    if ((over.pos + 1) % len == under.pos) return KinkSpots{over, under};
    if ((under.pos + 1) % len == over.pos) return KinkSpots{under, over};
    return std::nullopt;
}

// Gap left behind on `circle` after deleting `removed` positions there:
// the gap before the first survivor at or after `slot`.
std::size_t gap_after_removal(const MultiDiagram& m, int circle, std::size_t slot,
                              const std::vector<std::size_t>& removed) {
    const std::size_t len = m.circle(static_cast<std::size_t>(circle)).size();
    if (removed.size() >= len) return 0;
    auto is_removed = [&](std::size_t p) {
        return std::find(removed.begin(), removed.end(), p) != removed.end();
    };
    slot %= len;
    while (is_removed(slot)) slot = (slot + 1) % len;
    std::size_t gap = 0;
    for (std::size_t p = 0; p < slot; ++p)
        if (!is_removed(p)) ++gap;
    return gap;
}

// ---- R2 ----

struct R2Pattern {
    Spot o_first, o_second; // the two Over endpoints, in circle order
    Spot u_first, u_second;
    int x, y;       // x = chord whose Over endpoint leads the over site
    bool parallel;  // x's Under endpoint also leads the under site
};

std::optional<std::pair<Spot, Spot>> adjacent_pair(const MultiDiagram& m, Spot s1,
                                                   Spot s2) {
    if (s1.circle != s2.circle) return std::nullopt;
    const std::size_t len = m.circle(static_cast<std::size_t>(s1.circle)).size();
    if ((s1.pos + 1) % len == s2.pos) return std::pair{s1, s2};
    if ((s2.pos + 1) % len == s1.pos) return std::pair{s2, s1};
    return std::nullopt;
}

std::optional<R2Pattern> detect_r2(const MultiDiagram& m, int a, int b) {
    if (a == b || m.sign(a) + m.sign(b) != 0) return std::nullopt;
    auto [ao, au] = m.chord_spots(a);
    auto [bo, bu] = m.chord_spots(b);
    auto osite = adjacent_pair(m, ao, bo);
    if (!osite) return std::nullopt;
    auto usite = adjacent_pair(m, au, bu);
    if (!usite) return std::nullopt;
    R2Pattern pat;
    pat.o_first = osite->first;
    pat.o_second = osite->second;
    pat.u_first = usite->first;
    pat.u_second = usite->second;
    pat.x = m.at(pat.o_first).id;
    pat.y = (pat.x == a) ? b : a;
    pat.parallel = m.at(pat.u_first).id == pat.x;
    return pat;
}

// ---- R3 ----

// An adjacent position pair holding endpoints of two distinct chords: the
// short strand segment that an R3 slides.
struct TriSite {
    Spot base;
    std::size_t next_pos = 0;
    int first_chord = 0, second_chord = 0;
};

std::optional<TriSite> make_site(const MultiDiagram& m, Spot base) {
    if (base.circle < 0 ||
        static_cast<std::size_t>(base.circle) >= m.circle_count())
        return std::nullopt;
    const auto& w = m.circle(static_cast<std::size_t>(base.circle));
    if (w.size() < 2 || base.pos >= w.size()) return std::nullopt;
    const std::size_t q = (base.pos + 1) % w.size();
    if (w[base.pos].id == w[q].id) return std::nullopt;
    return TriSite{base, q, w[base.pos].id, w[q].id};
}

bool sites_disjoint(const TriSite& s1, const TriSite& s2) {
    if (s1.base.circle != s2.base.circle) return true;
    std::array<std::size_t, 2> p1{s1.base.pos, s1.next_pos};
    std::array<std::size_t, 2> p2{s2.base.pos, s2.next_pos};
    for (std::size_t a : p1)
        for (std::size_t b : p2)
            if (a == b) return false;
    return true;
}

int shared_chord(const TriSite& s1, const TriSite& s2) {
    for (int c : {s1.first_chord, s1.second_chord})
        if (c == s2.first_chord || c == s2.second_chord) return c;
    return 0;
}

bool site_holds(const TriSite& s, Spot e) {
    return e.circle == s.base.circle && (e.pos == s.base.pos || e.pos == s.next_pos);
}

// The slide exists iff (1) the over/under relation among the three
// segments is acyclic (one passes over both others, one under both), and
// (2) the segment directions, visit orders, and crossing signs match a
// planar triangle: three lines through pairwise crossings, each line
// traversable in either direction, the whole picture possibly mirrored.
bool r3_legal(const MultiDiagram& m, const TriSite& sa, const TriSite& sb,
              const TriSite& sc) {
    const std::array<const TriSite*, 3> sites{&sa, &sb, &sc};
    if (!sites_disjoint(sa, sb) || !sites_disjoint(sa, sc) ||
        !sites_disjoint(sb, sc))
        return false;
    const int xab = shared_chord(sa, sb), xac = shared_chord(sa, sc),
              xbc = shared_chord(sb, sc);
    if (!xab || !xac || !xbc) return false;
    if (xab == xac || xab == xbc || xac == xbc) return false;

    // (1) acyclicity: in a 3-cycle every segment passes over exactly one
    // other.
    std::array<int, 3> outdeg{0, 0, 0};
    for (int chord : {xab, xac, xbc}) {
        auto [over, under] = m.chord_spots(chord);
        (void)under;
        for (int i = 0; i < 3; ++i)
            if (site_holds(*sites[i], over)) ++outdeg[i];
    }
    if (outdeg[0] == 1 && outdeg[1] == 1 && outdeg[2] == 1) return false;

    // (2) planar-model footprint.  Model lines d1=(1,0), d2=(1,1),
    // d3=(1,-1) meet at c12=(0,0), c13=(2,0), c23=(1,1); determinant signs
    // sigma and natural visit orders below follow from those coordinates.
    static const int sigma12 = 1, sigma13 = -1, sigma23 = -1;
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
        // strand k (0-based) rides site perm[k]
        const TriSite& s1 = *sites[perm[0]];
        const TriSite& s2 = *sites[perm[1]];
        const TriSite& s3 = *sites[perm[2]];
        const int c12 = shared_chord(s1, s2);
        const int c13 = shared_chord(s1, s3);
        const int c23 = shared_chord(s2, s3);
        if (!c12 || !c13 || !c23) continue;
        for (int dirs = 0; dirs < 8; ++dirs) {
            const int e1 = (dirs & 1) ? -1 : 1;
            const int e2 = (dirs & 2) ? -1 : 1;
            const int e3 = (dirs & 4) ? -1 : 1;
            auto order_ok = [](const TriSite& s, int eps, int first_if_fwd,
                               int second_if_fwd) {
                const int f = eps > 0 ? first_if_fwd : second_if_fwd;
                const int g = eps > 0 ? second_if_fwd : first_if_fwd;
                return s.first_chord == f && s.second_chord == g;
            };
            if (!order_ok(s1, e1, c12, c13)) continue;
            if (!order_ok(s2, e2, c12, c23)) continue;
            if (!order_ok(s3, e3, c23, c13)) continue;
            for (int chi = 1; chi >= -1; chi -= 2) {
                auto sign_ok = [&](int chord, const TriSite& si, int ei, int ej,
                                   int sigma) {
                    auto [over, under] = m.chord_spots(chord);
                    (void)under;
                    const int over_low = site_holds(si, over) ? 1 : -1;
                    return m.sign(chord) == chi * ei * ej * sigma * over_low;
                };
                if (sign_ok(c12, s1, e1, e2, sigma12) &&
                    sign_ok(c13, s1, e1, e3, sigma13) &&
                    sign_ok(c23, s2, e2, e3, sigma23))
                    return true;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<TriSite> collect_sites(const MultiDiagram& m) {
    std::vector<TriSite> sites;
    for (std::size_t c = 0; c < m.circle_count(); ++c) {
        const auto& w = m.circle(c);
        for (std::size_t p = 0; p < w.size(); ++p) {
            auto s = make_site(m, Spot{static_cast<int>(c), p});
            if (s) sites.push_back(*s);
        }
    }
    return sites;
}

std::vector<Move> enumerate_r3(const MultiDiagram& m) {
    std::vector<Move> out;
    const std::vector<TriSite> sites = collect_sites(m);
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        int a = sites[i].first_chord, b = sites[i].second_chord;
        if (a > b) std::swap(a, b);
        by_pair[{a, b}].push_back(i);
    }
    const std::vector<int> ids = m.chord_ids();
    auto key = [](int a, int b) {
        return a < b ? std::pair{a, b} : std::pair{b, a};
    };
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            for (std::size_t k = j + 1; k < ids.size(); ++k) {
                auto pij = by_pair.find(key(ids[i], ids[j]));
                auto pik = by_pair.find(key(ids[i], ids[k]));
                auto pjk = by_pair.find(key(ids[j], ids[k]));
                if (pij == by_pair.end() || pik == by_pair.end() ||
                    pjk == by_pair.end())
                    continue;
                for (std::size_t a : pij->second)
                    for (std::size_t b : pik->second)
                        for (std::size_t c : pjk->second) {
                            if (!r3_legal(m, sites[a], sites[b], sites[c]))
                                continue;
                            std::array<Spot, 3> bases{sites[a].base, sites[b].base,
                                                      sites[c].base};
                            std::sort(bases.begin(), bases.end());
                            out.push_back(R3{bases[0], bases[1], bases[2]});
                        }
            }
    return out;
}

// ---- apply helpers ----

MultiDiagram apply_r1_add(const MultiDiagram& m, const R1Add& mv) {
    if (!m.valid_arc(mv.arc))
        throw DomainError("R1_add: no arc " + serialize(mv.arc));
    if (mv.sign != 1 && mv.sign != -1)
        throw DomainError("R1_add: sign outside {+1,-1}");
    const int id = m.max_chord_id() + 1;
    std::vector<Endpoint> pay;
    if (mv.over_first)
        pay = {Endpoint{id, Role::Over}, Endpoint{id, Role::Under}};
    else
        pay = {Endpoint{id, Role::Under}, Endpoint{id, Role::Over}};
    return insert_endpoints(m, {{mv.arc, pay}}, {{id, mv.sign}});
}

MultiDiagram apply_r1_remove(const MultiDiagram& m, const R1Remove& mv) {
    auto ks = kink_spots(m, mv.chord);
    if (!ks)
        throw DomainError("R1_remove: chord " + std::to_string(mv.chord) +
                          " is not a kink");
    return remove_endpoints(m, {ks->first, ks->second}, {mv.chord});
}

MultiDiagram apply_r2_add(const MultiDiagram& m, const R2Add& mv) {
    if (!m.valid_arc(mv.arc1))
        throw DomainError("R2_add: no arc " + serialize(mv.arc1));
    if (!m.valid_arc(mv.arc2))
        throw DomainError("R2_add: no arc " + serialize(mv.arc2));
    if (mv.sign_first != 1 && mv.sign_first != -1)
        throw DomainError("R2_add: sign outside {+1,-1}");
    const int x = m.max_chord_id() + 1;
    const int y = x + 1;
    const Role r1 = mv.over_first ? Role::Over : Role::Under;
    const Role r2 = mv.over_first ? Role::Under : Role::Over;
    std::vector<Endpoint> pay1{Endpoint{x, r1}, Endpoint{y, r1}};
    std::vector<Endpoint> pay2 = mv.parallel
        ? std::vector<Endpoint>{Endpoint{x, r2}, Endpoint{y, r2}}
        : std::vector<Endpoint>{Endpoint{y, r2}, Endpoint{x, r2}};
    return insert_endpoints(m, {{mv.arc1, pay1}, {mv.arc2, pay2}},
                            {{x, mv.sign_first}, {y, -mv.sign_first}});
}

MultiDiagram apply_r2_remove(const MultiDiagram& m, const R2Remove& mv) {
    auto pat = detect_r2(m, mv.chord1, mv.chord2);
    if (!pat)
        throw DomainError("R2_remove: chords " + std::to_string(mv.chord1) +
                          "," + std::to_string(mv.chord2) +
                          " do not form a cancelling pair");
    return remove_endpoints(
        m, {pat->o_first, pat->o_second, pat->u_first, pat->u_second},
        {mv.chord1, mv.chord2});
}

MultiDiagram apply_r3(const MultiDiagram& m, const R3& mv) {
    auto sa = make_site(m, mv.site1);
    auto sb = make_site(m, mv.site2);
    auto sc = make_site(m, mv.site3);
    if (!sa || !sb || !sc || !r3_legal(m, *sa, *sb, *sc))
        throw DomainError("R3: sites " + serialize(mv.site1) + "," +
                          serialize(mv.site2) + "," + serialize(mv.site3) +
                          " do not form a slidable triangle");
    auto words = m.circles();
    for (const TriSite& s : {*sa, *sb, *sc}) {
        auto& w = words[static_cast<std::size_t>(s.base.circle)];
        std::swap(w[s.base.pos], w[s.next_pos]);
    }
    return MultiDiagram(std::move(words), m.signs());
}

} // namespace

std::vector<Move> enumerate_moves(const MultiDiagram& m) {
    std::vector<Move> out;
    const std::vector<Spot> arcs = all_arcs(m);
    for (Spot arc : arcs)
        for (int sign : {1, -1})
            for (bool over_first : {true, false})
                out.push_back(R1Add{arc, sign, over_first});
    for (int id : m.chord_ids())
        if (kink_spots(m, id)) out.push_back(R1Remove{id});
    for (Spot a1 : arcs)
        for (Spot a2 : arcs)
            for (bool over_first : {true, false})
                for (bool parallel : {true, false})
                    for (int sign : {1, -1})
                        out.push_back(R2Add{a1, a2, over_first, parallel, sign});
    const std::vector<int> ids = m.chord_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (detect_r2(m, ids[i], ids[j]))
                out.push_back(R2Remove{ids[i], ids[j]});
    auto r3s = enumerate_r3(m);
    out.insert(out.end(), r3s.begin(), r3s.end());
    return out;
}

std::vector<Move> enumerate_moves(const GaussDiagram& d) {
    return enumerate_moves(MultiDiagram(d));
}

MultiDiagram apply_move(const MultiDiagram& m, const Move& mv) {
    return std::visit(
        [&](const auto& v) -> MultiDiagram {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, R1Add>) return apply_r1_add(m, v);
            else if constexpr (std::is_same_v<T, R1Remove>) return apply_r1_remove(m, v);
            else if constexpr (std::is_same_v<T, R2Add>) return apply_r2_add(m, v);
            else if constexpr (std::is_same_v<T, R2Remove>) return apply_r2_remove(m, v);
            else return apply_r3(m, v);
        },
        mv);
}

GaussDiagram apply_move(const GaussDiagram& d, const Move& mv) {
    return apply_move(MultiDiagram(d), mv).to_gauss();
}

Move inverse_move(const MultiDiagram& before, const Move& mv) {
    return std::visit(
        [&](const auto& v) -> Move {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, R1Add>) {
                return R1Remove{before.max_chord_id() + 1};
            } else if constexpr (std::is_same_v<T, R1Remove>) {
                auto ks = kink_spots(before, v.chord);
                if (!ks)
                    throw DomainError("R1_remove: chord " +
                                      std::to_string(v.chord) + " is not a kink");
                const Spot first = ks->first;
                const std::size_t gap = gap_after_removal(
                    before, first.circle, first.pos + 2,
                    {ks->first.pos, ks->second.pos});
                return R1Add{Spot{first.circle, gap}, before.sign(v.chord),
                             before.at(first).role == Role::Over};
            } else if constexpr (std::is_same_v<T, R2Add>) {
                const int x = before.max_chord_id() + 1;
                return R2Remove{x, x + 1};
            } else if constexpr (std::is_same_v<T, R2Remove>) {
                auto pat = detect_r2(before, v.chord1, v.chord2);
                if (!pat)
                    throw DomainError("R2_remove: chords do not form a "
                                      "cancelling pair");
                auto removed_on = [&](int circle) {
                    std::vector<std::size_t> ps;
                    for (Spot s : {pat->o_first, pat->o_second, pat->u_first,
                                   pat->u_second})
                        if (s.circle == circle) ps.push_back(s.pos);
                    return ps;
                };
                const std::size_t g1 = gap_after_removal(
                    before, pat->o_first.circle, pat->o_first.pos + 2,
                    removed_on(pat->o_first.circle));
                const std::size_t g2 = gap_after_removal(
                    before, pat->u_first.circle, pat->u_first.pos + 2,
                    removed_on(pat->u_first.circle));
                return R2Add{Spot{pat->o_first.circle, g1},
                             Spot{pat->u_first.circle, g2},
                             /*over_first=*/true, pat->parallel,
                             before.sign(pat->x)};
            } else {
                return v; // R3 is self-inverse at the same sites
            }
        },
        mv);
}

Move inverse_move(const GaussDiagram& before, const Move& mv) {
    return inverse_move(MultiDiagram(before), mv);
}

// ---- serialization ----

namespace {

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

Spot parse_spot(const std::string& val) {
    auto colon = val.find(':');
    try {
        if (colon == std::string::npos)
            return Spot{0, static_cast<std::size_t>(std::stoull(val))};
        return Spot{std::stoi(val.substr(0, colon)),
                    static_cast<std::size_t>(std::stoull(val.substr(colon + 1)))};
    } catch (const std::exception&) {
        throw ParseError("bad position \"" + val + "\"");
    }
}

} // namespace

std::string serialize(const Move& m) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, R1Add>) {
                return "R1_add arc=" + serialize(v.arc) + " sign=" +
                       sign_char(v.sign) + " order=" + (v.over_first ? "OU" : "UO");
            } else if constexpr (std::is_same_v<T, R1Remove>) {
                return "R1_remove chord=" + std::to_string(v.chord);
            } else if constexpr (std::is_same_v<T, R2Add>) {
                const char config = v.over_first ? (v.parallel ? 'a' : 'b')
                                                 : (v.parallel ? 'c' : 'd');
                return "R2_add arc=" + serialize(v.arc1) + " arc=" +
                       serialize(v.arc2) + " signs=" +
                       (v.sign_first > 0 ? "+-" : "-+") + " config=" + config;
            } else if constexpr (std::is_same_v<T, R2Remove>) {
                return "R2_remove chord=" + std::to_string(v.chord1) +
                       " chord=" + std::to_string(v.chord2);
            } else {
                return "R3 site=" + serialize(v.site1) + " site=" +
                       serialize(v.site2) + " site=" + serialize(v.site3);
            }
        },
        m);
}

Move parse_move(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) toks.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    if (toks.empty()) throw ParseError("empty move line");

    auto values = [&](const std::string& wanted) {
        std::vector<std::string> vals;
        for (std::size_t i = 1; i < toks.size(); ++i) {
            auto eq = toks[i].find('=');
            if (eq == std::string::npos)
                throw ParseError("bad move argument \"" + toks[i] + "\"");
            if (toks[i].substr(0, eq) == wanted)
                vals.push_back(toks[i].substr(eq + 1));
        }
        return vals;
    };
    auto one = [&](const std::string& key) {
        auto vals = values(key);
        if (vals.size() != 1)
            throw ParseError("move needs exactly one " + key + "=");
        return vals[0];
    };
    auto chord_val = [](const std::string& v) {
        try {
            return std::stoi(v);
        } catch (const std::exception&) {
            throw ParseError("bad chord id \"" + v + "\"");
        }
    };

    const std::string& kind = toks[0];
    if (kind == "R1_add") {
        const std::string sgn = one("sign"), ord = one("order");
        if (sgn != "+" && sgn != "-") throw ParseError("R1_add sign must be + or -");
        if (ord != "OU" && ord != "UO")
            throw ParseError("R1_add order must be OU or UO");
        return R1Add{parse_spot(one("arc")), sgn == "+" ? 1 : -1, ord == "OU"};
    }
    if (kind == "R1_remove") return R1Remove{chord_val(one("chord"))};
    if (kind == "R2_add") {
        auto arcs = values("arc");
        if (arcs.size() != 2) throw ParseError("R2_add needs two arc=");
        const std::string sgns = one("signs"), cfg = one("config");
        if (sgns != "+-" && sgns != "-+")
            throw ParseError("R2_add signs must be +- or -+");
        if (cfg.size() != 1 || cfg[0] < 'a' || cfg[0] > 'd')
            throw ParseError("R2_add config must be a..d");
        const bool over_first = cfg[0] == 'a' || cfg[0] == 'b';
        const bool parallel = cfg[0] == 'a' || cfg[0] == 'c';
        return R2Add{parse_spot(arcs[0]), parse_spot(arcs[1]), over_first,
                     parallel, sgns == "+-" ? 1 : -1};
    }
    if (kind == "R2_remove") {
        auto chords = values("chord");
        if (chords.size() != 2) throw ParseError("R2_remove needs two chord=");
        return R2Remove{chord_val(chords[0]), chord_val(chords[1])};
    }
    if (kind == "R3") {
        auto sites = values("site");
        if (sites.size() != 3) throw ParseError("R3 needs three site=");
        return R3{parse_spot(sites[0]), parse_spot(sites[1]), parse_spot(sites[2])};
    }
    throw ParseError("unknown move \"" + kind + "\"");
}

// ---- random walk ----

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t reject = (0 - n) % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v < reject);
        return v % n;
    }

private:
    std::mt19937_64 eng_;
};

// Uniform legal move without materializing the addition classes, whose
// count (12A + 8A^2 for A arcs) dwarfs the removals.
std::optional<Move> sample_move(Sampler& rng, const MultiDiagram& m,
                                std::size_t max_n) {
    const std::vector<Spot> arcs = all_arcs(m);
    const std::uint64_t A = arcs.size();
    const std::uint64_t c_r1 = (m.chord_count() + 1 <= max_n) ? 4 * A : 0;
    const std::uint64_t c_r2 = (m.chord_count() + 2 <= max_n) ? 8 * A * A : 0;

    std::vector<Move> removals;
    for (int id : m.chord_ids())
        if (kink_spots(m, id)) removals.push_back(R1Remove{id});
    const std::vector<int> ids = m.chord_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (detect_r2(m, ids[i], ids[j]))
                removals.push_back(R2Remove{ids[i], ids[j]});
    for (Move& mv : enumerate_r3(m)) removals.push_back(mv);

    const std::uint64_t total = c_r1 + c_r2 + removals.size();
    if (total == 0) return std::nullopt;
    std::uint64_t u = rng.below(total);
    if (u < c_r1) {
        const Spot arc = arcs[u / 4];
        const int rem = static_cast<int>(u % 4);
        return R1Add{arc, rem % 2 == 0 ? 1 : -1, rem < 2};
    }
    u -= c_r1;
    if (u < c_r2) {
        const Spot a1 = arcs[u / (8 * A)];
        const std::uint64_t rest = u % (8 * A);
        const Spot a2 = arcs[rest / 8];
        const int cfg = static_cast<int>(rest % 8);
        return R2Add{a1, a2, (cfg & 1) == 0, (cfg & 2) == 0,
                     (cfg & 4) == 0 ? 1 : -1};
    }
    u -= c_r2;
    return removals[u];
}

} // namespace

GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps,
                         std::uint64_t seed, std::size_t max_n) {
    MultiDiagram m(d);
    Sampler rng(seed);
    for (std::size_t i = 0; i < steps; ++i) {
        auto mv = sample_move(rng, m, max_n);
        if (!mv) continue;
        m = apply_move(m, *mv);
    }
    return m.to_gauss();
}

} // namespace vknot
