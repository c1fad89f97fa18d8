#include "vknot/satellite.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

Pattern parse_pattern(const std::string& text) {
    Pattern pat;
    pat.strands = 0;
    bool saw_p = false, saw_eps = false;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("pattern token \"" + tok + "\" is not key=value");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "p") {
            try {
                pat.strands = std::stoi(val);
            } catch (const std::exception&) {
                throw ParseError("bad strand count \"" + val + "\"");
            }
            saw_p = true;
        } else if (key == "eps") {
            for (char c : val) {
                if (c == '+') pat.orientations.push_back(1);
                else if (c == '-') pat.orientations.push_back(-1);
                else throw ParseError(std::string("bad orientation '") + c + "'");
            }
            saw_eps = true;
        } else if (key == "tangle") {
            std::istringstream items(val);
            std::string item;
            while (std::getline(items, item, ',')) {
                if (item.size() < 2 || (item.back() != '+' && item.back() != '-'))
                    throw ParseError("bad braid letter \"" + item + "\"");
                BraidLetter letter;
                try {
                    letter.pos = std::stoi(item.substr(0, item.size() - 1));
                } catch (const std::exception&) {
                    throw ParseError("bad braid letter \"" + item + "\"");
                }
                letter.sign = item.back() == '+' ? 1 : -1;
                pat.tangle.push_back(letter);
            }
        } else {
            throw ParseError("unknown pattern key \"" + key + "\"");
        }
    }
    if (!saw_p || !saw_eps)
        throw ParseError("pattern needs p= and eps=");
    if (pat.strands < 1)
        throw ParseError("strand count must be >= 1");
    if (static_cast<int>(pat.orientations.size()) != pat.strands)
        throw ParseError("eps length " + std::to_string(pat.orientations.size()) +
                         " does not match p=" + std::to_string(pat.strands));
    for (const BraidLetter& letter : pat.tangle)
        if (letter.pos < 1 || letter.pos >= pat.strands)
            throw ParseError("braid position " + std::to_string(letter.pos) +
                             " out of range for p=" + std::to_string(pat.strands));
    return pat;
}

std::string serialize(const Pattern& pat) {
    std::string out = "p=" + std::to_string(pat.strands) + " eps=";
    for (int e : pat.orientations) out += e > 0 ? '+' : '-';
    if (!pat.tangle.empty()) {
        out += " tangle=";
        for (std::size_t i = 0; i < pat.tangle.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(pat.tangle[i].pos);
            out += pat.tangle[i].sign > 0 ? '+' : '-';
        }
    }
    return out;
}

int winding(const Pattern& pat) {
    int sum = 0;
    for (int e : pat.orientations) sum += e;
    return sum < 0 ? -sum : sum;
}

namespace {

void validate_pattern(const Pattern& pat) {
    if (pat.strands < 1) throw DomainError("pattern needs at least one strand");
    if (static_cast<int>(pat.orientations.size()) != pat.strands)
        throw DomainError("pattern orientation count does not match strands");
    for (int e : pat.orientations)
        if (e != 1 && e != -1) throw DomainError("orientation must be +1 or -1");
    for (const BraidLetter& letter : pat.tangle) {
        if (letter.pos < 1 || letter.pos >= pat.strands)
            throw DomainError("braid position out of range");
        if (letter.sign != 1 && letter.sign != -1)
            throw DomainError("braid sign must be +1 or -1");
    }
}

// Tangle box geometry. The p tracks run around the companion and through a
// box cut into the circle at the insertion gap. Inside the box, zone 1 holds
// the braid: physical strand k runs between left port L_k and middle port
// M_{pi(k)}, traversed with the flow of its track orientation. Zone 2 wires
// the middle and right ports together by a non-crossing matching that
// respects flow directions; turnbacks realize strands running against the
// companion. Around the outside, right port R_k rejoins left port L_k.
struct Box {
    int p = 1;
    std::vector<int> pi;      // strand -> middle port, 1-based
    std::vector<int> pinv;    // middle port -> strand
    std::vector<int> over_strand;  // per letter: physical strand on top
    std::vector<int> under_strand; // per letter: physical strand below
    std::vector<std::vector<int>> strand_letters; // letter indices, left to right
    std::vector<int> wire;    // zone-2 boundary point -> matched point

    // Boundary points 0..2p-1 in cyclic order M_1..M_p, R_p..R_1.
    bool is_middle(int b) const { return b < p; }
    int middle_port(int b) const { return b + 1; }
    int right_port(int b) const { return 2 * p - b; }
    int middle_point(int j) const { return j - 1; }
    int right_point(int k) const { return 2 * p - k; }
};

void enumerate_matchings(const std::vector<int>& pts,
                         std::vector<std::pair<int, int>>& acc,
                         std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = 1; i < pts.size(); i += 2) {
        acc.emplace_back(pts[0], pts[i]);
        const std::vector<int> inner(pts.begin() + 1,
                                     pts.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<int> rest(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                              pts.end());
        // a wire from pts[0] to pts[i] separates the two sides of the disk
        std::vector<std::vector<std::pair<int, int>>> inner_out;
        std::vector<std::pair<int, int>> inner_acc;
        enumerate_matchings(inner, inner_acc, inner_out);
        for (const auto& mi : inner_out) {
            const std::size_t mark = acc.size();
            acc.insert(acc.end(), mi.begin(), mi.end());
            enumerate_matchings(rest, acc, out);
            acc.resize(mark);
        }
        acc.pop_back();
    }
}

Box build_box(const Pattern& pat) {
    const int p = pat.strands;
    Box box;
    box.p = p;

    std::vector<int> level(static_cast<std::size_t>(p) + 1);
    for (int k = 1; k <= p; ++k) level[static_cast<std::size_t>(k)] = k;
    box.strand_letters.assign(static_cast<std::size_t>(p) + 1, {});
    for (std::size_t u = 0; u < pat.tangle.size(); ++u) {
        const BraidLetter& letter = pat.tangle[u];
        const int a = level[static_cast<std::size_t>(letter.pos)];
        const int b = level[static_cast<std::size_t>(letter.pos) + 1];
        const int fa = pat.orientations[static_cast<std::size_t>(a - 1)];
        const int fb = pat.orientations[static_cast<std::size_t>(b - 1)];
        const bool a_over = letter.sign * fa * fb == 1;
        box.over_strand.push_back(a_over ? a : b);
        box.under_strand.push_back(a_over ? b : a);
        box.strand_letters[static_cast<std::size_t>(a)].push_back(
            static_cast<int>(u));
        box.strand_letters[static_cast<std::size_t>(b)].push_back(
            static_cast<int>(u));
        std::swap(level[static_cast<std::size_t>(letter.pos)],
                  level[static_cast<std::size_t>(letter.pos) + 1]);
    }
    box.pi.assign(static_cast<std::size_t>(p) + 1, 0);
    box.pinv.assign(static_cast<std::size_t>(p) + 1, 0);
    for (int m = 1; m <= p; ++m) {
        box.pi[static_cast<std::size_t>(level[static_cast<std::size_t>(m)])] = m;
        box.pinv[static_cast<std::size_t>(m)] = level[static_cast<std::size_t>(m)];
    }

    // Flow enters zone 2 at middle ports of forward strands and right ports
    // of backward tracks, and leaves at the complementary ports.
    std::vector<bool> is_entry(static_cast<std::size_t>(2 * p));
    for (int b = 0; b < 2 * p; ++b) {
        if (box.is_middle(b))
            is_entry[static_cast<std::size_t>(b)] =
                pat.orientations[static_cast<std::size_t>(
                    box.pinv[static_cast<std::size_t>(box.middle_port(b))] - 1)] > 0;
        else
            is_entry[static_cast<std::size_t>(b)] =
                pat.orientations[static_cast<std::size_t>(box.right_port(b) - 1)] <
                0;
    }

    std::vector<int> pts(static_cast<std::size_t>(2 * p));
    for (int b = 0; b < 2 * p; ++b) pts[static_cast<std::size_t>(b)] = b;
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> acc;
    enumerate_matchings(pts, acc, matchings);

    bool any_flow_consistent = false;
    for (const auto& matching : matchings) {
        bool flow_ok = true;
        for (const auto& [a, b] : matching)
            if (is_entry[static_cast<std::size_t>(a)] ==
                is_entry[static_cast<std::size_t>(b)]) {
                flow_ok = false;
                break;
            }
        if (!flow_ok) continue;
        any_flow_consistent = true;
        std::vector<int> wire(static_cast<std::size_t>(2 * p));
        for (const auto& [a, b] : matching) {
            wire[static_cast<std::size_t>(a)] = b;
            wire[static_cast<std::size_t>(b)] = a;
        }
        auto next_track = [&](int t) {
            const int from = pat.orientations[static_cast<std::size_t>(t - 1)] > 0
                                 ? box.middle_point(box.pi[static_cast<std::size_t>(t)])
                                 : box.right_point(t);
            const int to = wire[static_cast<std::size_t>(from)];
            return box.is_middle(to)
                       ? box.pinv[static_cast<std::size_t>(box.middle_port(to))]
                       : box.right_port(to);
        };
        int t = 1, steps = 0;
        do {
            t = next_track(t);
            ++steps;
        } while (t != 1 && steps <= p);
        if (steps == p) {
            box.wire = std::move(wire);
            return box;
        }
    }
    if (!any_flow_consistent)
        throw DomainError("orientation inconsistency in pattern wiring");
    throw DomainError("multi-component closure");
}

// Walks the single cable circle, emitting endpoints in traversal order and
// numbering chords by first appearance.
class CableWalk {
  public:
    CableWalk(const GaussDiagram& d, const Pattern& pat, const Box& box,
              std::size_t gap)
        : d_(d), pat_(pat), box_(box), gap_(gap) {}

    GaussDiagram run() {
        int t = 1;
        do {
            journey(t);
            t = passage(t);
        } while (t != 1);
        return GaussDiagram(word_, signs_);
    }

  private:
    const GaussDiagram& d_;
    const Pattern& pat_;
    const Box& box_;
    std::size_t gap_;
    std::map<std::tuple<int, int, int, int>, int> ids_;
    int next_id_ = 1;
    std::vector<Endpoint> word_;
    std::map<int, int> signs_;

    int eps(int t) const {
        return pat_.orientations[static_cast<std::size_t>(t - 1)];
    }

    void emit(std::tuple<int, int, int, int> key, Role role, int sign) {
        auto [it, fresh] = ids_.try_emplace(key, next_id_);
        if (fresh) {
            signs_[next_id_] = sign;
            ++next_id_;
        }
        word_.push_back({it->second, role});
    }

    void pass_block(std::size_t q, int t) {
        const Endpoint e = d_.word()[q];
        const int sx = d_.sign(e.id);
        const int p = box_.p;
        if (e.role == Role::Over) {
            // track t carries the over strand; it meets the p under tracks
            // in ascending order exactly when it runs with the crossing
            const bool asc = sx * eps(t) > 0;
            for (int step = 0; step < p; ++step) {
                const int j = asc ? step + 1 : p - step;
                emit({0, e.id, t, j}, Role::Over, sx * eps(t) * eps(j));
            }
        } else {
            const bool asc = sx * eps(t) < 0;
            for (int step = 0; step < p; ++step) {
                const int i = asc ? step + 1 : p - step;
                emit({0, e.id, i, t}, Role::Under, sx * eps(i) * eps(t));
            }
        }
    }

    void journey(int t) {
        const std::size_t len = d_.length();
        if (len == 0) return;
        for (std::size_t step = 0; step < len; ++step) {
            const std::size_t q = eps(t) > 0
                                      ? (gap_ + step) % len
                                      : (gap_ + 2 * len - 1 - step) % len;
            pass_block(q, t);
        }
    }

    void braid_leg(int strand, bool rightward) {
        const auto& letters = box_.strand_letters[static_cast<std::size_t>(strand)];
        for (std::size_t i = 0; i < letters.size(); ++i) {
            const int u = rightward ? letters[i]
                                    : letters[letters.size() - 1 - i];
            const Role role =
                box_.over_strand[static_cast<std::size_t>(u)] == strand
                    ? Role::Over
                    : Role::Under;
            emit({1, u, 0, 0}, role,
                 pat_.tangle[static_cast<std::size_t>(u)].sign);
        }
    }

    int passage(int t) {
        int b;
        if (eps(t) > 0) {
            braid_leg(t, true);
            b = box_.middle_point(box_.pi[static_cast<std::size_t>(t)]);
        } else {
            b = box_.right_point(t);
        }
        b = box_.wire[static_cast<std::size_t>(b)];
        if (box_.is_middle(b)) {
            const int k = box_.pinv[static_cast<std::size_t>(box_.middle_port(b))];
            braid_leg(k, false);
            return k;
        }
        return box_.right_port(b);
    }
};

} // namespace

GaussDiagram cable(const GaussDiagram& d, const Pattern& pat,
                   std::size_t insertion_gap) {
    validate_pattern(pat);
    const std::size_t gaps = d.length() == 0 ? 1 : d.length();
    if (insertion_gap >= gaps)
        throw DomainError("insertion gap " + std::to_string(insertion_gap) +
                          " out of range");
    const Box box = build_box(pat);
    return CableWalk(d, pat, box, insertion_gap).run();
}

bool pattern_closes(const Pattern& pat) {
    validate_pattern(pat);
    try {
        build_box(pat);
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

bool verify_satellite_formula(const GaussDiagram& d, const Pattern& pat) {
    const int r = winding(pat);
    const HTPolynomial lhs = ht_polynomial(cable(d, pat));
    const HTPolynomial rhs = ht_polynomial(d).substituted(r).scaled(r * r);
    return lhs == rhs;
}

} // namespace vknot
