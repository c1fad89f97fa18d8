#include "vknot/gauss.hpp"

#include <algorithm>
#include <cctype>

#include "vknot/errors.hpp"

namespace vknot {

GaussDiagram::GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs)
    : word_(std::move(word)), signs_(std::move(signs)) {
    std::map<int, int> over_seen, under_seen;
    for (std::size_t p = 0; p < word_.size(); ++p) {
        const Endpoint& e = word_[p];
        auto& seen = (e.role == Role::Over) ? over_seen : under_seen;
        if (seen.count(e.id))
            throw DomainError("duplicate endpoint for chord " + std::to_string(e.id));
        seen[e.id] = static_cast<int>(p);
    }
    for (const auto& [id, p] : over_seen) {
        auto it = under_seen.find(id);
        if (it == under_seen.end())
            throw DomainError("chord " + std::to_string(id) + " has no under endpoint");
        positions_[id] = ChordPos{static_cast<std::size_t>(p),
                                  static_cast<std::size_t>(it->second)};
    }
    for (const auto& [id, p] : under_seen) {
        (void)p;
        if (!over_seen.count(id))
            throw DomainError("chord " + std::to_string(id) + " has no over endpoint");
    }
    for (const auto& [id, pos] : positions_) {
        (void)pos;
        auto it = signs_.find(id);
        if (it == signs_.end())
            throw DomainError("chord " + std::to_string(id) + " has no sign");
        if (it->second != 1 && it->second != -1)
            throw DomainError("chord " + std::to_string(id) + " has sign outside {+1,-1}");
    }
    if (signs_.size() != positions_.size())
        throw DomainError("sign table mentions chords absent from the word");
}

int GaussDiagram::sign(int id) const {
    auto it = signs_.find(id);
    if (it == signs_.end())
        throw DomainError("unknown chord " + std::to_string(id));
    return it->second;
}

ChordPos GaussDiagram::chord_positions(int id) const {
    auto it = positions_.find(id);
    if (it == positions_.end())
        throw DomainError("unknown chord " + std::to_string(id));
    return it->second;
}

std::size_t GaussDiagram::partner(std::size_t p) const {
    if (p >= word_.size())
        throw DomainError("position out of range");
    ChordPos cp = positions_.at(word_[p].id);
    return (p == cp.over) ? cp.under : cp.over;
}

std::vector<int> GaussDiagram::chord_ids() const {
    std::vector<int> ids;
    ids.reserve(signs_.size());
    for (const auto& [id, s] : signs_) {
        (void)s;
        ids.push_back(id);
    }
    return ids;
}

namespace {

struct RawToken {
    std::string text;
    int line = 1;
    int col = 1;

    std::string where() const {
        return "line " + std::to_string(line) + ", column " + std::to_string(col);
    }
};

std::vector<RawToken> lex(const std::string& text) {
    std::vector<RawToken> out;
    RawToken cur;
    int line = 1, col = 0;
    bool comment = false;
    auto flush = [&] {
        if (!cur.text.empty()) out.push_back(cur);
        cur.text.clear();
    };
    for (char c : text) {
        ++col;
        if (c == '\n') {
            flush();
            ++line;
            col = 0;
            comment = false;
            continue;
        }
        if (c == '#') comment = true;
        if (comment || std::isspace(static_cast<unsigned char>(c))) {
            flush();
            continue;
        }
        if (cur.text.empty()) {
            cur.line = line;
            cur.col = col;
        }
        cur.text.push_back(c);
    }
    flush();
    return out;
}

// Decodes "[OU]<digits>[+-]"; returns the endpoint and writes the sign.
Endpoint parse_token(const RawToken& tok, int& sign_out) {
    auto fail = [&tok]() -> void {
        throw ParseError("bad endpoint token \"" + tok.text + "\" at " + tok.where());
    };
    const std::string& t = tok.text;
    if (t.size() < 3) fail();
    Role role = Role::Over;
    if (t[0] == 'U')
        role = Role::Under;
    else if (t[0] != 'O')
        fail();
    const char sgn = t.back();
    if (sgn != '+' && sgn != '-') fail();
    long long id = 0;
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) fail();
        id = id * 10 + (t[i] - '0');
        if (id > 1000000000) fail();
    }
    if (id <= 0) fail();
    sign_out = sgn == '+' ? 1 : -1;
    return Endpoint{static_cast<int>(id), role};
}

} // namespace

GaussDiagram parse_gauss_code(const std::string& text) {
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    std::map<std::pair<int, Role>, RawToken> first_seen;
    for (const RawToken& tok : lex(text)) {
        int sgn = 0;
        Endpoint e = parse_token(tok, sgn);
        auto sit = signs.find(e.id);
        if (sit != signs.end() && sit->second != sgn)
            throw ParseError("conflicting signs for chord " + std::to_string(e.id) +
                             " (token \"" + tok.text + "\" at " + tok.where() + ")");
        signs[e.id] = sgn;
        auto [rit, fresh] = first_seen.try_emplace({e.id, e.role}, tok);
        if (!fresh)
            throw ParseError("chord " + std::to_string(e.id) + " has two " +
                             (e.role == Role::Over ? "over" : "under") +
                             " endpoints (token \"" + tok.text + "\" at " +
                             tok.where() + ", first at " + rit->second.where() + ")");
        word.push_back(e);
    }

    try {
        return GaussDiagram(std::move(word), std::move(signs));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string serialize(const GaussDiagram& d) {
    std::string out;
    for (const Endpoint& e : d.word()) {
        if (!out.empty()) out.push_back(' ');
        out.push_back(e.role == Role::Over ? 'O' : 'U');
        out += std::to_string(e.id);
        out.push_back(d.sign(e.id) > 0 ? '+' : '-');
    }
    return out;
}

GaussDiagram renumbered(const GaussDiagram& d) {
    std::map<int, int> relabel;
    int next = 1;
    for (const Endpoint& e : d.word())
        if (!relabel.count(e.id)) relabel[e.id] = next++;
    std::vector<Endpoint> word;
    word.reserve(d.length());
    for (const Endpoint& e : d.word())
        word.push_back(Endpoint{relabel[e.id], e.role});
    std::map<int, int> signs;
    for (const auto& [id, s] : d.signs()) signs[relabel[id]] = s;
    return GaussDiagram(std::move(word), std::move(signs));
}

GaussDiagram rotated(const GaussDiagram& d, std::size_t r) {
    const std::size_t n2 = d.length();
    if (n2 == 0) return d;
    std::vector<Endpoint> word;
    word.reserve(n2);
    for (std::size_t i = 0; i < n2; ++i) word.push_back(d.word()[(r + i) % n2]);
    return GaussDiagram(std::move(word), d.signs());
}

GaussDiagram reversed(const GaussDiagram& d) {
    std::vector<Endpoint> word(d.word().rbegin(), d.word().rend());
    return GaussDiagram(std::move(word), d.signs());
}

GaussDiagram canonical_form(const GaussDiagram& d) {
    if (d.length() == 0) return d;
    GaussDiagram best;
    std::string best_key;
    for (std::size_t r = 0; r < d.length(); ++r) {
        GaussDiagram cand = renumbered(rotated(d, r));
        std::string key = serialize(cand);
        if (best_key.empty() || key < best_key) {
            best = std::move(cand);
            best_key = std::move(key);
        }
    }
    return best;
}

std::string canonical_code(const GaussDiagram& d) {
    return serialize(canonical_form(d));
}

Interlacement::Interlacement(const GaussDiagram& d) {
    const std::vector<int> ids = d.chord_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ChordPos pi = d.chord_positions(ids[i]);
        const std::size_t lo = std::min(pi.over, pi.under);
        const std::size_t hi = std::max(pi.over, pi.under);
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            ChordPos pj = d.chord_positions(ids[j]);
            const bool in1 = lo < pj.over && pj.over < hi;
            const bool in2 = lo < pj.under && pj.under < hi;
            if (in1 != in2) {
                pairs_.insert({ids[i], ids[j]});
                neighbours_[ids[i]].push_back(ids[j]);
                neighbours_[ids[j]].push_back(ids[i]);
            }
        }
    }
    for (auto& [id, nb] : neighbours_) {
        (void)id;
        std::sort(nb.begin(), nb.end());
    }
}

bool Interlacement::interlaced(int x, int a) const {
    if (x > a) std::swap(x, a);
    return pairs_.count({x, a}) > 0;
}

std::vector<int> Interlacement::neighbours(int x) const {
    auto it = neighbours_.find(x);
    return it == neighbours_.end() ? std::vector<int>{} : it->second;
}

GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2,
                           std::size_t cut1, std::size_t cut2) {
    auto check_cut = [](const GaussDiagram& d, std::size_t& cut, const char* which) {
        if (d.length() == 0) {
            cut = 0; // the trivial diagram has a single gap
            return;
        }
        if (cut >= d.length())
            throw DomainError(std::string("cut out of range on ") + which +
                              " diagram");
    };
    check_cut(d1, cut1, "first");
    check_cut(d2, cut2, "second");

    int shift = 0;
    for (int id : d1.chord_ids()) shift = std::max(shift, id);

    std::vector<Endpoint> word;
    word.reserve(d1.length() + d2.length());
    for (std::size_t i = 0; i < cut1; ++i) word.push_back(d1.word()[i]);
    for (std::size_t i = 0; i < d2.length(); ++i) {
        Endpoint e = d2.word()[(cut2 + i) % d2.length()];
        e.id += shift;
        word.push_back(e);
    }
    for (std::size_t i = cut1; i < d1.length(); ++i) word.push_back(d1.word()[i]);

    std::map<int, int> signs = d1.signs();
    for (const auto& [id, s] : d2.signs()) signs[id + shift] = s;
    return GaussDiagram(std::move(word), std::move(signs));
}

} // namespace vknot
