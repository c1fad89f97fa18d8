#include "vknot/cobordism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

std::string to_string(CobordismClaim claim) {
    switch (claim) {
        case CobordismClaim::Concordance: return "concordance";
        case CobordismClaim::Slice: return "slice";
        case CobordismClaim::Ribbon: return "ribbon";
        case CobordismClaim::Cobordism: return "cobordism";
    }
    return "?";
}

CobordismClaim parse_claim(const std::string& word) {
    if (word == "concordance") return CobordismClaim::Concordance;
    if (word == "slice") return CobordismClaim::Slice;
    if (word == "ribbon") return CobordismClaim::Ribbon;
    if (word == "cobordism") return CobordismClaim::Cobordism;
    throw ParseError("unknown claim \"" + word + "\"");
}

namespace {

std::vector<Endpoint> rotated_word(const std::vector<Endpoint>& w, std::size_t r) {
    std::vector<Endpoint> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(r + i) % w.size()]);
    return out;
}

MultiDiagram apply_birth(const MultiDiagram& m) {
    auto words = m.circles();
    words.emplace_back();
    return MultiDiagram(std::move(words), m.signs());
}

MultiDiagram apply_death(const MultiDiagram& m, const CobordDeath& s) {
    if (s.circle >= m.circle_count())
        throw DomainError("death: no circle " + std::to_string(s.circle));
    if (!m.crossing_free(s.circle))
        throw DomainError("death: circle " + std::to_string(s.circle) +
                          " carries chord endpoints");
    auto words = m.circles();
    words.erase(words.begin() + static_cast<std::ptrdiff_t>(s.circle));
    return MultiDiagram(std::move(words), m.signs());
}

MultiDiagram apply_saddle(const MultiDiagram& m, const CobordSaddle& s) {
    if (!m.valid_arc(s.arc1))
        throw DomainError("saddle: no arc " + serialize(s.arc1));
    if (!m.valid_arc(s.arc2))
        throw DomainError("saddle: no arc " + serialize(s.arc2));
    auto words = m.circles();
    if (s.arc1.circle == s.arc2.circle) {
        const std::size_t c = static_cast<std::size_t>(s.arc1.circle);
        const std::vector<Endpoint> w = words[c];
        const std::size_t len = w.size();
        std::vector<Endpoint> piece1, piece2;
        if (len > 0) {
            const std::size_t len1 = (s.arc2.pos + len - s.arc1.pos) % len;
            for (std::size_t i = 0; i < len1; ++i)
                piece1.push_back(w[(s.arc1.pos + i) % len]);
            for (std::size_t i = 0; i < len - len1; ++i)
                piece2.push_back(w[(s.arc2.pos + i) % len]);
        }
        words[c] = std::move(piece1);
        words.push_back(std::move(piece2));
    } else {
        const std::size_t c1 = static_cast<std::size_t>(s.arc1.circle);
        const std::size_t c2 = static_cast<std::size_t>(s.arc2.circle);
        std::vector<Endpoint> merged = rotated_word(words[c1], s.arc1.pos);
        const std::vector<Endpoint> tail = rotated_word(words[c2], s.arc2.pos);
        merged.insert(merged.end(), tail.begin(), tail.end());
        words[c1] = std::move(merged);
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(c2));
    }
    return MultiDiagram(std::move(words), m.signs());
}

struct TraceTracker {
    std::vector<std::size_t> comp_of_circle; // parallel to state circles
    std::vector<std::size_t> parent;         // union-find over components
    std::vector<long long> births, deaths, saddles; // per component id

    explicit TraceTracker(std::size_t start_circles) {
        for (std::size_t i = 0; i < start_circles; ++i)
            comp_of_circle.push_back(new_component());
    }

    std::size_t new_component() {
        parent.push_back(parent.size());
        births.push_back(0);
        deaths.push_back(0);
        saddles.push_back(0);
        return parent.size() - 1;
    }

    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }

    bool all_connected() {
        if (parent.empty()) return true;
        const std::size_t r = find(0);
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) != r) return false;
        return true;
    }

    std::vector<long long> component_eulers() {
        std::map<std::size_t, long long> chi;
        for (std::size_t i = 0; i < parent.size(); ++i)
            chi[find(i)] += births[i] + deaths[i] - saddles[i];
        std::vector<long long> out;
        for (const auto& [root, e] : chi) {
            (void)root;
            out.push_back(e);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

MultiDiagram apply_step(const MultiDiagram& m, const CobordStep& s) {
    return std::visit(
        [&](const auto& v) -> MultiDiagram {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CobordBirth>) return apply_birth(m);
            else if constexpr (std::is_same_v<T, CobordDeath>) return apply_death(m, v);
            else if constexpr (std::is_same_v<T, CobordSaddle>) return apply_saddle(m, v);
            else return apply_move(m, v);
        },
        s);
}

CertificateReport check_certificate(const CobordismCertificate& c) {
    CertificateReport rep;
    MultiDiagram state(c.start);
    TraceTracker trace(state.circle_count());

    auto fail_at = [&](std::size_t step, const std::string& reason) {
        rep.valid = false;
        rep.failure_step = step;
        rep.failure_reason = reason;
    };

    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const CobordStep& step = c.steps[i];
        if (std::holds_alternative<CobordBirth>(step) &&
            c.claim == CobordismClaim::Ribbon) {
            fail_at(i, "birth forbidden in ribbon certificate");
            break;
        }
        try {
            if (const auto* b = std::get_if<CobordBirth>(&step)) {
                (void)b;
                state = apply_birth(state);
                const std::size_t comp = trace.new_component();
                trace.comp_of_circle.push_back(comp);
                ++trace.births[comp];
                ++rep.births;
            } else if (const auto* d = std::get_if<CobordDeath>(&step)) {
                state = apply_death(state, *d);
                const std::size_t comp = trace.comp_of_circle[d->circle];
                trace.comp_of_circle.erase(trace.comp_of_circle.begin() +
                                           static_cast<std::ptrdiff_t>(d->circle));
                ++trace.deaths[trace.find(comp)];
                ++rep.deaths;
            } else if (const auto* sd = std::get_if<CobordSaddle>(&step)) {
                state = apply_saddle(state, *sd);
                if (sd->arc1.circle == sd->arc2.circle) {
                    // split: both pieces stay in the same trace component
                    const std::size_t comp =
                        trace.comp_of_circle[static_cast<std::size_t>(sd->arc1.circle)];
                    trace.comp_of_circle.push_back(comp);
                    ++trace.saddles[trace.find(comp)];
                } else {
                    const std::size_t c1 = static_cast<std::size_t>(sd->arc1.circle);
                    const std::size_t c2 = static_cast<std::size_t>(sd->arc2.circle);
                    trace.unite(trace.comp_of_circle[c1], trace.comp_of_circle[c2]);
                    ++trace.saddles[trace.find(trace.comp_of_circle[c1])];
                    trace.comp_of_circle.erase(trace.comp_of_circle.begin() +
                                               static_cast<std::ptrdiff_t>(c2));
                }
                ++rep.saddles;
            } else {
                state = apply_move(state, std::get<Move>(step));
            }
        } catch (const DomainError& e) {
            fail_at(i, e.what());
            break;
        }
    }

    rep.end_state = state;
    rep.euler = static_cast<long long>(rep.births) +
                static_cast<long long>(rep.deaths) -
                static_cast<long long>(rep.saddles);
    rep.connected = trace.all_connected();
    if (!rep.connected) rep.component_euler = trace.component_eulers();

    if (rep.failure_step) return rep;

    auto fail_end = [&](const std::string& reason) {
        rep.valid = false;
        rep.failure_reason = reason;
    };

    if (state.circle_count() != 1) {
        fail_end("end state has " + std::to_string(state.circle_count()) +
                 " circles, not 1");
        return rep;
    }
    const bool needs_crossing_free = c.claim == CobordismClaim::Slice ||
                                     c.claim == CobordismClaim::Ribbon;
    if (needs_crossing_free && !state.crossing_free(0)) {
        fail_end("end state is not a crossing-free circle");
        return rep;
    }
    const bool counted = c.claim != CobordismClaim::Cobordism;
    if (counted && rep.euler != 0) {
        fail_end("counts violate #b-#s+#d=0");
        return rep;
    }
    if (counted && !rep.connected) {
        fail_end("trace surface disconnected");
        return rep;
    }
    rep.valid = true;
    if (rep.connected)
        rep.genus = (static_cast<long long>(rep.saddles) -
                     static_cast<long long>(rep.births) -
                     static_cast<long long>(rep.deaths)) /
                    2;
    return rep;
}

bool ht_endpoints_check(const CobordismCertificate& c) {
    if (c.claim != CobordismClaim::Concordance)
        throw DomainError("endpoint comparison requires a concordance claim");
    CertificateReport rep = check_certificate(c);
    if (!rep.valid)
        throw DomainError("certificate invalid: " + rep.failure_reason);
    const GaussDiagram end = rep.end_state.to_gauss();
    return ht_polynomial(c.start) == ht_polynomial(end);
}

namespace {

std::string qualified(Spot s) {
    return std::to_string(s.circle) + ":" + std::to_string(s.pos);
}

} // namespace

CobordismCertificate parse_certificate(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.resize(hash);
            const auto b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            const auto e = raw.find_last_not_of(" \t\r");
            lines.emplace_back(no, raw.substr(b, e - b + 1));
        }
    }
    if (lines.size() < 2)
        throw ParseError("certificate needs start: and claim: lines");
    auto tail_of = [](const std::string& line, const std::string& head,
                      int no) {
        if (line.rfind(head, 0) != 0)
            throw ParseError("line " + std::to_string(no) + ": expected " + head);
        auto rest = line.substr(head.size());
        const auto b = rest.find_first_not_of(" \t");
        return b == std::string::npos ? std::string{} : rest.substr(b);
    };

    CobordismCertificate cert;
    cert.start = parse_gauss_code(tail_of(lines[0].second, "start:", lines[0].first));
    cert.claim = parse_claim(tail_of(lines[1].second, "claim:", lines[1].first));

    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto& [no, line] = lines[i];
        try {
            if (line == "birth") {
                cert.steps.emplace_back(CobordBirth{});
            } else if (line.rfind("death", 0) == 0) {
                const std::string rest = tail_of(line, "death", no);
                if (rest.rfind("circle=", 0) != 0)
                    throw ParseError("death needs circle=");
                cert.steps.emplace_back(
                    CobordDeath{static_cast<std::size_t>(std::stoull(rest.substr(7)))});
            } else if (line.rfind("saddle", 0) == 0) {
                std::istringstream in(line);
                std::string tok, a1, a2;
                in >> tok;
                while (in >> tok) {
                    if (tok.rfind("arc=", 0) != 0)
                        throw ParseError("saddle needs arc= arguments");
                    (a1.empty() ? a1 : a2) = tok.substr(4);
                }
                if (a1.empty() || a2.empty())
                    throw ParseError("saddle needs two arc= arguments");
                CobordSaddle s;
                auto spot = [](const std::string& v) {
                    auto colon = v.find(':');
                    if (colon == std::string::npos)
                        return Spot{0, static_cast<std::size_t>(std::stoull(v))};
                    return Spot{std::stoi(v.substr(0, colon)),
                                static_cast<std::size_t>(
                                    std::stoull(v.substr(colon + 1)))};
                };
                s.arc1 = spot(a1);
                s.arc2 = spot(a2);
                cert.steps.emplace_back(s);
            } else {
                cert.steps.emplace_back(parse_move(line));
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(no) + ": " + e.what());
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(no) + ": bad step (" +
                             e.what() + ")");
        }
    }
    return cert;
}

std::string serialize(const CobordismCertificate& c) {
    std::string out = "start: " + serialize(c.start) + "\n";
    out += "claim: " + to_string(c.claim) + "\n";
    for (const CobordStep& step : c.steps) {
        out += std::visit(
            [](const auto& v) -> std::string {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, CobordBirth>) {
                    return "birth";
                } else if constexpr (std::is_same_v<T, CobordDeath>) {
                    return "death circle=" + std::to_string(v.circle);
                } else if constexpr (std::is_same_v<T, CobordSaddle>) {
                    return "saddle arc=" + qualified(v.arc1) + " arc=" +
                           qualified(v.arc2);
                } else {
                    return serialize(v);
                }
            },
            step);
        out += "\n";
    }
    return out;
}

std::string CertificateReport::to_string() const {
    std::string out;
    out += std::string("valid: ") + (valid ? "yes" : "no") + "\n";
    out += "births: " + std::to_string(births) + "\n";
    out += "saddles: " + std::to_string(saddles) + "\n";
    out += "deaths: " + std::to_string(deaths) + "\n";
    out += "euler: " + std::to_string(euler) + "\n";
    out += std::string("connected: ") + (connected ? "yes" : "no") + "\n";
    if (genus) out += "genus: " + std::to_string(*genus) + "\n";
    if (!component_euler.empty()) {
        out += "component_euler:";
        for (long long e : component_euler) out += " " + std::to_string(e);
        out += "\n";
    }
    out += "end: " + serialize(end_state) + "\n";
    if (!valid) {
        if (failure_step)
            out += "failure_step: " + std::to_string(*failure_step) + "\n";
        out += "failure: " + failure_reason + "\n";
    }
    return out;
}

std::string CertificateReport::to_json() const {
    nlohmann::json j;
    j["valid"] = valid;
    j["births"] = births;
    j["saddles"] = saddles;
    j["deaths"] = deaths;
    j["euler"] = euler;
    j["connected"] = connected;
    if (genus) j["genus"] = *genus;
    if (!component_euler.empty()) j["component_euler"] = component_euler;
    j["end"] = serialize(end_state);
    if (!valid) {
        if (failure_step) j["failure_step"] = *failure_step;
        j["failure"] = failure_reason;
    }
    return j.dump(2);
}

} // namespace vknot
