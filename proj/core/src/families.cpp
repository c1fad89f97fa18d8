#include "vknot/families.hpp"

#include <map>
#include <numeric>

#include <json.hpp>

#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

GaussDiagram torus_code(int m) {
    if (m < 1 || m % 2 == 0)
        throw DomainError("torus code needs an odd m >= 1, got " +
                          std::to_string(m));
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    for (int i = 1; i <= m; ++i) {
        word.push_back({i, i % 2 == 1 ? Role::Over : Role::Under});
        signs[i] = 1;
    }
    for (int i = 1; i <= m; ++i)
        word.push_back({i, i % 2 == 1 ? Role::Under : Role::Over});
    return GaussDiagram(word, signs);
}

GaussDiagram clasp_block(int p, int q) {
    if (p == 0 || q == 0)
        throw DomainError("clasp block needs nonzero p and q");
    const long long P = p < 0 ? -static_cast<long long>(p) : p;
    const long long Q = q < 0 ? -static_cast<long long>(q) : q;
    if (std::gcd(P, Q) != 1)
        throw DomainError("clasp block needs gcd(|p|,|q|)=1, got gcd(" +
                          std::to_string(P) + "," + std::to_string(Q) + ")");

    // The curve crosses the grid in 2|pq| passes, alternating a horizontal
    // pass (both over endpoints of that box's clasp) with a vertical pass
    // (both under endpoints). gcd=1 sends each pass type through every box
    // exactly once.
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    std::map<std::pair<long long, long long>, std::pair<int, int>> box_ids;
    int next_id = 1;
    auto clasp = [&](long long a, long long b) -> std::pair<int, int>& {
        auto [it, fresh] = box_ids.try_emplace({a, b}, 0, 0);
        if (fresh) {
            it->second = {next_id, next_id + 1};
            signs[next_id] = 1;
            signs[next_id + 1] = 1;
            next_id += 2;
        }
        return it->second;
    };
    for (long long k = 0; k < P * Q; ++k) {
        const auto& [hu, hv] = clasp(k % P, (k + 1) % Q);
        word.push_back({hu, Role::Over});
        word.push_back({hv, Role::Over});
        const auto& [vu, vv] = clasp((k + 1) % P, (k + 1) % Q);
        word.push_back({vu, Role::Under});
        word.push_back({vv, Role::Under});
    }
    return GaussDiagram(word, signs);
}

namespace {

void validate_spec(const FamilySpec& spec) {
    if (spec.g < 1) throw DomainError("family needs g >= 1");
    if (static_cast<int>(spec.pairs.size()) != spec.g)
        throw DomainError("family needs exactly g (p,q) pairs");
    if (spec.k < 1) throw DomainError("family needs k >= 1");
    for (const auto& [p, q] : spec.pairs) {
        if (p == 0 || q == 0) throw DomainError("family pair with zero entry");
        if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
            throw DomainError("family pair violates gcd(|p|,|q|)=1");
    }
}

long long pair_weight(const FamilySpec& spec) {
    long long sum = 0;
    for (const auto& [p, q] : spec.pairs) {
        const long long prod = static_cast<long long>(p) * q;
        sum += prod < 0 ? -prod : prod;
    }
    return sum;
}

} // namespace

GaussDiagram family_generator(const FamilySpec& spec) {
    validate_spec(spec);
    std::vector<Endpoint> word;
    std::map<int, int> signs;
    int shift = 0;
    auto append = [&](const GaussDiagram& block) {
        for (Endpoint e : block.word()) word.push_back({e.id + shift, e.role});
        for (const auto& [id, s] : block.signs()) signs[id + shift] = s;
        shift = signs.rbegin()->first;
    };
    for (const auto& [p, q] : spec.pairs) append(clasp_block(p, q));
    append(torus_code(2 * spec.k + 1));
    return GaussDiagram(word, signs);
}

FamilyReport family_distinguisher(const FamilySpec& spec, int k_max) {
    if (k_max < 2) throw DomainError("distinguisher needs k_max >= 2");
    validate_spec(spec);

    FamilyReport rep;
    rep.spec = spec;
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        if (i) rep.homology_class += " + ";
        rep.homology_class += std::to_string(spec.pairs[i].first) + "*a" +
                              std::to_string(i + 1) + " + " +
                              std::to_string(spec.pairs[i].second) + "*b" +
                              std::to_string(i + 1);
    }
    rep.expected_ht.add_term(1, 2 * pair_weight(spec));

    rep.ht_constant = true;
    rep.genus_steps = true;
    for (int k = 1; k <= k_max; ++k) {
        FamilySpec member = spec;
        member.k = k;
        const GaussDiagram d = family_generator(member);
        FamilyRow row;
        row.k = k;
        row.chords = d.chord_count();
        row.ht = ht_polynomial(d);
        row.genus = slice_genus_positive(d);
        if (!(row.ht == rep.expected_ht)) rep.ht_constant = false;
        if (!rep.rows.empty() && row.genus != rep.rows.back().genus + 1)
            rep.genus_steps = false;
        rep.rows.push_back(std::move(row));
    }
    rep.nonsplit = !rep.rows.front().ht.is_zero();
    return rep;
}

std::string FamilyReport::to_string() const {
    std::string out = "family: g=" + std::to_string(spec.g) + " pairs=";
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.pairs[i].first) + ":" +
               std::to_string(spec.pairs[i].second);
    }
    out += "\nh: " + homology_class + "\n";
    out += "expected_ht: " + expected_ht.to_string() + "\n";
    for (const FamilyRow& row : rows)
        out += "k=" + std::to_string(row.k) +
               ": chords=" + std::to_string(row.chords) +
               " ht=" + row.ht.to_string() +
               " genus=" + std::to_string(row.genus) + "\n";
    out += std::string("ht_constant: ") + (ht_constant ? "yes" : "no") + "\n";
    out += std::string("genus_steps: ") + (genus_steps ? "yes" : "no") + "\n";
    out += std::string("nonsplit: ") + (nonsplit ? "yes" : "no") + "\n";
    return out;
}

std::string FamilyReport::to_json() const {
    nlohmann::json j;
    j["g"] = spec.g;
    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (const auto& [p, q] : spec.pairs) pairs.push_back({p, q});
    j["h"] = homology_class;
    j["expected_ht"] = expected_ht.to_string();
    auto& rows_json = j["rows"] = nlohmann::json::array();
    for (const FamilyRow& row : rows)
        rows_json.push_back({{"k", row.k},
                             {"chords", row.chords},
                             {"ht", row.ht.to_string()},
                             {"genus", row.genus}});
    j["ht_constant"] = ht_constant;
    j["genus_steps"] = genus_steps;
    j["nonsplit"] = nonsplit;
    return j.dump(2);
}

} // namespace vknot
