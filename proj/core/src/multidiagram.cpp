#include "vknot/multidiagram.hpp"

#include "vknot/errors.hpp"

namespace vknot {

MultiDiagram::MultiDiagram(const GaussDiagram& d)
    : MultiDiagram({d.word()}, d.signs()) {}

MultiDiagram::MultiDiagram(std::vector<std::vector<Endpoint>> circles,
                           std::map<int, int> signs)
    : circles_(std::move(circles)), signs_(std::move(signs)) {
    std::map<int, Spot> over_seen, under_seen;
    for (std::size_t c = 0; c < circles_.size(); ++c) {
        for (std::size_t p = 0; p < circles_[c].size(); ++p) {
            const Endpoint& e = circles_[c][p];
            auto& seen = (e.role == Role::Over) ? over_seen : under_seen;
            auto [it, fresh] = seen.try_emplace(e.id, Spot{static_cast<int>(c), p});
            (void)it;
            if (!fresh)
                throw DomainError("duplicate endpoint for chord " + std::to_string(e.id));
        }
    }
    for (const auto& [id, os] : over_seen) {
        auto it = under_seen.find(id);
        if (it == under_seen.end())
            throw DomainError("chord " + std::to_string(id) + " has no under endpoint");
        spots_[id] = {os, it->second};
    }
    for (const auto& [id, us] : under_seen) {
        (void)us;
        if (!over_seen.count(id))
            throw DomainError("chord " + std::to_string(id) + " has no over endpoint");
    }
    for (const auto& [id, sp] : spots_) {
        (void)sp;
        auto it = signs_.find(id);
        if (it == signs_.end())
            throw DomainError("chord " + std::to_string(id) + " has no sign");
        if (it->second != 1 && it->second != -1)
            throw DomainError("chord " + std::to_string(id) + " has sign outside {+1,-1}");
    }
    if (signs_.size() != spots_.size())
        throw DomainError("sign table mentions chords absent from the words");
}

const std::vector<Endpoint>& MultiDiagram::circle(std::size_t i) const {
    if (i >= circles_.size())
        throw DomainError("no circle " + std::to_string(i));
    return circles_[i];
}

int MultiDiagram::sign(int id) const {
    auto it = signs_.find(id);
    if (it == signs_.end())
        throw DomainError("unknown chord " + std::to_string(id));
    return it->second;
}

std::vector<int> MultiDiagram::chord_ids() const {
    std::vector<int> ids;
    ids.reserve(signs_.size());
    for (const auto& [id, s] : signs_) {
        (void)s;
        ids.push_back(id);
    }
    return ids;
}

int MultiDiagram::max_chord_id() const {
    return signs_.empty() ? 0 : signs_.rbegin()->first;
}

const Endpoint& MultiDiagram::at(Spot s) const {
    const auto& w = circle(static_cast<std::size_t>(s.circle));
    if (s.pos >= w.size())
        throw DomainError("position out of range on circle " + std::to_string(s.circle));
    return w[s.pos];
}

Spot MultiDiagram::partner(Spot s) const {
    const Endpoint& e = at(s);
    auto [over, under] = spots_.at(e.id);
    return (s == over) ? under : over;
}

std::pair<Spot, Spot> MultiDiagram::chord_spots(int id) const {
    auto it = spots_.find(id);
    if (it == spots_.end())
        throw DomainError("unknown chord " + std::to_string(id));
    return it->second;
}

std::size_t MultiDiagram::gap_count(std::size_t circle_index) const {
    const auto& w = circle(circle_index);
    return w.empty() ? 1 : w.size();
}

bool MultiDiagram::valid_arc(Spot s) const {
    if (s.circle < 0 || static_cast<std::size_t>(s.circle) >= circles_.size())
        return false;
    return s.pos < gap_count(static_cast<std::size_t>(s.circle));
}

bool MultiDiagram::crossing_free(std::size_t circle_index) const {
    return circle(circle_index).empty();
}

GaussDiagram MultiDiagram::to_gauss() const {
    if (circles_.size() != 1)
        throw DomainError("diagram has " + std::to_string(circles_.size()) +
                          " circles, not 1");
    return GaussDiagram(circles_[0], signs_);
}

std::string serialize(const MultiDiagram& m) {
    std::string out;
    for (std::size_t c = 0; c < m.circle_count(); ++c) {
        out.push_back('(');
        bool first = true;
        for (const Endpoint& e : m.circle(c)) {
            if (!first) out.push_back(' ');
            first = false;
            out.push_back(e.role == Role::Over ? 'O' : 'U');
            out += std::to_string(e.id);
            out.push_back(m.sign(e.id) > 0 ? '+' : '-');
        }
        out.push_back(')');
    }
    return out;
}

std::string serialize(Spot s) {
    if (s.circle == 0) return std::to_string(s.pos);
    return std::to_string(s.circle) + ":" + std::to_string(s.pos);
}

} // namespace vknot
