#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

// A point of a multi-circle diagram: endpoint position `pos` on circle
// `circle`.  Used both for endpoints and, read as "the gap before pos",
// for arcs.  An empty circle has the single gap 0.
struct Spot {
    int circle = 0;
    std::size_t pos = 0;

    friend auto operator<=>(const Spot&, const Spot&) = default;
};

// Gauss data spread over several oriented circles, as arises midway
// through a cobordism.  Chords may join different circles; a circle with
// an empty word is crossing-free.
class MultiDiagram {
public:
    MultiDiagram() = default;
    explicit MultiDiagram(const GaussDiagram& d);
    // Validates like GaussDiagram: each id once Over and once Under across
    // all circles, and a sign in {+1,-1} per chord.
    MultiDiagram(std::vector<std::vector<Endpoint>> circles, std::map<int, int> signs);

    const std::vector<std::vector<Endpoint>>& circles() const { return circles_; }
    const std::vector<Endpoint>& circle(std::size_t i) const;
    const std::map<int, int>& signs() const { return signs_; }

    std::size_t circle_count() const { return circles_.size(); }
    std::size_t chord_count() const { return signs_.size(); }
    int sign(int id) const;
    std::vector<int> chord_ids() const;
    int max_chord_id() const;

    const Endpoint& at(Spot s) const;
    // The other endpoint of the chord through s.
    Spot partner(Spot s) const;
    // Over and under endpoint of one chord.
    std::pair<Spot, Spot> chord_spots(int id) const;

    std::size_t gap_count(std::size_t circle) const;
    bool valid_arc(Spot s) const;
    bool crossing_free(std::size_t circle) const;

    // Requires exactly one circle; no chord can span circles then.
    GaussDiagram to_gauss() const;

    friend bool operator==(const MultiDiagram&, const MultiDiagram&) = default;

private:
    std::vector<std::vector<Endpoint>> circles_;
    std::map<int, int> signs_;
    std::map<int, std::pair<Spot, Spot>> spots_; // id -> (over, under)
};

// "(O1+ U1+)(O2+ U2+)" with one parenthesized word per circle, "()" for a
// crossing-free circle.  Display form for reports and tests.
std::string serialize(const MultiDiagram& m);

std::string serialize(Spot s);

} // namespace vknot
