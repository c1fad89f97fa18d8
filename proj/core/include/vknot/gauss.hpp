#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

enum class Role { Over, Under };

// One chord endpoint as it appears on the circle.
struct Endpoint {
    int id = 0;
    Role role = Role::Over;

    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Positions of the two endpoints of one chord in the cyclic word.
struct ChordPos {
    std::size_t over = 0;
    std::size_t under = 0;

    friend bool operator==(const ChordPos&, const ChordPos&) = default;
};

// A knot presented as a Gauss diagram: a cyclic word of 2n endpoints on an
// oriented circle together with a sign for each chord.  Position 0 is the
// basepoint; rotations of the word present the same diagram with a moved
// basepoint.
class GaussDiagram {
public:
    GaussDiagram() = default;

    // Validates that every id occurs exactly once as Over and once as Under
    // and that every chord has a sign.  Throws DomainError otherwise.
    GaussDiagram(std::vector<Endpoint> word, std::map<int, int> signs);

    const std::vector<Endpoint>& word() const { return word_; }
    const std::map<int, int>& signs() const { return signs_; }

    std::size_t length() const { return word_.size(); }
    std::size_t chord_count() const { return signs_.size(); }

    int sign(int id) const;
    ChordPos chord_positions(int id) const;
    // Position of the other endpoint of the chord through position p.
    std::size_t partner(std::size_t p) const;

    // Chord ids in ascending order.
    std::vector<int> chord_ids() const;

    friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

private:
    std::vector<Endpoint> word_;
    std::map<int, int> signs_;
    std::map<int, ChordPos> positions_;
};

// Parses text such as "O1+ U2- O2- U1+".  Tokens are separated by
// whitespace; '#' starts a comment running to end of line.  The empty word
// parses to the trivial diagram.  Throws ParseError with the offending
// token quoted.
GaussDiagram parse_gauss_code(const std::string& text);

// Inverse of parse_gauss_code: "O1+ U2- ..." with single spaces, or "" for
// the trivial diagram.
std::string serialize(const GaussDiagram& d);

// The representative with lexicographically least serialization over all
// rotations, chords renumbered by first occurrence.  Two diagrams present
// the same cyclically ordered chord data iff their canonical forms are
// identical.
GaussDiagram canonical_form(const GaussDiagram& d);

// serialize(canonical_form(d)) — the comparison key used throughout.
std::string canonical_code(const GaussDiagram& d);

// Renumbers chords 1..n in order of first occurrence, keeping the basepoint.
GaussDiagram renumbered(const GaussDiagram& d);

// Rotates the basepoint so that old position r becomes position 0.
GaussDiagram rotated(const GaussDiagram& d, std::size_t r);

// Reverses the orientation of the circle (roles and signs kept).
GaussDiagram reversed(const GaussDiagram& d);

// Unordered pairs {x, a} of chord ids whose endpoints alternate around the
// circle.
class Interlacement {
public:
    explicit Interlacement(const GaussDiagram& d);

    bool interlaced(int x, int a) const;
    // Chords interlacing x, ascending.
    std::vector<int> neighbours(int x) const;
    std::size_t pair_count() const { return pairs_.size(); }

private:
    std::set<std::pair<int, int>> pairs_;
    std::map<int, std::vector<int>> neighbours_;
};

// Joins two diagrams at cut points: the word of d2, rotated to start at
// cut2, is spliced into d1 at cut1.  Cut k names the gap before word
// position k; a word of length L has gaps 0..L-1, except the trivial
// diagram whose single gap is 0.  Chord ids of d2 are shifted above those
// of d1.
GaussDiagram connected_sum(const GaussDiagram& d1, const GaussDiagram& d2,
                           std::size_t cut1, std::size_t cut2);

} // namespace vknot
