#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "vknot/multidiagram.hpp"

namespace vknot {

// Inserts a kink chord on the arc: both endpoints adjacent, no
// interlacements.  `over_first` chooses whether the Over endpoint comes
// first along the arc.
struct R1Add {
    Spot arc;
    int sign = 1;
    bool over_first = true;

    friend bool operator==(const R1Add&, const R1Add&) = default;
};

// Removes a chord whose endpoints are cyclically adjacent.
struct R1Remove {
    int chord = 0;

    friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

// Pokes one arc across another, creating two opposite-sign chords x, y.
// At arc1 the pair [x, y] is inserted with the role given by over_first;
// at arc2 the complementary-role pair follows the same order when
// `parallel`, reversed otherwise.  arc1 == arc2 is allowed (the arc pokes
// across itself); the arc1 pair is laid down first.  sign_first is x's
// sign, y gets the opposite.
struct R2Add {
    Spot arc1, arc2;
    bool over_first = true;
    bool parallel = true;
    int sign_first = 1;

    friend bool operator==(const R2Add&, const R2Add&) = default;
};

// Removes two opposite-sign chords whose four endpoints form two disjoint
// adjacent-position pairs, each pair holding one endpoint of each chord in
// equal roles.
struct R2Remove {
    int chord1 = 0, chord2 = 0;

    friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

// Slides a strand across a crossing.  Each site names an adjacent position
// pair (pos, pos+1) holding endpoints of two of the three chords involved;
// the move swaps the two endpoints within every site.  Self-inverse.
struct R3 {
    Spot site1, site2, site3;

    friend bool operator==(const R3&, const R3&) = default;
};

using Move = std::variant<R1Add, R1Remove, R2Add, R2Remove, R3>;

// One-line forms:
//   R1_add arc=3 sign=+ order=OU
//   R1_remove chord=2
//   R2_add arc=5 arc=9 signs=+- config=a
//   R2_remove chord=1 chord=4
//   R3 site=0 site=2 site=4
// Position spots on circle 0 print bare; otherwise "circle:pos".  The
// R2_add config letter packs (over_first, parallel): a=(O,par) b=(O,anti)
// c=(U,par) d=(U,anti).
std::string serialize(const Move& m);
Move parse_move(const std::string& line);

// Every structurally legal move at every location, removals and R3s
// exhaustively, additions with all sign/orientation parameters per arc
// (and arc pair).
std::vector<Move> enumerate_moves(const MultiDiagram& m);
std::vector<Move> enumerate_moves(const GaussDiagram& d);

// Applies the move, throwing DomainError when it is not legal at the
// stated location.
MultiDiagram apply_move(const MultiDiagram& m, const Move& mv);
GaussDiagram apply_move(const GaussDiagram& d, const Move& mv);

// The move that undoes mv, phrased against apply_move(before, mv).
// Applying it there recovers a diagram with the canonical form of
// `before`.
Move inverse_move(const MultiDiagram& before, const Move& mv);
Move inverse_move(const GaussDiagram& before, const Move& mv);

// Applies `steps` legal moves chosen uniformly (additions weighted by
// their parameter count, capped so the chord count never exceeds max_n);
// a step with no legal move is the identity.  Deterministic in seed.
GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps,
                         std::uint64_t seed, std::size_t max_n = 32);

} // namespace vknot
