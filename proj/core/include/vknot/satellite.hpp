#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

// One classical braid generator: the strands at levels pos and pos+1 cross
// (levels are 1-based, level 1 on top); sign is the crossing's local writhe.
struct BraidLetter {
    int pos = 1;
    int sign = 1;

    bool operator==(const BraidLetter&) const = default;
};

// A p-strand annular pattern: per-strand orientations (+1 runs with the
// companion, -1 against it) and a classical braid tangle inserted at a
// marked arc. Text form: "p=2 eps=++ tangle=1+,1-"; tangle may be omitted.
struct Pattern {
    int strands = 1;
    std::vector<int> orientations;
    std::vector<BraidLetter> tangle;

    bool operator==(const Pattern&) const = default;
};

Pattern parse_pattern(const std::string& text);
std::string serialize(const Pattern& pat);

// |sum of orientations|: how often the cable winds around the companion.
int winding(const Pattern& pat);

// Replaces the companion circle by p parallel tracks wired through the
// tangle box. Each companion chord x turns into p^2 chords with signs
// sign(x)*eps_i*eps_j; each braid letter contributes one chord carrying its
// own sign. The box sits at insertion_gap (gap g precedes word position g);
// the default 0 is the arc following the highest endpoint position. Throws
// DomainError when the strands cannot close up into a single circle.
GaussDiagram cable(const GaussDiagram& d, const Pattern& pat,
                   std::size_t insertion_gap = 0);

// Whether the pattern's strands close up into a single circle around any
// companion; cable() throws exactly when this is false.
bool pattern_closes(const Pattern& pat);

// Checks ht(cable(d, pat)) == r^2 * ht(d)(t^r) with r = winding(pat).
// Expected true on every valid input; false flags a construction bug.
bool verify_satellite_formula(const GaussDiagram& d, const Pattern& pat);

} // namespace vknot
