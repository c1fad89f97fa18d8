#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot {

// One-sided verdicts: the invariants can certify that no concordance (or
// disc, or splitting sphere) exists, never that one does.
enum class Verdict { Obstructed, Inconclusive };

std::string to_string(Verdict v);

struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string cited_claim; // which invariance statement is being invoked
    std::string reason;
    std::vector<std::pair<std::string, std::string>> evidence;

    std::string to_string() const;
    std::string to_json() const;
};

// Distinct w rules out semi-fibered concordance of the underlying links.
ObstructionReport obstruct_sf_concordance(const GaussDiagram& d0,
                                          const GaussDiagram& d1);

// Nonzero w — or positive genus of a positive diagram — rules out a slice
// disc for the knot component in the complement of the other component.
ObstructionReport obstruct_slice_disc(const GaussDiagram& d);

// Nonzero w rules out a ribbon disc in the complement.
ObstructionReport obstruct_ribbon_disc(const GaussDiagram& d);

// Nonzero w certifies the link is non-split.
ObstructionReport obstruct_split(const GaussDiagram& d);

// Distinct w of the companions rules out semi-fibered concordance of their
// satellites by any pattern with winding number r != 0. r = 0 patterns can
// identify distinct classes, so the verdict is inconclusive there.
ObstructionReport obstruct_satellite_injectivity(const GaussDiagram& d0,
                                                 const GaussDiagram& d1,
                                                 int r);

} // namespace vknot
