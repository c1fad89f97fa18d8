#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vknot/moves.hpp"

namespace vknot {

// Appends a new crossing-free circle.
struct CobordBirth {
    friend bool operator==(const CobordBirth&, const CobordBirth&) = default;
};

// Removes circle `circle`, which must be crossing-free.
struct CobordDeath {
    std::size_t circle = 0;

    friend bool operator==(const CobordDeath&, const CobordDeath&) = default;
};

// Oriented band between two arcs.  On one circle it splits the word in
// two: the piece running from arc1 forward to arc2 keeps the circle's
// index, the complementary piece is appended as the last circle (arc1 ==
// arc2 pinches off a crossing-free circle).  Across two circles it merges
// them into arc1's index, rotating each word to its arc.
struct CobordSaddle {
    Spot arc1, arc2;

    friend bool operator==(const CobordSaddle&, const CobordSaddle&) = default;
};

using CobordStep = std::variant<CobordBirth, CobordDeath, CobordSaddle, Move>;

enum class CobordismClaim { Concordance, Slice, Ribbon, Cobordism };

std::string to_string(CobordismClaim claim);
CobordismClaim parse_claim(const std::string& word);

// A replayable witness: start knot, claimed relation, and the move/surgery
// script.  Claims assert the end state reached by the script:
//   concordance - single circle, #b-#s+#d = 0, connected trace;
//   slice       - additionally the final circle is crossing-free;
//   ribbon      - slice without any births;
//   cobordism   - single circle, no count constraint.
struct CobordismCertificate {
    GaussDiagram start;
    CobordismClaim claim = CobordismClaim::Concordance;
    std::vector<CobordStep> steps;
};

struct CertificateReport {
    bool valid = false;
    std::size_t births = 0, saddles = 0, deaths = 0;
    long long euler = 0; // births + deaths - saddles
    bool connected = false;
    // (saddles - births - deaths)/2; only for a connected trace surface
    // that reaches a single end circle.
    std::optional<long long> genus;
    // Euler characteristic per trace component when disconnected.
    std::vector<long long> component_euler;
    MultiDiagram end_state;
    std::optional<std::size_t> failure_step; // absent for end-state failures
    std::string failure_reason;              // empty when valid

    std::string to_string() const;
    std::string to_json() const;
};

// Applies one step, throwing DomainError when it is illegal.
MultiDiagram apply_step(const MultiDiagram& m, const CobordStep& s);

// Replays the script.  Never throws: failures land in the report with the
// offending step (or, for end-state conditions, no step index).
CertificateReport check_certificate(const CobordismCertificate& c);

// For a valid concordance certificate: does the start knot's index-weight
// polynomial equal the end knot's?  Concordance preserves it, so false
// exposes a bug — callers surface it loudly.  Throws DomainError on an
// invalid certificate or a non-concordance claim.
bool ht_endpoints_check(const CobordismCertificate& c);

// Line format:  `start: <gauss code>`, `claim: <word>`, then one step per
// line: `birth`, `death circle=<i>`, `saddle arc=<c>:<p> arc=<c>:<p>`, or
// a move line.  `#` comments and blank lines are skipped.
CobordismCertificate parse_certificate(const std::string& text);
std::string serialize(const CobordismCertificate& c);

} // namespace vknot
