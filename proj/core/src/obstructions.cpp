#include "vknot/obstructions.hpp"

#include <stdexcept>

#include <json.hpp>

#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

std::string to_string(Verdict v) {
    return v == Verdict::Obstructed ? "obstructed" : "inconclusive";
}

namespace {

// An obstructed verdict must be backed by a freshly recomputed inequality;
// a mismatch here is an internal bug, not bad input.
void assert_sound(const ObstructionReport& rep, bool condition_holds) {
    if (rep.verdict == Verdict::Obstructed && !condition_holds)
        throw std::logic_error("obstruction verdict without a holding " +
                               rep.cited_claim + " hypothesis");
}

} // namespace

ObstructionReport obstruct_sf_concordance(const GaussDiagram& d0,
                                          const GaussDiagram& d1) {
    const HTPolynomial w0 = ht_polynomial(d0);
    const HTPolynomial w1 = ht_polynomial(d1);
    ObstructionReport rep;
    rep.cited_claim = "sf-concordance-ht-invariance";
    rep.evidence = {{"w0", w0.to_string()}, {"w1", w1.to_string()}};
    if (!(w0 == w1)) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "w differs (" + w0.to_string() + " vs " + w1.to_string() +
                     "): the associated virtual knots are not concordant, so "
                     "the links are not semi-fibered concordant";
    } else {
        rep.reason = "w agrees (" + w0.to_string() + "); no conclusion";
    }
    assert_sound(rep, !(ht_polynomial(d0) == ht_polynomial(d1)));
    return rep;
}

ObstructionReport obstruct_slice_disc(const GaussDiagram& d) {
    const HTPolynomial w = ht_polynomial(d);
    const bool positive = is_positive(d);
    const long long genus = positive ? slice_genus_positive(d) : 0;
    ObstructionReport rep;
    rep.cited_claim = "slice-implies-w-zero";
    rep.evidence = {{"w", w.to_string()}};
    if (positive)
        rep.evidence.emplace_back("slice_genus", std::to_string(genus));
    if (!w.is_zero()) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "w = " + w.to_string() +
                     " is nonzero: the knot component bounds no disc in the "
                     "complement of the other component";
    } else if (positive && genus > 0) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "positive diagram with slice genus " +
                     std::to_string(genus) +
                     " > 0: the knot component bounds no disc in the "
                     "complement of the other component";
    } else {
        rep.reason = "w vanishes and no genus evidence applies; no conclusion";
    }
    assert_sound(rep, !ht_polynomial(d).is_zero() ||
                          (positive && slice_genus_positive(d) > 0));
    return rep;
}

ObstructionReport obstruct_ribbon_disc(const GaussDiagram& d) {
    const HTPolynomial w = ht_polynomial(d);
    ObstructionReport rep;
    rep.cited_claim = "ribbon-implies-w-zero";
    rep.evidence = {{"w", w.to_string()}};
    if (!w.is_zero()) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "w = " + w.to_string() +
                     " is nonzero: every ribbon disc for the knot component "
                     "must intersect the other component";
    } else {
        rep.reason = "w vanishes; no conclusion";
    }
    assert_sound(rep, !ht_polynomial(d).is_zero());
    return rep;
}

ObstructionReport obstruct_split(const GaussDiagram& d) {
    const HTPolynomial w = ht_polynomial(d);
    ObstructionReport rep;
    rep.cited_claim = "w-nonzero-implies-nonsplit";
    rep.evidence = {{"w", w.to_string()}};
    if (!w.is_zero()) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "w = " + w.to_string() +
                     " is nonzero, so the associated virtual knot is not "
                     "classical and the link is non-split";
    } else {
        rep.reason = "w vanishes; no conclusion";
    }
    assert_sound(rep, !ht_polynomial(d).is_zero());
    return rep;
}

ObstructionReport obstruct_satellite_injectivity(const GaussDiagram& d0,
                                                 const GaussDiagram& d1,
                                                 int r) {
    if (r < 0) throw DomainError("winding number must be >= 0");
    const HTPolynomial w0 = ht_polynomial(d0);
    const HTPolynomial w1 = ht_polynomial(d1);
    ObstructionReport rep;
    rep.cited_claim = "satellite-winding-ht-formula";
    rep.evidence = {{"r", std::to_string(r)},
                    {"w0", w0.to_string()},
                    {"w1", w1.to_string()}};
    if (r == 0) {
        rep.reason = "winding number 0 patterns can identify distinct "
                     "concordance classes; no conclusion";
    } else if (!(w0 == w1)) {
        rep.verdict = Verdict::Obstructed;
        rep.reason = "w differs (" + w0.to_string() + " vs " + w1.to_string() +
                     ") and the winding number " + std::to_string(r) +
                     " satellite formula keeps them distinct: the satellite "
                     "links are not semi-fibered concordant";
    } else {
        rep.reason = "w agrees (" + w0.to_string() + "); no conclusion";
    }
    assert_sound(rep, r != 0 && !(ht_polynomial(d0) == ht_polynomial(d1)));
    return rep;
}

std::string ObstructionReport::to_string() const {
    std::string out = "verdict: " + vknot::to_string(verdict) + "\n";
    out += "claim: " + cited_claim + "\n";
    out += "reason: " + reason + "\n";
    for (const auto& [key, value] : evidence) out += key + ": " + value + "\n";
    return out;
}

std::string ObstructionReport::to_json() const {
    nlohmann::json j;
    j["verdict"] = vknot::to_string(verdict);
    j["claim"] = cited_claim;
    j["reason"] = reason;
    auto& ev = j["evidence"] = nlohmann::json::object();
    for (const auto& [key, value] : evidence) ev[key] = value;
    return j.dump(2);
}

} // namespace vknot
