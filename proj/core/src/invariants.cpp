#include "vknot/invariants.hpp"

#include <vector>

#include "vknot/errors.hpp"

namespace vknot {

int chord_index(const GaussDiagram& d, int id) {
    const std::size_t n2 = d.length();
    const ChordPos x = d.chord_positions(id);
    // Open arc from x's under endpoint to x's over endpoint, following the
    // circle orientation.
    const std::size_t arc_len = (x.over + n2 - x.under) % n2;
    auto in_arc = [&](std::size_t q) {
        const std::size_t off = (q + n2 - x.under) % n2;
        return 0 < off && off < arc_len;
    };

    int sum = 0;
    for (int a : d.chord_ids()) {
        if (a == id) continue;
        const ChordPos pa = d.chord_positions(a);
        if (in_arc(pa.over) == in_arc(pa.under)) continue; // not interlaced
        sum += d.sign(a) * (in_arc(pa.under) ? 1 : -1);
    }
    return sum;
}

std::map<int, int> index_table(const GaussDiagram& d) {
    std::map<int, int> out;
    for (int id : d.chord_ids()) out[id] = chord_index(d, id);
    return out;
}

HTPolynomial ht_polynomial(const GaussDiagram& d) {
    HTPolynomial w;
    for (const auto& [id, idx] : index_table(d)) {
        if (idx == 0) continue;
        w.add_term(idx < 0 ? -idx : idx, d.sign(id));
    }
    return w;
}

std::size_t seifert_circle_count(const GaussDiagram& d) {
    const std::size_t n2 = d.length();
    if (n2 == 0) return 1;
    // Gap i sits before word position i.  Smoothing sends the strand
    // entering a crossing to the strand leaving its partner, so gap i maps
    // to the gap after the partner of position i.
    std::vector<bool> seen(n2, false);
    std::size_t circles = 0;
    for (std::size_t start = 0; start < n2; ++start) {
        if (seen[start]) continue;
        ++circles;
        std::size_t g = start;
        while (!seen[g]) {
            seen[g] = true;
            g = (d.partner(g) + 1) % n2;
        }
    }
    return circles;
}

bool is_positive(const GaussDiagram& d) {
    for (const auto& [id, s] : d.signs()) {
        (void)id;
        if (s < 0) return false;
    }
    return true;
}

int slice_genus_positive(const GaussDiagram& d) {
    if (!is_positive(d))
        throw DomainError("genus formula requires a positive diagram");
    const int n = static_cast<int>(d.chord_count());
    const int r = static_cast<int>(seifert_circle_count(d));
    return (n - r + 1) / 2;
}

} // namespace vknot
