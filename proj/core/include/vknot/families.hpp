#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vknot/gauss.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

// Closed (m,2) torus-knot code, m odd >= 1; m=3 is the positive classical
// trefoil, m=1 a single kink.
GaussDiagram torus_code(int m);

// Grid curve on one handle: |p| strands across |q| strands, each of the
// |pq| intersections realized as a positive two-chord clasp. Needs
// gcd(|p|,|q|) = 1 so the curve closes into a single circle.
GaussDiagram clasp_block(int p, int q);

struct FamilySpec {
    int g = 1;                              // number of handles
    std::vector<std::pair<int, int>> pairs; // one (p_i, q_i) per handle
    int k = 1;                              // torus insert parameter

    bool operator==(const FamilySpec&) const = default;
};

// Connected sum of the g clasp blocks, left to right, with torus_code(2k+1)
// spliced in after the last clasp chord. All chords positive; chord count
// 2*sum|p_i q_i| + 2k+1; ht is 2t*sum|p_i q_i| independent of k.
GaussDiagram family_generator(const FamilySpec& spec);

struct FamilyRow {
    int k = 0;
    std::size_t chords = 0;
    HTPolynomial ht;
    long long genus = 0;
};

// One family member per k = 1..k_max: equal ht pins the family together
// while the slice genus of the positive diagrams climbs by one per step,
// so the members are pairwise distinct.
struct FamilyReport {
    FamilySpec spec;
    std::string homology_class; // sum p_i*a_i + q_i*b_i, metadata only
    HTPolynomial expected_ht;   // 2t * sum |p_i q_i|
    std::vector<FamilyRow> rows;
    bool ht_constant = false;  // every row's ht equals expected_ht
    bool genus_steps = false;  // genus rises by exactly 1 each row
    bool nonsplit = false;     // ht != 0

    std::string to_string() const;
    std::string to_json() const;
};

FamilyReport family_distinguisher(const FamilySpec& spec, int k_max);

} // namespace vknot
