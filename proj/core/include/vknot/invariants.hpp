#pragma once

#include <map>

#include "vknot/gauss.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

// Affine index of one chord: the signed count of interlacing chords, each
// weighted by which side of x's under-to-over arc its under endpoint lies
// on.  Classical (planar-realizable) diagrams have every index zero.
int chord_index(const GaussDiagram& d, int id);

// Index of every chord, keyed by id.
std::map<int, int> index_table(const GaussDiagram& d);

// The index-weight polynomial w(t) = sum over chords of nonzero index of
// sign(x) * t^|index(x)|.  Invariant under the diagram moves and zero on
// classical diagrams.
HTPolynomial ht_polynomial(const GaussDiagram& d);

// Number of cycles traced by following each strand segment and switching
// to the partner strand at every chord, i.e. the circles obtained by
// smoothing every crossing with the orientation.
std::size_t seifert_circle_count(const GaussDiagram& d);

bool is_positive(const GaussDiagram& d);

// Genus of the surface built from the smoothed circles and crossing bands,
// (n - r + 1) / 2 for n chords and r circles.  Defined for positive
// diagrams; throws DomainError otherwise.
int slice_genus_positive(const GaussDiagram& d);

} // namespace vknot
