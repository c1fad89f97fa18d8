#pragma once

#include <cstdint>
#include <random>

#include "vknot/cobordism.hpp"
#include "vknot/gauss.hpp"
#include "vknot/satellite.hpp"

namespace vknot {

// Seed-explicit randomness for the fuzzing surfaces; every stream is fully
// determined by its seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // uniform over [0, n) without modulo bias
    std::size_t below(std::size_t n);

    int pick_sign() { return below(2) == 0 ? 1 : -1; }

    // independent seed for a nested generator
    std::uint64_t fork() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

// Uniformly pairs 2n positions into chords with random roles and signs,
// n drawn from [0, max_chords].
GaussDiagram random_diagram(Rng& rng, std::size_t max_chords);

// Any pattern with p in [1, max_strands] and up to max_tangle braid
// letters; may fail to close into one circle.
Pattern random_pattern(Rng& rng, int max_strands, int max_tangle);

// Rejection-samples closing patterns with the requested winding number;
// needs r <= max_strands.
Pattern random_pattern_with_winding(Rng& rng, int r, int max_strands,
                                    int max_tangle);

// Builds a valid concordance certificate from `start`: rounds of either a
// random rewriting move, a pinch saddle immediately undone by a death, or
// a birth immediately merged back. Counts stay balanced and the trace
// stays connected, so the certificate always checks valid.
CobordismCertificate random_concordance_certificate(Rng& rng,
                                                    const GaussDiagram& start,
                                                    int rounds,
                                                    std::size_t max_chords);

} // namespace vknot
