#include "vknot/random.hpp"

#include <map>
#include <utility>

#include "vknot/errors.hpp"
#include "vknot/moves.hpp"

namespace vknot {

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw DomainError("empty range");
    const std::uint64_t reject_below = (0 - n) % n;
    for (;;) {
        const std::uint64_t v = gen_();
        if (v >= reject_below) return v % n;
    }
}

GaussDiagram random_diagram(Rng& rng, std::size_t max_chords) {
    const std::size_t n = rng.below(max_chords + 1);
    std::vector<std::size_t> slots(2 * n);
    for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
    for (std::size_t i = slots.size(); i > 1; --i)
        std::swap(slots[i - 1], slots[rng.below(i)]);

    std::vector<Endpoint> word(2 * n);
    std::map<int, int> signs;
    for (std::size_t c = 0; c < n; ++c) {
        const int id = static_cast<int>(c) + 1;
        const bool over_first = rng.below(2) == 0;
        word[slots[2 * c]] = {id, over_first ? Role::Over : Role::Under};
        word[slots[2 * c + 1]] = {id, over_first ? Role::Under : Role::Over};
        signs[id] = rng.pick_sign();
    }
    return GaussDiagram(word, signs);
}

Pattern random_pattern(Rng& rng, int max_strands, int max_tangle) {
    if (max_strands < 1) throw DomainError("need at least one strand");
    Pattern pat;
    pat.strands = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_strands)));
    for (int i = 0; i < pat.strands; ++i)
        pat.orientations.push_back(rng.pick_sign());
    if (pat.strands >= 2) {
        const std::size_t len = rng.below(static_cast<std::size_t>(max_tangle) + 1);
        for (std::size_t i = 0; i < len; ++i) {
            BraidLetter letter;
            letter.pos = 1 + static_cast<int>(
                                 rng.below(static_cast<std::size_t>(pat.strands) - 1));
            letter.sign = rng.pick_sign();
            pat.tangle.push_back(letter);
        }
    }
    return pat;
}

Pattern random_pattern_with_winding(Rng& rng, int r, int max_strands,
                                    int max_tangle) {
    if (r < 0 || r > max_strands)
        throw DomainError("winding " + std::to_string(r) +
                          " unreachable with " + std::to_string(max_strands) +
                          " strands");
    for (;;) {
        Pattern pat = random_pattern(rng, max_strands, max_tangle);
        if (winding(pat) == r && pattern_closes(pat)) return pat;
    }
}

CobordismCertificate random_concordance_certificate(Rng& rng,
                                                    const GaussDiagram& start,
                                                    int rounds,
                                                    std::size_t max_chords) {
    CobordismCertificate cert;
    cert.start = start;
    cert.claim = CobordismClaim::Concordance;

    MultiDiagram state(start);
    auto push = [&](CobordStep step) {
        state = apply_step(state, step);
        cert.steps.push_back(std::move(step));
    };

    for (int round = 0; round < rounds; ++round) {
        const GaussDiagram d = state.to_gauss();
        const std::size_t gaps = d.length() == 0 ? 1 : d.length();
        switch (rng.below(3)) {
            case 0: {
                std::vector<Move> moves = enumerate_moves(d);
                std::erase_if(moves, [&](const Move& mv) {
                    if (std::holds_alternative<R1Add>(mv))
                        return d.chord_count() + 1 > max_chords;
                    if (std::holds_alternative<R2Add>(mv))
                        return d.chord_count() + 2 > max_chords;
                    return false;
                });
                if (!moves.empty()) push(moves[rng.below(moves.size())]);
                break;
            }
            case 1: {
                // pinch off an empty circle, then kill it
                const Spot arc{0, rng.below(gaps)};
                push(CobordSaddle{arc, arc});
                push(CobordDeath{0});
                break;
            }
            default: {
                // birth a circle, then merge it straight back
                push(CobordBirth{});
                push(CobordSaddle{Spot{0, rng.below(gaps)}, Spot{1, 0}});
                break;
            }
        }
    }
    return cert;
}

} // namespace vknot
