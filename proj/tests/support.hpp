#pragma once

#include <numeric>
#include <vector>

#include "vknot/gauss.hpp"

namespace vknot_tests {

// Independent Seifert-circle counter: simulate the oriented smoothing with
// a union-find over the 2n gaps between endpoints. At a chord with
// positions (a, b), the strand entering a continues as the strand leaving
// b and vice versa, so gap a joins gap b+1 and gap b joins gap a+1.
inline std::size_t oracle_seifert_count(const vknot::GaussDiagram& d) {
    const std::size_t len = d.length();
    if (len == 0) return 1;
    std::vector<std::size_t> parent(len);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (int id : d.chord_ids()) {
        const auto [over, under] = d.chord_positions(id);
        unite(over, (under + 1) % len);
        unite(under, (over + 1) % len);
    }
    std::size_t circles = 0;
    for (std::size_t g = 0; g < len; ++g)
        if (find(g) == g) ++circles;
    return circles;
}

} // namespace vknot_tests
