#include <doctest.h>

#include <set>
#include <string>

#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/random.hpp"

using namespace vknot;

TEST_SUITE("gauss") {

TEST_CASE("virtual trefoil parses") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(d.chord_count() == 2);
    CHECK(d.length() == 4);
    CHECK(d.sign(1) == 1);
    CHECK(d.sign(2) == 1);
    const ChordPos c1 = d.chord_positions(1);
    CHECK(c1.over == 0);
    CHECK(c1.under == 2);
    CHECK(d.partner(0) == 2);
    CHECK(serialize(d) == "O1+ O2+ U1+ U2+");
}

TEST_CASE("empty code is the trivial knot") {
    const GaussDiagram d = parse_gauss_code("");
    CHECK(d.chord_count() == 0);
    CHECK(serialize(d).empty());
}

TEST_CASE("comments and arbitrary ids") {
    const GaussDiagram d = parse_gauss_code(
        "O7+ U9- # a comment\nO9- U7+ # ids need not be consecutive");
    CHECK(d.chord_count() == 2);
    CHECK(d.sign(9) == -1);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_gauss_code("O1+ U1"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("X1+ U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("O1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("O1+ O1+ U1+ U1+"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("O1+ U1-"), ParseError);
    CHECK_THROWS_AS(parse_gauss_code("O0+ U0+"), ParseError);
    try {
        parse_gauss_code("O1+ U1-");
        CHECK(false);
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 1") != std::string::npos);
    }
}

TEST_CASE("rotation and reversal") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const GaussDiagram r = rotated(d, 1);
    CHECK(serialize(r) == "O2+ U1+ U2+ O1+");
    CHECK(serialize(rotated(d, 4)) == serialize(d));
    CHECK(serialize(reversed(reversed(d))) == serialize(d));
}

TEST_CASE("renumbering by first occurrence") {
    const GaussDiagram d = parse_gauss_code("O5- U3+ O3+ U5-");
    CHECK(serialize(renumbered(d)) == "O1- U2+ O2+ U1-");
}

TEST_CASE("canonical form is rotation invariant") {
    const GaussDiagram d = parse_gauss_code("O3+ U5- O5- U3+");
    const std::string code = canonical_code(d);
    for (std::size_t k = 0; k < d.length(); ++k)
        CHECK(canonical_code(rotated(d, k)) == code);
    CHECK(serialize(canonical_form(d)) == code);
}

TEST_CASE("canonical form identifies relabeled rotations") {
    const GaussDiagram a = parse_gauss_code("O1+ O2+ U1+ U2+");
    const GaussDiagram b = parse_gauss_code("U7+ O9+ O7+ U9+");
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("canonicalization is idempotent on randoms") {
    Rng rng(411);
    for (int i = 0; i < 200; ++i) {
        const GaussDiagram d = random_diagram(rng, 6);
        const GaussDiagram c = canonical_form(d);
        CHECK(canonical_form(c) == c);
        CHECK(serialize(c) == canonical_code(d));
    }
}

TEST_CASE("interlacement of the virtual trefoil") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const Interlacement inter(d);
    CHECK(inter.interlaced(1, 2));
    CHECK(inter.pair_count() == 1);
    CHECK(inter.neighbours(1) == std::vector<int>{2});
}

TEST_CASE("trefoil chords are pairwise interlaced") {
    const GaussDiagram d = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    const Interlacement inter(d);
    CHECK(inter.pair_count() == 3);
    CHECK(inter.interlaced(1, 2));
    CHECK(inter.interlaced(2, 3));
    CHECK(inter.interlaced(1, 3));
}

TEST_CASE("connected sum splices words and shifts ids") {
    const GaussDiagram a = parse_gauss_code("O1+ U1+");
    const GaussDiagram b = parse_gauss_code("O1- U1-");
    const GaussDiagram s = connected_sum(a, b, 1, 0);
    CHECK(s.chord_count() == 2);
    CHECK(serialize(s) == "O1+ O2- U2- U1+");
    CHECK_THROWS_AS(connected_sum(a, b, 2, 0), DomainError);
}

TEST_CASE("connected sum accepts any cut on a trivial summand") {
    const GaussDiagram t = parse_gauss_code("");
    const GaussDiagram b = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK(serialize(connected_sum(t, b, 0, 0)) == serialize(b));
    CHECK(serialize(connected_sum(t, b, 7, 2)) ==
          serialize(rotated(b, 2)));
    CHECK(serialize(connected_sum(b, t, 3, 9)) == serialize(b));
}

TEST_CASE("connected sum is additive on w") {
    Rng rng(5117);
    for (int i = 0; i < 50; ++i) {
        const GaussDiagram a = random_diagram(rng, 5);
        const GaussDiagram b = random_diagram(rng, 5);
        const std::size_t ga = a.length() == 0 ? 1 : a.length();
        const std::size_t gb = b.length() == 0 ? 1 : b.length();
        const GaussDiagram s =
            connected_sum(a, b, rng.below(ga), rng.below(gb));
        CHECK(ht_polynomial(s) ==
              ht_polynomial(a).added(ht_polynomial(b)));
    }
}

} // TEST_SUITE
