#include <doctest.h>

#include <string>
#include <variant>
#include <vector>

#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/multidiagram.hpp"
#include "vknot/random.hpp"

using namespace vknot;

namespace {

template <typename T>
std::size_t count_kind(const std::vector<Move>& moves) {
    std::size_t n = 0;
    for (const Move& mv : moves)
        if (std::holds_alternative<T>(mv)) ++n;
    return n;
}

} // namespace

TEST_SUITE("moves") {

TEST_CASE("trivial diagram offers exactly the twelve additions") {
    const GaussDiagram d = parse_gauss_code("");
    const std::vector<Move> moves = enumerate_moves(d);
    CHECK(moves.size() == 12);
    CHECK(count_kind<R1Add>(moves) == 4);
    CHECK(count_kind<R2Add>(moves) == 8);
    CHECK(count_kind<R1Remove>(moves) == 0);
    CHECK(count_kind<R2Remove>(moves) == 0);
    CHECK(count_kind<R3>(moves) == 0);
}

TEST_CASE("kink offers its unknotting move") {
    const GaussDiagram d = parse_gauss_code("O1+ U1+");
    const std::vector<Move> moves = enumerate_moves(d);
    bool found = false;
    for (const Move& mv : moves)
        if (const auto* rem = std::get_if<R1Remove>(&mv))
            found = found || rem->chord == 1;
    CHECK(found);
}

TEST_CASE("virtual trefoil offers no removals") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const std::vector<Move> moves = enumerate_moves(d);
    CHECK(count_kind<R1Remove>(moves) == 0);
    CHECK(count_kind<R2Remove>(moves) == 0);
}

TEST_CASE("every enumerated move undoes with its inverse") {
    const char* codes[] = {
        "",
        "O1+ U1+",
        "O1+ O2+ U1+ U2+",
        "O1+ U2+ O3+ U1+ O2+ U3+",
        "O1+ O2- U1+ O3- U3- U2-",
    };
    for (const char* code : codes) {
        const GaussDiagram d = parse_gauss_code(code);
        const std::string canon = canonical_code(d);
        for (const Move& mv : enumerate_moves(d)) {
            const GaussDiagram after = apply_move(d, mv);
            const Move inv = inverse_move(d, mv);
            const GaussDiagram back = apply_move(after, inv);
            CHECK(canonical_code(back) == canon);
            if (std::holds_alternative<R1Add>(mv) ||
                std::holds_alternative<R2Add>(mv))
                CHECK(serialize(back) == serialize(d));
        }
    }
}

TEST_CASE("additions preserve w and stay removable") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const auto w = ht_polynomial(d);
    for (const Move& mv : enumerate_moves(d)) {
        if (!std::holds_alternative<R1Add>(mv) &&
            !std::holds_alternative<R2Add>(mv))
            continue;
        const GaussDiagram after = apply_move(d, mv);
        CHECK(ht_polynomial(after) == w);
        const std::vector<Move> undo = enumerate_moves(after);
        if (std::holds_alternative<R1Add>(mv))
            CHECK(count_kind<R1Remove>(undo) > 0);
        else
            CHECK(count_kind<R2Remove>(undo) > 0);
    }
}

TEST_CASE("triangle move on the pinned six-endpoint diagram") {
    const GaussDiagram d = parse_gauss_code("O1+ O2- U1+ O3- U3- U2-");
    const std::vector<Move> moves = enumerate_moves(d);
    const R3 expected{Spot{0, 0}, Spot{0, 2}, Spot{0, 4}};
    bool found = false;
    for (const Move& mv : moves)
        if (const auto* r3 = std::get_if<R3>(&mv))
            found = found || *r3 == expected;
    REQUIRE(found);

    const GaussDiagram after = apply_move(d, Move{expected});
    CHECK(serialize(after) == "O2- O1+ O3- U1+ U2- U3-");
    CHECK(ht_polynomial(d).is_zero());
    CHECK(ht_polynomial(after).is_zero());
    CHECK(serialize(apply_move(after, Move{expected})) == serialize(d));

    const Interlacement before_i(d), after_i(after);
    CHECK(before_i.interlaced(1, 2));
    CHECK(!before_i.interlaced(1, 3));
    CHECK(!before_i.interlaced(2, 3));
    CHECK(!after_i.interlaced(1, 2));
    CHECK(after_i.interlaced(1, 3));
    CHECK(after_i.interlaced(2, 3));
}

TEST_CASE("classical trefoil admits no triangle move") {
    const GaussDiagram d = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
    CHECK(count_kind<R3>(enumerate_moves(d)) == 0);
}

TEST_CASE("move lines serialize and parse back") {
    CHECK(serialize(Move{R1Add{Spot{0, 3}, 1, true}}) ==
          "R1_add arc=3 sign=+ order=OU");
    CHECK(serialize(Move{R1Add{Spot{2, 0}, -1, false}}) ==
          "R1_add arc=2:0 sign=- order=UO");
    CHECK(serialize(Move{R1Remove{2}}) == "R1_remove chord=2");
    CHECK(serialize(Move{R2Add{Spot{0, 5}, Spot{0, 9}, true, true, 1}}) ==
          "R2_add arc=5 arc=9 signs=+- config=a");
    CHECK(serialize(Move{R2Remove{1, 4}}) == "R2_remove chord=1 chord=4");
    CHECK(serialize(Move{R3{Spot{0, 0}, Spot{0, 2}, Spot{0, 4}}}) ==
          "R3 site=0 site=2 site=4");

    const char* diagrams[] = {"", "O1+ U1+", "O1+ O2- U1+ O3- U3- U2-"};
    for (const char* code : diagrams)
        for (const Move& mv : enumerate_moves(parse_gauss_code(code)))
            CHECK(parse_move(serialize(mv)) == mv);

    CHECK_THROWS_AS(parse_move("R9_add arc=0"), ParseError);
    CHECK_THROWS_AS(parse_move("R1_add arc=x"), ParseError);
}

TEST_CASE("moves apply on multi-circle diagrams") {
    const MultiDiagram m({{}, {}}, {});
    const MultiDiagram after =
        apply_move(m, Move{R1Add{Spot{1, 0}, -1, true}});
    CHECK(after.chord_count() == 1);
    CHECK(after.circle(0).empty());
    CHECK(after.circle(1).size() == 2);
    CHECK(after.sign(1) == -1);
}

TEST_CASE("random walks are deterministic and bounded") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const GaussDiagram a = random_walk(d, 40, 12345, 8);
    const GaussDiagram b = random_walk(d, 40, 12345, 8);
    CHECK(serialize(a) == serialize(b));
    CHECK(a.chord_count() <= 8);
    const GaussDiagram c = random_walk(d, 40, 999, 2);
    CHECK(c.chord_count() <= 2);
}

TEST_CASE("walks preserve w") {
    const GaussDiagram d = parse_gauss_code("O1+ O2+ U1+ U2+");
    const auto w = ht_polynomial(d);
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        CHECK(ht_polynomial(random_walk(d, 50, seed, 12)) == w);
}

TEST_CASE("a capped walk with no legal move stays put") {
    const GaussDiagram d = parse_gauss_code("");
    CHECK(serialize(random_walk(d, 5, 42, 0)).empty());
}

} // TEST_SUITE
