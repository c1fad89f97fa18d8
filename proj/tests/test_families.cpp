#include <doctest.h>

#include <json.hpp>
#include <string>

#include "vknot/errors.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"

using namespace vknot;

namespace {

HTPolynomial monomial(int degree, std::int64_t coeff) {
    HTPolynomial w;
    w.add_term(degree, coeff);
    return w;
}

} // namespace

TEST_SUITE("families") {

TEST_CASE("torus codes come out alternating") {
    CHECK(serialize(torus_code(1)) == "O1+ U1+");
    CHECK(serialize(torus_code(3)) == "O1+ U2+ O3+ U1+ O2+ U3+");
    const GaussDiagram t5 = torus_code(5);
    CHECK(t5.chord_count() == 5);
    CHECK(ht_polynomial(t5).is_zero());
    CHECK(seifert_circle_count(t5) == 2);
    CHECK(slice_genus_positive(t5) == 2);
    CHECK_THROWS_AS(torus_code(2), DomainError);
    CHECK_THROWS_AS(torus_code(-1), DomainError);
}

TEST_CASE("clasp blocks realize grid curves") {
    CHECK(serialize(clasp_block(1, 1)) == "O1+ O2+ U1+ U2+");
    CHECK(serialize(clasp_block(2, 1)) ==
          "O1+ O2+ U3+ U4+ O3+ O4+ U1+ U2+");
    CHECK(ht_polynomial(clasp_block(1, 1)) == monomial(1, 2));
    CHECK(ht_polynomial(clasp_block(2, 1)) == monomial(1, 4));
    CHECK(ht_polynomial(clasp_block(3, 2)) == monomial(1, 12));
    CHECK(ht_polynomial(clasp_block(1, 2)) ==
          ht_polynomial(clasp_block(2, 1)));
    CHECK(ht_polynomial(clasp_block(-2, 1)) == monomial(1, 4));
    CHECK(clasp_block(3, 2).chord_count() == 12);
    CHECK_THROWS_AS(clasp_block(2, 2), DomainError);
    CHECK_THROWS_AS(clasp_block(0, 1), DomainError);
}

TEST_CASE("the base one-handle generator is pinned") {
    const FamilySpec spec{1, {{1, 1}}, 1};
    const GaussDiagram d = family_generator(spec);
    CHECK(serialize(d) == "O1+ O2+ U1+ U2+ O3+ U4+ O5+ U3+ O4+ U5+");
    CHECK(d.chord_count() == 5);
    CHECK(ht_polynomial(d) == monomial(1, 2));
    CHECK(is_positive(d));
    CHECK(slice_genus_positive(d) == 2);
}

TEST_CASE("generators compose clasp blocks with a torus insert") {
    const FamilySpec two{2, {{1, 1}, {2, 1}}, 1};
    const GaussDiagram d2 = family_generator(two);
    CHECK(d2.chord_count() == 9);
    CHECK(ht_polynomial(d2) == monomial(1, 6));

    const FamilySpec deep{1, {{1, 1}}, 2};
    CHECK(family_generator(deep).chord_count() == 7);
    CHECK(ht_polynomial(family_generator(deep)) == monomial(1, 2));
}

TEST_CASE("the generator equals a hand-built splice") {
    const GaussDiagram by_hand =
        connected_sum(torus_code(3), clasp_block(1, 1), 0, 0);
    const GaussDiagram by_spec = family_generator(FamilySpec{1, {{1, 1}}, 1});
    CHECK(canonical_code(by_spec) == canonical_code(by_hand));

    const GaussDiagram nest = connected_sum(
        connected_sum(torus_code(3), clasp_block(2, 1), 0, 0),
        clasp_block(1, 1), 0, 0);
    const GaussDiagram spec2 =
        family_generator(FamilySpec{2, {{1, 1}, {2, 1}}, 1});
    CHECK(canonical_code(spec2) == canonical_code(nest));
}

TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(family_generator(FamilySpec{2, {{1, 1}}, 1}), DomainError);
    CHECK_THROWS_AS(family_generator(FamilySpec{1, {{2, 2}}, 1}), DomainError);
    CHECK_THROWS_AS(family_generator(FamilySpec{1, {{1, 1}}, 0}), DomainError);
    CHECK_THROWS_AS(family_generator(FamilySpec{0, {}, 1}), DomainError);
}

TEST_CASE("the distinguisher separates family members by genus") {
    const FamilyReport rep = family_distinguisher(FamilySpec{1, {{1, 1}}, 1}, 4);
    CHECK(rep.homology_class == "1*a1 + 1*b1");
    CHECK(rep.expected_ht == monomial(1, 2));
    REQUIRE(rep.rows.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(rep.rows[i].k == i + 1);
        CHECK(rep.rows[i].chords == 2 + 2 * static_cast<std::size_t>(i + 1) + 1);
        CHECK(rep.rows[i].ht == rep.expected_ht);
        CHECK(rep.rows[i].genus == i + 2);
    }
    CHECK(rep.ht_constant);
    CHECK(rep.genus_steps);
    CHECK(rep.nonsplit);

    CHECK_THROWS_AS(family_distinguisher(FamilySpec{1, {{1, 1}}, 1}, 1),
                    DomainError);
}

TEST_CASE("family reports render as text and json") {
    const FamilyReport rep =
        family_distinguisher(FamilySpec{2, {{1, 1}, {2, 1}}, 1}, 2);
    const std::string text = rep.to_string();
    CHECK(text.find("1*a1 + 1*b1 + 2*a2 + 1*b2") != std::string::npos);
    CHECK(text.find("6t^1") != std::string::npos);
    CHECK(text.find("ht_constant: yes") != std::string::npos);

    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("expected_ht") == "6t^1");
    CHECK(j.at("rows").size() == 2);
    CHECK(j.at("ht_constant") == true);
    CHECK(j.at("genus_steps") == true);
    CHECK(j.at("nonsplit") == true);
}

} // TEST_SUITE
