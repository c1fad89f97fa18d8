#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "vknot/cobordism.hpp"
#include "vknot/errors.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"

using namespace vknot;

namespace {

const Spot g00{0, 0};

CobordismCertificate make_cert(const std::string& start, CobordismClaim claim,
                               std::vector<CobordStep> steps) {
    CobordismCertificate c;
    c.start = parse_gauss_code(start);
    c.claim = claim;
    c.steps = std::move(steps);
    return c;
}

} // namespace

TEST_SUITE("cobordism") {

TEST_CASE("pinch plus death traces an annulus over the trivial knot") {
    const auto cert = make_cert("", CobordismClaim::Concordance,
                                {CobordSaddle{g00, g00}, CobordDeath{0}});
    const CertificateReport rep = check_certificate(cert);
    CHECK(rep.valid);
    CHECK(rep.births == 0);
    CHECK(rep.saddles == 1);
    CHECK(rep.deaths == 1);
    CHECK(rep.euler == 0);
    CHECK(rep.connected);
    REQUIRE(rep.genus.has_value());
    CHECK(*rep.genus == 0);
    CHECK(rep.end_state.circle_count() == 1);
    CHECK(rep.end_state.crossing_free(0));
    CHECK(ht_endpoints_check(cert));
}

TEST_CASE("removing a kink certifies it slice") {
    const auto cert = make_cert("O1+ U1+", CobordismClaim::Slice,
                                {Move{R1Remove{1}}});
    const CertificateReport rep = check_certificate(cert);
    CHECK(rep.valid);
    CHECK(rep.euler == 0);
    CHECK(*rep.genus == 0);
}

TEST_CASE("an empty script is a product concordance") {
    const auto cert =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Concordance, {});
    const CertificateReport rep = check_certificate(cert);
    CHECK(rep.valid);
    CHECK(*rep.genus == 0);
    CHECK(ht_endpoints_check(cert));
}

TEST_CASE("a crossing-laden end circle fails slice but not concordance") {
    const auto cert =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Slice, {});
    const CertificateReport rep = check_certificate(cert);
    CHECK(!rep.valid);
    CHECK(rep.failure_reason == "end state is not a crossing-free circle");
    CHECK(!rep.failure_step.has_value());
}

TEST_CASE("ribbon certificates reject the first birth") {
    const auto cert = make_cert(
        "O1+ U1+", CobordismClaim::Ribbon,
        {Move{R1Remove{1}}, CobordBirth{}, CobordSaddle{g00, Spot{1, 0}}});
    const CertificateReport rep = check_certificate(cert);
    CHECK(!rep.valid);
    REQUIRE(rep.failure_step.has_value());
    CHECK(*rep.failure_step == 1);
    CHECK(rep.failure_reason == "birth forbidden in ribbon certificate");
}

TEST_CASE("illegal steps fail with the offending index") {
    const auto bad_death = make_cert("O1+ U1+", CobordismClaim::Cobordism,
                                     {CobordDeath{0}});
    CertificateReport rep = check_certificate(bad_death);
    CHECK(!rep.valid);
    CHECK(*rep.failure_step == 0);
    CHECK(rep.failure_reason == "death: circle 0 carries chord endpoints");

    const auto no_circle = make_cert("", CobordismClaim::Cobordism,
                                     {CobordDeath{3}});
    rep = check_certificate(no_circle);
    CHECK(!rep.valid);
    CHECK(rep.failure_reason == "death: no circle 3");
}

TEST_CASE("pinch and merge unbalance concordance counts but give a torus cobordism") {
    const std::vector<CobordStep> steps = {CobordSaddle{g00, g00},
                                           CobordSaddle{g00, Spot{1, 0}}};
    const auto as_conc =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Concordance, steps);
    const CertificateReport bad = check_certificate(as_conc);
    CHECK(!bad.valid);
    CHECK(bad.failure_reason == "counts violate #b-#s+#d=0");
    CHECK(!bad.failure_step.has_value());

    const auto as_cob =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Cobordism, steps);
    const CertificateReport ok = check_certificate(as_cob);
    CHECK(ok.valid);
    CHECK(ok.connected);
    CHECK(*ok.genus == 1);
    CHECK(serialize(ok.end_state) == "(O1+ O2+ U1+ U2+)");
}

TEST_CASE("a floating sphere disconnects the trace") {
    const std::vector<CobordStep> steps = {
        CobordSaddle{g00, g00}, CobordSaddle{g00, Spot{1, 0}}, CobordBirth{},
        CobordDeath{1}};
    const auto as_conc =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Concordance, steps);
    const CertificateReport bad = check_certificate(as_conc);
    CHECK(!bad.valid);
    CHECK(bad.euler == 0);
    CHECK(bad.failure_reason == "trace surface disconnected");

    const auto as_cob =
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Cobordism, steps);
    const CertificateReport ok = check_certificate(as_cob);
    CHECK(ok.valid);
    CHECK(!ok.connected);
    CHECK(!ok.genus.has_value());
    CHECK(ok.component_euler == std::vector<long long>{-2, 2});
}

TEST_CASE("saddles split, pinch, and merge words as advertised") {
    const MultiDiagram knot(parse_gauss_code("O1+ O2+ U1+ U2+"));

    const MultiDiagram pinched = apply_step(knot, CobordSaddle{{0, 2}, {0, 2}});
    CHECK(serialize(pinched) == "()(U1+ U2+ O1+ O2+)");

    const MultiDiagram split = apply_step(knot, CobordSaddle{{0, 0}, {0, 2}});
    CHECK(serialize(split) == "(O1+ O2+)(U1+ U2+)");

    const MultiDiagram merged =
        apply_step(split, CobordSaddle{{0, 0}, {1, 0}});
    CHECK(serialize(merged) == "(O1+ O2+ U1+ U2+)");

    CHECK_THROWS_WITH_AS(apply_step(knot, CobordStep{CobordSaddle{{0, 7}, g00}}),
                         "saddle: no arc 7", DomainError);
    CHECK_THROWS_WITH_AS(
        apply_step(knot, CobordStep{CobordSaddle{g00, Spot{2, 1}}}),
        "saddle: no arc 2:1", DomainError);
}

TEST_CASE("endpoint comparison guards its preconditions") {
    const auto slice_claim =
        make_cert("O1+ U1+", CobordismClaim::Slice, {Move{R1Remove{1}}});
    CHECK_THROWS_WITH_AS(ht_endpoints_check(slice_claim),
                         "endpoint comparison requires a concordance claim",
                         DomainError);

    const auto invalid = make_cert(
        "O1+ O2+ U1+ U2+", CobordismClaim::Concordance,
        {CobordSaddle{g00, g00}, CobordSaddle{g00, Spot{1, 0}}});
    CHECK_THROWS_WITH_AS(ht_endpoints_check(invalid),
                         "certificate invalid: counts violate #b-#s+#d=0",
                         DomainError);
}

TEST_CASE("certificate files parse, serialize, and round-trip") {
    const std::string text =
        "# product annulus over the virtual trefoil\n"
        "start: O1+ O2+ U1+ U2+\n"
        "\n"
        "claim: concordance\n"
        "saddle arc=0:1 arc=0:1   # pinch\n"
        "death circle=0\n"
        "R1_add arc=0 sign=+ order=OU\n"
        "R1_remove chord=3\n";
    const CobordismCertificate cert = parse_certificate(text);
    CHECK(serialize(cert.start) == "O1+ O2+ U1+ U2+");
    CHECK(cert.claim == CobordismClaim::Concordance);
    REQUIRE(cert.steps.size() == 4);
    CHECK(cert.steps[0] == CobordStep{CobordSaddle{{0, 1}, {0, 1}}});
    CHECK(cert.steps[1] == CobordStep{CobordDeath{0}});
    CHECK(check_certificate(cert).valid);
    CHECK(ht_endpoints_check(cert));

    const std::string emitted = serialize(cert);
    CHECK(serialize(parse_certificate(emitted)) == emitted);
    CHECK(emitted.find("saddle arc=0:1 arc=0:1") != std::string::npos);
}

TEST_CASE("certificate parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_certificate("start: O1+ U1+\n"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_certificate("claim: slice\nstart: O1+ U1+\n"),
        "line 1: expected start:", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_certificate("start:\nclaim: concordance\ndeath row=1\n"),
        "line 3: death needs circle=", ParseError);
    CHECK_THROWS_WITH_AS(
        parse_certificate("start:\nclaim: concordance\nsaddle arc=0\n"),
        "line 3: saddle needs two arc= arguments", ParseError);
    CHECK_THROWS_AS(
        parse_certificate("start:\nclaim: concordance\nfrobnicate x=1\n"),
        ParseError);
    CHECK_THROWS_AS(parse_certificate("start:\nclaim: monotone\n"), ParseError);
}

TEST_CASE("claims name themselves") {
    CHECK(to_string(CobordismClaim::Concordance) == "concordance");
    CHECK(to_string(CobordismClaim::Slice) == "slice");
    CHECK(to_string(CobordismClaim::Ribbon) == "ribbon");
    CHECK(to_string(CobordismClaim::Cobordism) == "cobordism");
    CHECK(parse_claim("ribbon") == CobordismClaim::Ribbon);
    CHECK_THROWS_AS(parse_claim("isotopy"), ParseError);
}

TEST_CASE("reports render as text and json") {
    const auto cert = make_cert("", CobordismClaim::Concordance,
                                {CobordSaddle{g00, g00}, CobordDeath{0}});
    const CertificateReport rep = check_certificate(cert);
    const std::string text = rep.to_string();
    CHECK(text.find("valid: yes") != std::string::npos);
    CHECK(text.find("genus: 0") != std::string::npos);
    CHECK(text.find("failure") == std::string::npos);

    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j.at("valid") == true);
    CHECK(j.at("genus") == 0);
    CHECK(j.at("saddles") == 1);

    const auto bad = check_certificate(
        make_cert("O1+ O2+ U1+ U2+", CobordismClaim::Slice, {}));
    const std::string bad_text = bad.to_string();
    CHECK(bad_text.find("valid: no") != std::string::npos);
    CHECK(bad_text.find("failure: end state is not a crossing-free circle") !=
          std::string::npos);
    const auto bj = nlohmann::json::parse(bad.to_json());
    CHECK(bj.at("valid") == false);
    CHECK(!bj.contains("failure_step"));
}

} // TEST_SUITE
