#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fibercx/invariants.hpp"

using namespace fibercx;

namespace {

MorseTrace disk_trace() {
    std::ifstream f(std::string(FIBERCX_DATA_DIR) + "/disk.trace");
    REQUIRE(f.good());
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_trace(buf.str());
}

}  // namespace

TEST_CASE("named classes are cocycles in their variants") {
    const auto& full = get_complex(ComplexVariant::Full32);
    const auto& adm = get_complex(ComplexVariant::Admissible32);

    Cochain alpha = named_class(NamedClassTag::Alpha);
    Cochain beta = named_class(NamedClassTag::Beta);
    Cochain gamma = named_class(NamedClassTag::Gamma);

    CHECK_FALSE(full.is_cocycle(alpha));  // boundary-singular terms obstruct
    CHECK(adm.is_cocycle(alpha));
    CHECK(full.is_cocycle(beta));
    CHECK(adm.is_cocycle(beta));
    CHECK(full.is_cocycle(gamma));
    CHECK(adm.is_cocycle(gamma));
}

TEST_CASE("evaluation on the disk trace") {
    MorseTrace disk = disk_trace();
    CHECK(evaluate(named_class(NamedClassTag::Alpha), ComplexVariant::Admissible32,
                   disk).value == 1);
    CHECK(evaluate(named_class(NamedClassTag::Beta), ComplexVariant::Full32,
                   disk).value == 0);
    CHECK(evaluate(named_class(NamedClassTag::Gamma), ComplexVariant::Full32,
                   disk).value == 0);
}

TEST_CASE("evaluate rejects non-cocycles and wrong degrees") {
    MorseTrace t;  // empty trace
    CHECK_THROWS_AS(evaluate(parse_cochain("bI^2_o", 1), ComplexVariant::Full32, t),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate(named_class(NamedClassTag::Alpha),
                             ComplexVariant::Full32, t),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate(parse_cochain("b0", 0), ComplexVariant::Full32, t),
                    std::invalid_argument);

    MorseTrace bad = disk_trace();
    bad.events.pop_back();
    CHECK_THROWS_AS(evaluate(named_class(NamedClassTag::Beta),
                             ComplexVariant::Full32, bad),
                    InvalidTrace);
}

TEST_CASE("evaluation is additive in the cocycle") {
    MorseTrace disk = disk_trace();
    Cochain beta = named_class(NamedClassTag::Beta);
    Cochain gamma = named_class(NamedClassTag::Gamma);
    int vb = evaluate(beta, ComplexVariant::Full32, disk).value;
    int vg = evaluate(gamma, ComplexVariant::Full32, disk).value;
    int vbg = evaluate(beta + gamma, ComplexVariant::Full32, disk).value;
    CHECK(vbg == (vb + vg) % 2);
}

TEST_CASE("cohomologous representatives evaluate identically") {
    const auto& full = get_complex(ComplexVariant::Full32);
    Cochain beta = named_class(NamedClassTag::Beta);
    Cochain beta2 = parse_cochain("bI^2 + bI^3 + bI^4 + bI^7", 1);
    Cochain gamma = named_class(NamedClassTag::Gamma);
    Cochain gamma2 = parse_cochain("bI^2_e + bI^3_o + bI^4_o + bI^6_e + bI^8_o", 1);
    REQUIRE(full.cohomologous(beta, beta2));
    REQUIRE(full.cohomologous(gamma, gamma2));

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        MorseTrace t = random_trace(seed, 10);
        CHECK(evaluate(beta, ComplexVariant::Full32, t).value ==
              evaluate(beta2, ComplexVariant::Full32, t).value);
        CHECK(evaluate(gamma, ComplexVariant::Full32, t).value ==
              evaluate(gamma2, ComplexVariant::Full32, t).value);
    }
}

TEST_CASE("triviality probes") {
    TrivialityReport rb = triviality_probe(named_class(NamedClassTag::Beta),
                                           ComplexVariant::Full32, 0, 499);
    CHECK(rb.always_zero);
    CHECK(rb.witness_seeds.empty());

    TrivialityReport rg = triviality_probe(named_class(NamedClassTag::Gamma),
                                           ComplexVariant::Full32, 0, 499);
    CHECK(rg.always_zero);

    // alpha is only a cocycle once the boundary-singular classes are
    // gone, and there it is genuinely nontrivial
    TrivialityReport ra = triviality_probe(named_class(NamedClassTag::Alpha),
                                           ComplexVariant::Admissible32, 0, 499);
    CHECK_FALSE(ra.always_zero);
    CHECK_FALSE(ra.witness_seeds.empty());
}
