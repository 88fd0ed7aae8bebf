#include <catch2/catch_amalgamated.hpp>

#include "fibercx/complex.hpp"
#include "fibercx/universal.hpp"

using namespace fibercx;

TEST_CASE("check() rejects a corrupted coboundary") {
    const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
    REQUIRE(full.check());

    // dropping one term from one delta1 column must break delta.delta = 0
    BitMatrix d1 = full.delta(1);
    std::size_t col = full.basis_index(1, ClassName::bI(2, Parity::Odd));
    std::size_t row = full.basis_index(2, ClassName::bII_pair(2, 3, Parity::Odd));
    REQUIRE(d1.get(row, col));
    d1.set(row, col, false);
    CochainComplexZ2 broken({full.basis(0), full.basis(1), full.basis(2)},
                            {full.delta(0), d1});
    std::string why;
    CHECK_FALSE(broken.check(&why));
    CHECK(why.find("b0") != std::string::npos);

    CochainComplexZ2 misshapen({full.basis(0), full.basis(1)},
                               {BitMatrix(17, 2)});
    CHECK_FALSE(misshapen.check(&why));
    CHECK(why.find("shape") != std::string::npos);
}

TEST_CASE("vector round trip and basis_index errors") {
    const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
    Cochain c = parse_cochain("bI^2 + bI^7_o", 1);
    CHECK(full.from_vector(1, full.to_vector(c)) == c);
    CHECK_THROWS_AS(full.basis_index(1, ClassName::bI(1, Parity::Odd)),
                    std::invalid_argument);
    CHECK_THROWS_AS(full.basis_index(0, ClassName::bI(2, Parity::Odd)),
                    std::invalid_argument);
}

TEST_CASE("betti numbers of the universal complexes") {
    const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
    const CochainComplexZ2& adm = get_complex(ComplexVariant::Admissible32);
    const CochainComplexZ2& morse = get_complex(ComplexVariant::Morse21);

    CHECK(full.betti(0) == 1);
    CHECK(full.betti(1) == 2);
    CHECK(adm.betti(0) == 1);
    CHECK(adm.betti(1) == 3);
    CHECK(morse.betti(0) == 1);
    CHECK(morse.betti(1) == 17);  // delta1 = 0 there
}

TEST_CASE("cohomology generators are canonical cocycles") {
    const CochainComplexZ2& adm = get_complex(ComplexVariant::Admissible32);
    CohomologySummary h1 = adm.cohomology_basis(1);
    CHECK(h1.dimension == 3);
    for (const auto& g : h1.generators) {
        CHECK(adm.is_cocycle(g));
        Cochain zero;
        zero.degree = 1;
        CHECK_FALSE(adm.cohomologous(g, zero));
    }
    // determinism
    CohomologySummary again = adm.cohomology_basis(1);
    CHECK(again.generators == h1.generators);

    CohomologySummary h0 = adm.cohomology_basis(0);
    REQUIRE(h0.dimension == 1);
    CHECK(h0.generators[0] == parse_cochain("b0", 0));
}

TEST_CASE("cohomologous checks its preconditions") {
    const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
    Cochain beta = parse_cochain("bI^6 + bI^7 + bI^8", 1);
    Cochain not_cocycle = parse_cochain("bI^2_o", 1);
    REQUIRE_FALSE(full.is_cocycle(not_cocycle));
    CHECK_THROWS_AS(full.cohomologous(beta, not_cocycle), std::invalid_argument);
    CHECK_THROWS_AS(full.cohomologous(beta, parse_cochain("b0", 0)),
                    std::invalid_argument);
    CHECK(full.cohomologous(beta, beta));
}

TEST_CASE("cochain map construction rejects non-commuting data") {
    const CochainComplexZ2& full = get_complex(ComplexVariant::Full32);
    const CochainComplexZ2& morse = get_complex(ComplexVariant::Morse21);

    // correct suspension data, then a deliberate corruption
    std::vector<BitMatrix> maps;
    for (int k = 0; k <= 2; ++k) {
        BitMatrix m(morse.dim(k), full.dim(k));
        if (k < 2)
            for (std::size_t c = 0; c < full.dim(k); ++c)
                m.set(morse.basis_index(k, full.basis(k)[c]), c, true);
        maps.push_back(m);
    }
    CHECK_NOTHROW(CochainMap(&full, &morse, maps));

    auto bad = maps;
    bad[1].set(0, 0, !bad[1].get(0, 0));
    CHECK_THROWS_AS(CochainMap(&full, &morse, bad), std::invalid_argument);

    auto misshapen = maps;
    misshapen[0] = BitMatrix(1, 1);
    CHECK_THROWS_AS(CochainMap(&full, &morse, misshapen), std::invalid_argument);
}
