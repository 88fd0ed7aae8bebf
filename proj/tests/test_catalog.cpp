#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "fibercx/catalog.hpp"

using namespace fibercx;

TEST_CASE("class name round trip over the whole catalog") {
    for (DimPair dp : {DimPair::D32, DimPair::D21}) {
        for (const auto& fc : Catalog::builtin(dp).classes()) {
            for (Parity p : {Parity::Unrefined, Parity::Odd, Parity::Even}) {
                ClassName n = fc.name.with_parity(p);
                CHECK(parse_class_name(print_class_name(n)) == n);
            }
        }
    }
}

TEST_CASE("class name parse errors and normalization") {
    CHECK_THROWS_AS(parse_class_name("bII^g"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bI^0"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bI^11"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bII^10"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bII^40"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bII^{1,5}"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bII^{2,11}"), ParseError);
    CHECK_THROWS_AS(parse_class_name("bII^{2,5"), ParseError);
    CHECK_THROWS_AS(parse_class_name("b1"), ParseError);
    CHECK_THROWS_AS(parse_class_name(""), ParseError);

    bool normalized = false;
    ClassName n = parse_class_name("bII^{9,2}_o", &normalized);
    CHECK(normalized);
    CHECK(n == ClassName::bII_pair(2, 9, Parity::Odd));
    normalized = true;
    parse_class_name("bII^{2,9}", &normalized);
    CHECK_FALSE(normalized);
}

TEST_CASE("canonical order: pairs before numbers before letters, o before e") {
    CHECK(ClassName::bII_pair(10, 10) < ClassName::bII_num(11));
    CHECK(ClassName::bII_num(39) < ClassName::bII_letter('a'));
    CHECK(ClassName::bI(2, Parity::Odd) < ClassName::bI(2, Parity::Even));
    CHECK(ClassName::bI(2, Parity::Even) < ClassName::bI(3, Parity::Odd));
}

TEST_CASE("catalog sizes and flags") {
    Catalog c32 = Catalog::builtin(DimPair::D32);
    Catalog c21 = Catalog::builtin(DimPair::D21);

    CHECK(c32.classes().size() == 1 + 10 + 45 + 29 + 6);
    CHECK(c21.classes().size() == 1 + 10);

    CHECK(c32.list_classes(0, Variant::Full, true).size() == 2);
    CHECK(c32.list_classes(1, Variant::Full, true).size() == 18);
    CHECK(c32.list_classes(2, Variant::Full, true).size() == 160);
    CHECK(c32.list_classes(2, Variant::Admissible, true).size() == 154);
    CHECK(c32.list_classes(2, Variant::Full, false).size() == 80);
    CHECK(c21.list_classes(2, Variant::Full, true).empty());

    // bI^1 appears in the catalog but in no complex
    const FiberClass* b1 = c32.find(ClassName::bI(1));
    REQUIRE(b1 != nullptr);
    CHECK(b1->excluded_from_complex);
    auto codim1 = c32.list_classes(1, Variant::Full, false);
    CHECK(std::find(codim1.begin(), codim1.end(), ClassName::bI(1)) == codim1.end());

    int orientable_excluded = 0;
    for (const auto& fc : c32.classes())
        if (fc.orientable_excluded) ++orientable_excluded;
    CHECK(orientable_excluded == 2 + 14);  // bI^9, bI^10, bII^26..39

    for (char ch : {'d', 'e', 'f'}) {
        const FiberClass* fc = c32.find(ClassName::bII_letter(ch));
        REQUIRE(fc != nullptr);
        CHECK_FALSE(fc->admissible);
    }
    for (char ch : {'a', 'b', 'c'}) CHECK(c32.find(ClassName::bII_letter(ch))->admissible);

    CHECK(c32.find(ClassName::bI(2))->transition == std::nullopt);
    REQUIRE(c21.find(ClassName::bI(7))->transition.has_value());
    CHECK(c21.find(ClassName::bI(7))->transition->delta_circles == std::set<int>{-1, 1});
    CHECK(c21.find(ClassName::bI(7))->transition->delta_arcs == std::set<int>{-1, 1});
    CHECK_FALSE(c21.find(ClassName::bI(7))->transition->flips_component_parity);
}

TEST_CASE("refined listings interleave parities in canonical order") {
    auto codim1 = Catalog::builtin(DimPair::D32).list_classes(1, Variant::Full, true);
    REQUIRE(codim1.size() == 18);
    for (std::size_t i = 0; i < 18; i += 2) {
        CHECK(codim1[i].parity == Parity::Odd);
        CHECK(codim1[i + 1] == codim1[i].flipped());
    }
    CHECK(codim1[0].base() == ClassName::bI(2));
    CHECK(codim1[16].base() == ClassName::bI(10));
}

TEST_CASE("catalog text round trip") {
    for (DimPair dp : {DimPair::D32, DimPair::D21}) {
        Catalog cat = Catalog::builtin(dp);
        Catalog back = Catalog::from_text(cat.to_text(), dp);
        REQUIRE(back.classes().size() == cat.classes().size());
        for (std::size_t i = 0; i < cat.classes().size(); ++i)
            CHECK(back.classes()[i] == cat.classes()[i]);
    }

    CHECK_THROWS_AS(Catalog::from_text("b0 codim", DimPair::D32), ParseError);
    CHECK_THROWS_AS(Catalog::from_text("b0 shape=1", DimPair::D32), ParseError);
    CHECK_THROWS_AS(Catalog::from_text("bI^2 dc=-1,1", DimPair::D21), ParseError);
}

TEST_CASE("shipped catalog files match the builtin tables") {
    auto slurp = [](const std::string& path) {
        std::ifstream f(path);
        REQUIRE(f.good());
        std::stringstream buf;
        buf << f.rdbuf();
        return buf.str();
    };
    CHECK(slurp(std::string(FIBERCX_DATA_DIR) + "/catalog_32.txt") ==
          Catalog::builtin(DimPair::D32).to_text());
    CHECK(slurp(std::string(FIBERCX_DATA_DIR) + "/catalog_21.txt") ==
          Catalog::builtin(DimPair::D21).to_text());
}
