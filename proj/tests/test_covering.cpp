#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "dcas/bench.hpp"
#include "dcas/errors.hpp"
#include "fixtures.hpp"

using namespace dcas;

TEST_CASE("validate") {
    CHECK(fixtures::base_space().validate().ok());

    CoveringSpace empty_el({"x1"});
    empty_el.add_element_by_index("C1", {});
    auto rep = empty_el.validate();
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].find("empty element") != std::string::npos);

    CoveringSpace uncovered({"x1", "x2"});
    uncovered.add_element("C1", {"x1"});
    rep = uncovered.validate();
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].find("x2") != std::string::npos);
}

TEST_CASE("matrix_rep") {
    CHECK(fixtures::base_space().matrix_rep() == fixtures::base_m());

    CoveringSpace single({"a"});
    single.add_element("C", {"a"});
    CHECK(single.matrix_rep() == BoolMatrix::from_rows({{1}}));

    // updated space rows for the immigrated objects
    CoveringSpace merged =
        merge_space(fixtures::base_space(), fixtures::base_batch());
    BoolMatrix m = merged.matrix_rep();
    CHECK(m == fixtures::updated_m());

    CoveringSpace bad({"x1", "x2"});
    bad.add_element("C1", {"x1"});
    CHECK_THROWS_AS(bad.matrix_rep(), ValidationError);
}

TEST_CASE("char_vector") {
    CoveringSpace space = fixtures::base_space();
    CHECK(char_vector(space, QuerySet{}) == BoolMatrix(4, 1));
    CHECK(char_vector(space, QuerySet::full(space)) == BoolMatrix::ones(4, 1));

    CoveringSpace merged =
        merge_space(fixtures::base_space(), fixtures::base_batch());
    QuerySet x = QuerySet::from_names(merged, {"x3", "x4", "x5"});
    CHECK(char_vector(merged, x) ==
          BoolMatrix::from_rows({{0}, {0}, {1}, {1}, {1}, {0}}));

    CHECK_THROWS_AS(QuerySet::from_names(space, {"nope"}), NameError);
}

TEST_CASE("neighborhood") {
    CoveringSpace space = fixtures::base_space();
    auto nb = [&](const char* name) {
        std::vector<std::string> out;
        for (auto i : space.neighborhood(name))
            out.push_back(space.object_name(i));
        return out;
    };
    CHECK(nb("x2") == std::vector<std::string>{"x1", "x2", "x4"});
    CHECK(nb("x3") == std::vector<std::string>{"x3", "x4"});
    CHECK(nb("x4") == std::vector<std::string>{"x4"});
    CHECK_THROWS_AS(space.neighborhood("zzz"), NameError);
}

TEST_CASE("every object belongs to its own neighborhood") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        bench::GenParams p;
        p.n = 1 + static_cast<std::uint32_t>(rng() % 10);
        p.m = 1 + static_cast<std::uint32_t>(rng() % 6);
        p.seed = rng();
        CoveringSpace space = bench::gen_space(p, rng);
        for (std::uint32_t i = 0; i < space.object_count(); ++i) {
            auto nb = space.neighborhood(i);
            REQUIRE(std::find(nb.begin(), nb.end(), i) != nb.end());
        }
    }
}

TEST_CASE("parser") {
    std::istringstream in(
        "# a comment\n"
        "objects: x1 x2 x3 x4\n"
        "element C1: x1 x4   # trailing comment\n"
        "element C2: x1 x2 x4\n"
        "element C3: x3 x4\n");
    CoveringSpace space = CoveringSpace::parse(in);
    CHECK(space.object_count() == 4);
    CHECK(space.element_count() == 3);
    CHECK(space.matrix_rep() == fixtures::base_m());
}

TEST_CASE("parser errors carry line numbers") {
    std::istringstream missing("element C1: x1\n");
    CHECK_THROWS_WITH_AS(CoveringSpace::parse(missing), doctest::Contains("line 1"),
                         ParseError);

    std::istringstream dup("objects: x1\nobjects: x2\n");
    CHECK_THROWS_WITH_AS(CoveringSpace::parse(dup), doctest::Contains("line 2"),
                         ParseError);

    std::istringstream unknown("objects: x1\nelement C1: x9\n");
    CHECK_THROWS_WITH_AS(CoveringSpace::parse(unknown), doctest::Contains("x9"),
                         ParseError);

    std::istringstream empty("");
    CHECK_THROWS_AS(CoveringSpace::parse(empty), ParseError);
}

TEST_CASE("duplicate member sets under different names are fine") {
    CoveringSpace space({"x1", "x2"});
    space.add_element("C1", {"x1", "x2"});
    space.add_element("C2", {"x1", "x2"});
    CHECK(space.validate().ok());
    CHECK(space.matrix_rep() == BoolMatrix::from_rows({{1, 1}, {1, 1}}));
    CHECK_THROWS_AS(space.add_element("C1", {"x1"}), NameError);
}
