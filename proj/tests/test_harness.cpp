#include "corelab/error.hpp"
#include "corelab/harness.hpp"
#include "corelab/json_forms.hpp"

#include <doctest.h>

using namespace corelab;
using nlohmann::json;

TEST_SUITE("harness") {

TEST_CASE("suite names") {
    CHECK(parse_suites("all").size() == 4);
    CHECK(parse_suites("roundtrip") == std::vector<Suite>{Suite::Roundtrip});
    CHECK_THROWS_AS(parse_suites("bogus"), InvalidInput);
}

TEST_CASE("sweep config validation") {
    SweepConfig c;
    c.s_lo = 5;
    c.s_hi = 2;
    CHECK_THROWS_AS(c.validate(), InvalidInput);
    c.s_hi = 6;
    c.budget_secs = 0;
    CHECK_THROWS_AS(c.validate(), InvalidInput);
}

TEST_CASE("equinumerosity cells") {
    const CellReport r = verify_equinumerosity(6, 2);
    CHECK(r.pass);
    CHECK(*r.sc_cores == 13);
    CHECK(*r.nice_ideals == 13);
    CHECK(*r.admissible_ideals == 13);
    CHECK(*r.sym_dyck == 13);
    CHECK(r.counterexample.is_null());
    CHECK(*verify_equinumerosity(4, 4).sc_cores == 4);
}

TEST_CASE("structure and golden checks pass") {
    for (int s = 2; s <= 8; ++s)
        for (int k = 1; k <= 4; ++k)
            for (const CheckResult& c : verify_structure(s, k)) {
                INFO(s, " ", k, " ", c.name, " ", c.detail);
                REQUIRE(c.pass);
            }
    for (const CheckResult& c : golden_checks()) {
        INFO(c.name, " ", c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("csv table") {
    SweepConfig c;
    c.s_lo = 2;
    c.s_hi = 6;
    c.k_lo = 1;
    c.k_hi = 2;
    const VerificationReport r = run_sweep(c);
    CHECK(r.pass());
    CHECK(r.cells.size() == 10);
    const std::string csv = emit_table(r, "csv", true);
    CHECK(csv ==
          "s,k,sc_cores,nice_ideals,admissible_ideals,sym_dyck,pass,millis\n"
          "2,1,2,2,2,2,true,0\n2,2,2,2,2,2,true,0\n3,1,3,3,3,3,true,0\n3,2,2,2,2,2,true,0\n"
          "4,1,6,6,6,6,true,0\n4,2,5,5,5,5,true,0\n5,1,10,10,10,10,true,0\n5,2,5,5,5,5,true,0\n"
          "6,1,20,20,20,20,true,0\n6,2,13,13,13,13,true,0\n");
    CHECK(emit_table(run_sweep(c), "csv", true) == csv);
    const json j = json::parse(emit_table(r, "json", true));
    CHECK(j["cells"].size() == 10);
    CHECK_THROWS_AS(emit_table(r, "xml", true), InvalidInput);
}

TEST_CASE("an exhausted budget marks cells skipped, never passed") {
    SweepConfig c;
    c.s_lo = c.s_hi = 14;
    c.k_lo = c.k_hi = 1;
    c.budget_secs = 1e-6;
    const VerificationReport r = run_sweep(c);
    REQUIRE(r.cells.size() == 1);
    CHECK(r.cells[0].skipped);
    CHECK_FALSE(r.cells[0].pass);
    CHECK_FALSE(r.pass());
    CHECK(emit_table(r, "csv", true).find("skipped") != std::string::npos);
}

TEST_CASE("hasse diagrams") {
    CHECK(emit_hasse(4, 4, PosetKind::Core) == "digraph P_4_4 {\n  \"1\";\n  \"3\";\n}\n");
    const std::string planar = emit_hasse(20, 3, PosetKind::Planar);
    CHECK(planar.find("\"(9.5,-1)\"") != std::string::npos);
    const std::string core = emit_hasse(20, 4, PosetKind::Core);
    CHECK(core.find("\"19\" -> \"49\"") == std::string::npos);
    CHECK(core.find("\"1\" -> \"49\"") != std::string::npos);
}

TEST_CASE("json forms round-trip") {
    const Partition p{5, 3, 3, 1, 1};
    CHECK(to_json(p).dump() == R"({"parts":[5,3,3,1,1]})");
    CHECK(partition_from_json(to_json(p)) == p);
    CHECK(hooks_from_json(to_json(OddHookSet{9, 3, 1})) == OddHookSet{9, 3, 1});
    const PlanarPoset q = build_planar_poset(20, 4);
    const PlanarIdeal i = make_ideal(q, {{2, 0}, {4, 0}, {6, 0}, {8, 0}, {10, 0}, {6, 1}, {16, -1}, {20, -1}});
    CHECK(planar_ideal_from_json(to_json(i)) == i);
    const CoreIdeal c = make_ideal(build_core_poset(20, 3), {1, 29, 31, 33, 35, 75});
    CHECK(core_ideal_from_json(to_json(c)) == c);
    const PathWord w = parse_word("H1 U D D H2 H2", 4);
    CHECK(path_from_json(path_to_json(20, 4, w)) == w);
    CHECK_THROWS_AS(partition_from_json(json::parse(R"({"parts":[1,2]})")), InvalidInput);
    CHECK_THROWS_AS(partition_from_json(json::parse(R"({"nope":1})")), InvalidInput);
    CHECK_THROWS_AS(planar_ideal_from_json(json::parse(R"({"s":20,"k":4,"elements":[[6,1]]})")), InvalidInput);
}

}
