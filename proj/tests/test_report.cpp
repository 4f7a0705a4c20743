#include <doctest.h>

#include "kronforge/report.hpp"
#include "kronforge/table_cache.hpp"

using namespace kronforge;

TEST_CASE("report documents")
{
    Engine engine(RunConfig{10, {}, 2, true});

    CHECK(dump_json(core_json(t_core({4, 1}, 3))) == "{\"core\":\"1,1\",\"weight\":1}\n");
    CHECK(dump_json(core_json(t_core({2}, 2))) == "{\"core\":\"\",\"weight\":1}\n");

    CHECK(dump_json(decomposition_json(kron_square(engine, {2, 1}))) == "{\"3\":1,\"2,1\":1,\"1,1,1\":1}\n");

    const Json gp = good_pairs_json(4, 2, good_pairs(4, 2));
    CHECK(gp["pairs"].size() == 4);
    CHECK(gp["pairs"][0].dump() == "{\"a\":7,\"b\":0,\"witness\":[3,4]}");

    const Json saxl = saxl_json(saxl_verify(engine, 3));
    std::vector<std::string> keys;
    for (const auto& [key, value] : saxl.items())
        keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"k", "n", "total", "found", "missing", "telescopic_hits", "corollary16_hits", "kron_set"});
    CHECK(saxl["total"] == 11);
    CHECK(saxl["found"] == 11);
    CHECK(saxl["missing"].empty());
    CHECK(saxl["telescopic_hits"][0].dump() == "{\"partition\":\"6\",\"found\":true}");

    const Json cert = certificate_json(lift_by_good_pair(engine, {3}, 2, 3, *find_good_pair(3, 2, 0, 3)));
    CHECK(cert["alpha"] == "3,1,1,1");
    REQUIRE(cert["derivation"].size() == 2);
    CHECK(cert["derivation"][0]["step"] == "base-kron");
    CHECK(cert["derivation"][0]["basis"] == "brute-force");
    CHECK(cert["derivation"][1].dump() == "{\"step\":\"lift-a\",\"index\":3,\"pad\":[0,3],\"input\":\"3\",\"output\":\"3,1,1,1\"}");
    CHECK(cert["confirmed"].is_string());

    const Json blocks = blocks_report_json(combinatorial_blocks(engine, 3, 2), linked_blocks(engine, 3, 2));
    CHECK(blocks["equal"] == true);
    CHECK(blocks["combinatorial"].dump() == "[{\"core\":\"1\",\"members\":[\"3\",\"1,1,1\"]},{\"core\":\"2,1\",\"members\":[\"2,1\"]}]");

    const auto t = engine.table(4);
    const Json tr = table_report_json(*t, check_table(*t), table_checksum(*t));
    CHECK(tr["group_order"] == "24");
    CHECK(tr["classes"] == 5);

    const Json w = witness_json(block_dichotomy_witness(engine, {2, 1}, {2, 1}, {3}, 2));
    CHECK(w.dump() == "{\"case\":\"partner\",\"partner\":\"1,1,1\"}");
}

TEST_CASE("text rendering")
{
    const Json j = {{"k", 2}, {"missing", Json::array()}, {"kron_set", {"3", "2,1"}}, {"partner", nullptr}};
    CHECK(render_text(j) == "k: 2\nmissing:\nkron_set: 3 2,1\npartner: -\n");
}
