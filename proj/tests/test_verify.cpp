#include <doctest.h>

#include <string>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/verify.hpp"

using namespace qsc;

#ifndef QSC_SOURCE_DIR
#error "QSC_SOURCE_DIR must point at the repository root"
#endif

TEST_CASE("embedded whitelist stays in sync with the shipped file") {
    const auto embedded = default_whitelist();
    const auto shipped = load_whitelist(std::string(QSC_SOURCE_DIR) + "/data/known_discrepancies.json");
    REQUIRE(embedded.size() == shipped.size());
    for (const auto& [id, entry] : embedded) {
        REQUIRE(shipped.count(id) == 1);
        const auto& other = shipped.at(id);
        CHECK(entry.reason == other.reason);
        CHECK(entry.corrected == other.corrected);
    }
}

TEST_CASE("whitelist parsing") {
    CHECK(parse_whitelist(ojson::object()).empty());
    CHECK(parse_whitelist(nullptr).empty());
    CHECK_THROWS_AS(parse_whitelist(ojson::array()), precondition_error);
    CHECK_THROWS_AS(parse_whitelist(ojson::parse(R"({"known_discrepancies": 3})")),
                    precondition_error);
    CHECK_THROWS_AS(parse_whitelist(ojson::parse(R"({"known_discrepancies": [{}]})")),
                    precondition_error);
    CHECK_THROWS_AS(parse_whitelist(ojson::parse(
                        R"({"known_discrepancies": [{"check":"a"},{"check":"a"}]})")),
                    precondition_error);
    const auto one = parse_whitelist(
        ojson::parse(R"({"known_discrepancies": [{"check":"x","reason":"r","corrected":{"k":1}}]})"));
    REQUIRE(one.size() == 1);
    CHECK(one.at("x").reason == "r");
    CHECK(one.at("x").corrected.at("k") == 1);

    CHECK_THROWS_AS(load_whitelist("/nonexistent/whitelist.json"), precondition_error);
}

TEST_CASE("reference checks recompute every bundled claim once") {
    const auto rep = run_reference_checks(default_whitelist());
    REQUIRE(rep.checks.size() == 8);

    const std::vector<std::string> ids{"table1_row1", "table1_row2", "table1_row3",
                                       "table2_row1", "table2_row2", "table2_row3",
                                       "example1",    "example2"};
    for (std::size_t i = 0; i < ids.size(); ++i) CHECK(rep.checks[i].id == ids[i]);

    CHECK(rep.checks[0].status == "match");
    CHECK(rep.checks[1].status == "mismatch-flagged");
    CHECK(rep.checks[1].whitelisted);
    CHECK(rep.checks[2].status == "mismatch-flagged");
    CHECK(rep.checks[2].whitelisted);
    CHECK(rep.checks[3].status == "match");
    CHECK(rep.checks[4].status == "match");
    CHECK(rep.checks[5].status == "mismatch-flagged");
    CHECK(rep.checks[5].whitelisted);
    CHECK(rep.checks[6].status == "match");
    CHECK(rep.checks[7].status == "match");
    CHECK(rep.ok);

    // corrected values surface in the computed strings
    CHECK(rep.checks[1].computed.find("not dual-containing") != std::string::npos);
    CHECK(rep.checks[2].computed.find("[16,6,8]_9") != std::string::npos);
    CHECK(rep.checks[2].computed.find("[16,10,4]_9") != std::string::npos);
    CHECK(rep.checks[5].computed.find("removing C_1 and C_8") != std::string::npos);
    CHECK(rep.checks[6].computed.find("C_31={31,15}") != std::string::npos);
    CHECK(rep.checks[7].computed.find("[[31,2]]_41") != std::string::npos);

    // whitelisted entries carry the shipped reasoning
    CHECK(rep.checks[1].detail.contains("known_discrepancy"));
    CHECK(rep.checks[2].detail.at("known_discrepancy").at("corrected").at("code") ==
          ojson::array({16, 6, 8}));

    const auto doc = verification_report_json(rep);
    CHECK(doc.at("ok") == true);
    CHECK(doc.at("checks").size() == 8);
    CHECK(doc.at("checks").at(0).at("status") == "match");
}

TEST_CASE("report rendering: envelope, key order, CSV") {
    const auto ctx = AlgebraContext::build(5, 3);
    const auto doc = envelope(ctx, ojson{{"answer", 42}}, ojson::array());
    CHECK(doc.dump() ==
          R"({"meta":{"q":5,"n":3,"z":2,"c":1},"result":{"answer":42},"certificates":[]})");

    // repeated rendering is byte-identical
    CHECK(doc.dump() == envelope(ctx, ojson{{"answer", 42}}, ojson::array()).dump());

    const auto C = code_from_cosets(ctx, {ctx.table().index_of(1), ctx.table().index_of(2)});
    const auto cj = code_json(ctx, C);
    CHECK(cj.at("N") == 8);
    CHECK(cj.at("k") == 5);
    CHECK(cj.at("coset_reps") == ojson::array({1, 2}));
    CHECK(cj.at("roots") == ojson::array({1, 2, 5}));

    ojson rows = ojson::array();
    rows.push_back(ojson{{"a", 1}, {"b", "plain"}});
    rows.push_back(ojson{{"a", 2}, {"c", "needs,quoting"}});
    const auto csv = to_csv(rows);
    CHECK(csv == "a,b,c\n1,plain,\n2,,\"needs,quoting\"\n");

    const auto single = to_csv(ojson{{"x", "say \"hi\""}, {"y", ojson::array({1, 2})}});
    CHECK(single == "x,y\n\"say \"\"hi\"\"\",\"[1,2]\"\n");

    CHECK_THROWS_AS(to_csv(ojson::array({ojson::array()})), precondition_error);
}

TEST_CASE("mismatches lose their pass only without the whitelist") {
    const auto rep = run_reference_checks(Whitelist{});
    REQUIRE(rep.checks.size() == 8);
    CHECK_FALSE(rep.ok);
    CHECK(rep.checks[1].status == "mismatch-flagged");
    CHECK_FALSE(rep.checks[1].whitelisted);
    CHECK(rep.checks[0].status == "match");
}
