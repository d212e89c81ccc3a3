#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "mba/mba.h"

using nlohmann::json;

namespace {

// take ownership of a char* result and parse it
json take_json(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    mba_string_free(s);
    return j;
}

std::string take_str(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    mba_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and error state") {
    REQUIRE(mba_version() != nullptr);
    CHECK(std::string(mba_version()).size() > 0);
    REQUIRE(mba_last_error() != nullptr);
}

TEST_CASE("term parse / format / degree") {
    mba_term* t = nullptr;
    size_t off = 0;
    REQUIRE(mba_term_parse("(com x3 (lie x1 x2))", &t, &off) == MBA_OK);
    REQUIRE(t != nullptr);
    CHECK(mba_term_degree(t) == 3);
    char* s = nullptr;
    REQUIRE(mba_term_format(t, &s) == MBA_OK);
    CHECK(take_str(s) == "(com x3 (lie x1 x2))");
    mba_term_free(t);
}

TEST_CASE("parse errors report status and offset") {
    mba_term* t = nullptr;
    size_t off = 0;
    CHECK(mba_term_parse("(lie x1", &t, &off) == MBA_EPARSE);
    CHECK(off == 8);
    CHECK(std::string(mba_last_error()).size() > 0);
    CHECK(t == nullptr);

    CHECK(mba_term_parse(nullptr, &t, &off) == MBA_EINVAL);
}

TEST_CASE("normalize JSON shape") {
    mba_term* t = nullptr;
    size_t off = 0;
    REQUIRE(mba_term_parse("(com x3 (lie x1 x2))", &t, &off) == MBA_OK);
    char* out = nullptr;
    REQUIRE(mba_mtp_normalize(t, &out) == MBA_OK);
    json j = take_json(out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    std::multiset<std::string> coeffs;
    for (const auto& e : j) {
        CHECK(e.contains("monomial"));
        REQUIRE(e.contains("coefficient"));
        coeffs.insert(e["coefficient"].get<std::string>());
    }
    CHECK(coeffs == std::multiset<std::string>{"-1/2", "1/2"});

    out = nullptr;
    REQUIRE(mba_fman_normalize(t, &out) == MBA_OK);
    json f = take_json(out);
    CHECK(f.is_array());
    CHECK(!f.empty());
    mba_term_free(t);
}

TEST_CASE("basis enumeration") {
    char* out = nullptr;
    REQUIRE(mba_mtp_basis(0, 4, 1, &out) == MBA_OK);
    CHECK(take_json(out).size() == 8);

    out = nullptr;
    REQUIRE(mba_fman_basis(0, 4, 1, &out) == MBA_OK);
    CHECK(take_json(out).size() == 42);

    out = nullptr;
    REQUIRE(mba_mtp_basis(2, 2, 0, &out) == MBA_OK);
    CHECK(take_json(out).size() == 4);

    out = nullptr;
    CHECK(mba_mtp_basis(0, 0, 1, &out) == MBA_EINVAL);
}

TEST_CASE("fman dims and census") {
    char* out = nullptr;
    REQUIRE(mba_fman_dims(5, 1, &out) == MBA_OK);
    CHECK(take_json(out) == json({1, 2, 9, 42, 224}));

    out = nullptr;
    REQUIRE(mba_fman_census(4, 1, &out) == MBA_OK);
    json rows = take_json(out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() == 8);
    long total = 0, removed = 0;
    for (const auto& r : rows) {
        total += r["count"].get<long>() - r["c7_removed"].get<long>();
        removed += r["c7_removed"].get<long>();
    }
    CHECK(total == 42);
    CHECK(removed == 3);

    out = nullptr;
    CHECK(mba_fman_census(9, 1, &out) == MBA_ELIMIT);
}

TEST_CASE("identity catalog") {
    char* out = nullptr;
    REQUIRE(mba_identities_list(&out) == MBA_OK);
    json list = take_json(out);
    bool has_tp = false;
    for (const auto& e : list)
        if (e["name"] == "TP") {
            has_tp = true;
            CHECK(e["arity"] == 3);
            CHECK(e["kind"] == "defining");
        }
    CHECK(has_tp);

    out = nullptr;
    REQUIRE(mba_identity_show("MET-4", &out) == MBA_OK);
    json id = take_json(out);
    CHECK(id["arity"] == 4);
    CHECK(id["body"].is_array());

    out = nullptr;
    CHECK(mba_identity_show("nope", &out) == MBA_EINVAL);
    CHECK(std::string(mba_last_error()).find("nope") != std::string::npos);
}

TEST_CASE("random verification runs clean") {
    char* out = nullptr;
    REQUIRE(mba_verify_identities("mtp", 5, 20, 42, &out) == MBA_OK);
    json r = take_json(out);
    CHECK(r["failures"] == 0);
    CHECK(r["failed_identities"].empty());

    out = nullptr;
    REQUIRE(mba_verify_identities("mfm", 5, 20, 42, &out) == MBA_OK);
    CHECK(take_json(out)["failures"] == 0);

    out = nullptr;
    CHECK(mba_verify_identities("poisson", 5, 20, 42, &out) == MBA_EINVAL);
}

TEST_CASE("table check surface") {
    char* out = nullptr;
    REQUIRE(mba_mtp_table_check(4, 4, 4, 1, &out) == MBA_OK);
    json r = take_json(out);
    for (const auto& i : r["issues"])
        CHECK(i["note"].get<std::string>().rfind("suspected typo", 0) == 0);
}

TEST_CASE("oracle dimensions and certification") {
    char* out = nullptr;
    REQUIRE(mba_oracle_dim("mfm", 3, 1, 0, &out) == MBA_OK);
    json r = take_json(out);
    CHECK(r["dimension"] == 9);
    CHECK(r["columns"] == 48);

    out = nullptr;
    CHECK(mba_oracle_dim("mtp", 6, 1, 0, &out) == MBA_ELIMIT);

    out = nullptr;
    int labels[] = {1, 1, 2};
    REQUIRE(mba_oracle_graded("mtp", labels, 3, 1, &out) == MBA_OK);
    CHECK(take_json(out)["dimension"] == 4);

    out = nullptr;
    REQUIRE(mba_oracle_certify("mtp", 4, nullptr, 1, &out) == MBA_OK);
    json c = take_json(out);
    CHECK(c["certified"] == true);
    CHECK(c["dimension"] == 8);
    CHECK(c["candidates"] == 8);

    // a deliberately wrong candidate set is rejected with a witness
    out = nullptr;
    const char* bad = "[\"(lie x1 x2)\", \"(lie x2 x1)\"]";
    REQUIRE(mba_oracle_certify("mtp", 2, bad, 1, &out) == MBA_OK);
    json b = take_json(out);
    CHECK(b["certified"] == false);
    CHECK(!b["witness"].empty());
}

TEST_CASE("oracle matrix export") {
    char* out = nullptr;
    REQUIRE(mba_oracle_matrix("mtp", 2, 1, &out) == MBA_OK);
    std::string text = take_str(out);
    CHECK(text.rfind("%%MatrixMarket", 0) == 0);
    CHECK(text.find(" 4 ") != std::string::npos);  // 4 ambient columns at arity 2
}

TEST_CASE("derived identity verification") {
    char* out = nullptr;
    REQUIRE(mba_oracle_verify_derived("mtp", "eq-13", 1, &out) == MBA_OK);
    CHECK(take_json(out)["holds"] == true);

    out = nullptr;
    REQUIRE(mba_oracle_verify_derived("mfm", "FMAN-MET", 1, &out) == MBA_OK);
    CHECK(take_json(out)["holds"] == true);
}
