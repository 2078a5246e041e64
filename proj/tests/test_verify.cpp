#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ssperm/verify.hpp"

using namespace ssperm;

TEST_CASE("thm3.1 report: involution holds, lmin/rmin coordinates do not") {
    const VerificationReport tiny = verify_thm_3_1(2);
    CHECK(tiny.passed());
    CHECK(tiny.items == 4);  // C_0 + C_1 + C_2

    const VerificationReport r = verify_thm_3_1(6);
    CHECK(r.items == 197);  // sum of C_0..C_6
    CHECK_FALSE(r.passed());
    // every failure is confined to tuple slots 7 and 8 (lmin/rmin); the
    // involution, closure, and the other six coordinates never fail
    for (const std::string& f : r.failures) {
        const bool slot7 = f.find("slot 7") != std::string::npos;
        const bool slot8 = f.find("slot 8") != std::string::npos;
        CHECK((slot7 || slot8));
    }
    // the first counterexample is the fixed point 1,3,2
    REQUIRE(!r.failures.empty());
    CHECK(r.failures.front().find("1,3,2") != std::string::npos);
}

TEST_CASE("thm3.1 determinism") {
    const VerificationReport a = verify_thm_3_1(4);
    const VerificationReport b = verify_thm_3_1(4);
    CHECK(a.failures == b.failures);
    CHECK(a.items == b.items);
}

TEST_CASE("thm4.1 passes") {
    const VerificationReport r = verify_thm_4_1(6);
    CHECK(r.passed());
    CHECK(r.items == 197);
}

TEST_CASE("thm4.2 passes") {
    const VerificationReport r = verify_thm_4_2(5);
    CHECK(r.passed());
    CHECK(r.items == 1 + 65);  // worked instance + C_0..C_5
}

TEST_CASE("thm5.1 passes") {
    const VerificationReport r = verify_thm_5_1(5);
    CHECK(r.passed());
    CHECK(r.items == 1 + 65);
}

TEST_CASE("formulas pass") {
    const VerificationReport r = verify_formulas(6);
    CHECK(r.passed());
    CHECK(r.items > 0);
}

TEST_CASE("table2 passes and bounds its range") {
    const VerificationReport r = verify_table_2(8);
    CHECK(r.passed());
    CHECK(r.items == 8 * 3);
    CHECK_THROWS_AS(verify_table_2(13), std::invalid_argument);
    CHECK(verify_table_2(0).passed());  // vacuous range
}

TEST_CASE("report serialization") {
    const VerificationReport r = verify_thm_4_1(3);
    const std::string text = report_text(r);
    CHECK(text.find("[PASS] thm4.1") != std::string::npos);
    CHECK(text.find("items=") != std::string::npos);
    const std::string json = report_json_string(r);
    CHECK(json.find("\"id\":\"thm4.1\"") != std::string::npos);
    CHECK(json.find("\"passed\":true") != std::string::npos);

    const VerificationReport bad = verify_thm_3_1(3);
    CHECK(report_text(bad).find("[FAIL]") != std::string::npos);
    CHECK(report_json_string(bad).find("\"passed\":false") != std::string::npos);
}
