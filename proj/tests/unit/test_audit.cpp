#include <stdexcept>
#include <map>
#include <string>

#include "doctest.h"
#include "mfib/classify.hpp"

using namespace mfib;

namespace {

std::map<std::string, AuditCheck> by_name(const AuditReport& rep) {
    std::map<std::string, AuditCheck> out;
    for (const auto& c : rep.checks) out[c.name] = c;
    return out;
}

}  // namespace

TEST_CASE("every audited inequality passes at c_max = 200") {
    AuditReport rep = audit_proof_bounds(200);
    for (const auto& c : rep.checks) {
        INFO(c.name, " worst=", c.worst_approx, " at c=", c.worst_at);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass());
    CHECK_THROWS_AS((void)audit_proof_bounds(19), std::invalid_argument);
}

TEST_CASE("extremal values match the independent exact evaluator (frozen)") {
    AuditReport rep = audit_proof_bounds(200);
    auto m = by_name(rep);
    REQUIRE(m.size() == rep.checks.size());  // names unique

    // range checks: worst value and its location, truncated at 9 digits
    struct Expect { const char* name; const char* worst; int at; };
    const Expect expected[] = {
        {"sumapbp_a6_le_-0.0002", "-0.000235625", 19},
        {"sumapbp_a5_le_-0.004", "-0.005057366", 13},
        {"sumapbp_a3_le_-0.007", "-0.007385702", 9},
        {"sumapbp_a4_le_-0.008", "-0.008601872", 9},
        {"sumapbp_a2_le_-0.0009", "-0.000974935", 13},
        {"sumapbp_ap2_le_-0.015", "-0.015023355", 11},
        {"ccprime_a2_lower_0347", "0.347456646", 12},
        {"ccprime_a2_upper_grid_0346", "0.343839817", 12},
        {"ccprime_a4ap7_diff_ge_001", "0.010247555", 21},
        {"ccprime_a4ap7_expr_pos", "0.001011750", 21},
        {"ccprime_a4ap6_ge_0004", "0.004807603", 13},
        {"ccprime_a4ap2_le_-0.005", "-0.005190311", 9},
        {"a2ap2_left_ge_-0.0671", "-0.066910743", 12},
        {"a2ap2_right_le_-0.0998", "-0.099987375", 12},
        {"a2ap2_mid_le_-0.0891", "-0.089256198", 11},
        {"a2ap2_mid_ge_-0.0913", "-0.091239669", 11},
        {"l35_cb3_range", "0.034607438", 10},
        {"l35_cb4_ge_016", "0.167500000", 5},
        {"l35_a3cb5_gt_01", "0.116071428", 8},
        {"l35_a3cb4_ge_005", "0.059171597", 7},
    };
    for (const auto& e : expected) {
        REQUIRE_MESSAGE(m.count(e.name), e.name);
        INFO(e.name);
        CHECK(m[e.name].worst_approx == e.worst);
        CHECK(m[e.name].worst_at == e.at);
    }

    // the t-range form peaks at (t,c) = (5,11), which is the stated constant
    CHECK(m["ccprime_a2_upperU_0346"].worst_approx == "0.345927705");
    CHECK(m["ccprime_a2_upperU_0346"].worst_at == 11);

    // constants, frozen the same way
    CHECK(m["ccprime_L319_gt_014"].worst_approx == "0.140151189");
    CHECK(m["ccprime_U218_lt_0139"].worst_approx == "0.138061406");
    CHECK(m["ccprime_a2_constU_0346"].worst_approx == "0.345927705");
    CHECK(m["ccprime_a2_const_0347"].worst_approx == "0.347524157");
    CHECK(m["aplusb_ratio_ge_122"].worst_approx == "1.228493994");
    CHECK(m["aplusb_ratio_lt_083"].worst_approx == "0.825693858");
}

TEST_CASE("the audited bounds are genuinely tight: nudging them flips the result") {
    // worst(sumapbp_a6) = -0.0002356...; a claimed bound of -0.00024 would fail
    AuditReport rep = audit_proof_bounds(25);
    auto m = by_name(rep);
    CHECK(Rational::parse(m["sumapbp_a6_le_-0.0002"].bound) == Rational::parse("-0.0002"));
    // the a=5 check carries the threshold-erratum note
    CHECK(m["sumapbp_a5_le_-0.004"].c_lo == 13);
    CHECK(!m["sumapbp_a5_le_-0.004"].note.empty());
    CHECK(!m["ccprime_a4ap7_diff_ge_001"].note.empty());
    CHECK(!m["ccprime_a4ap2_le_-0.005"].note.empty());
}

TEST_CASE("a failing check is reported as such") {
    AuditReport rep;
    rep.c_max = 50;
    AuditCheck bad;
    bad.name = "synthetic";
    bad.claim = "always fails";
    bad.c_lo = 20;
    bad.c_hi = 50;
    bad.relation = "<=";
    bad.bound = "-1";
    bad.worst = "0/1 + 0/1*sqrt5";
    bad.worst_approx = "0.000000000";
    bad.worst_at = 20;
    bad.pass = false;
    rep.checks.push_back(bad);
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.to_text().find("FAIL synthetic") != std::string::npos);
    CHECK(rep.to_text().find("AUDIT FAILED") != std::string::npos);
    CHECK(rep.to_csv().find(",0\n") != std::string::npos);
    CHECK(rep.to_json("audit").find("\"all_pass\":false") != std::string::npos);
}

TEST_CASE("report serialization round trips the pass flags") {
    AuditReport rep = audit_proof_bounds(30);
    std::string json = rep.to_json("audit");
    CHECK(json.find("\"schema_version\":1") != std::string::npos);
    CHECK(json.find("\"command\":\"audit\"") != std::string::npos);
    CHECK(json.find("\"all_pass\":true") != std::string::npos);
    std::string csv = rep.to_csv();
    CHECK(csv.find("name,c_lo,c_hi,relation,bound,worst_approx,worst_at,pass") == 0);
    std::string text = rep.to_text();
    CHECK(text.find("AUDIT OK") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}
