#include <doctest.h>

#include <string>

#include "swk/swk.h"

namespace {

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { swk_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("C API: create, run, destroy") {
    OwnedString err;
    swk_session* s = swk_session_create("universe 5;", &err.p);
    REQUIRE(s != nullptr);
    CHECK(err.p == nullptr);

    OwnedString name;
    name.p = swk_session_instance_name(s);
    CHECK(name.str() == "finset(5)");

    swk_session_set_bound(s, 5);
    swk_session_set_json(s, 1);
    OwnedString out;
    int status = swk_session_run(s, "k0", &out.p);
    CHECK(status == SWK_STATUS_OK);
    CHECK(out.str().find("\"free_rank\": 1") != std::string::npos);
    swk_session_destroy(s);
}

TEST_CASE("C API: parse errors are reported through err") {
    OwnedString err;
    swk_session* s = swk_session_create("field 4;", &err.p);
    CHECK(s == nullptr);
    REQUIRE(err.p != nullptr);
    CHECK(err.str().find("4 is not prime") != std::string::npos);
}

TEST_CASE("C API: status codes") {
    OwnedString err;
    swk_session* s = swk_session_create(
        "field 3; var x, y; set C { eq: x^2+y^2-1; }", &err.p);
    REQUIRE(s != nullptr);

    OwnedString out1;
    CHECK(swk_session_run(s, "bogus", &out1.p) == SWK_STATUS_USAGE);

    swk_session_set_budget(s, 2);
    OwnedString out2;
    CHECK(swk_session_run(s, "measure", &out2.p) == SWK_STATUS_BUDGET);

    swk_session_set_budget(s, 0);  // back to the default
    OwnedString out3;
    CHECK(swk_session_run(s, "measure", &out3.p) == SWK_STATUS_OK);
    CHECK(out3.str().find("4 points") != std::string::npos);

    CHECK(swk_session_set_bound(s, -1) == SWK_STATUS_USAGE);
    CHECK(swk_session_set_bound(nullptr, 3) == SWK_STATUS_USAGE);
    swk_session_destroy(s);
}

TEST_CASE("C API: null arguments are tolerated") {
    CHECK(swk_session_run(nullptr, "k0", nullptr) == SWK_STATUS_USAGE);
    swk_session_destroy(nullptr);
    swk_string_free(nullptr);

    swk_session* s = swk_session_create(nullptr, nullptr);  // empty script
    REQUIRE(s != nullptr);
    CHECK(swk_session_run(s, "axioms", nullptr) == SWK_STATUS_OK);
    swk_session_destroy(s);
}
