#include "doctest.h"
#include "omega/verify.hpp"

using namespace omega;

TEST_CASE("every suite runs green at reduced bounds") {
    Bounds small;
    small.max_vertices = 2;
    small.max_arity = 2;
    small.m = small.n = 1;
    small.sum_bound = 4;
    small.functoriality_vertices = 2;
    for (const std::string& id : suite_ids()) {
        VerificationReport r = run_verify(id, small);
        INFO(id, ": ", r.to_json());
        CHECK(r.ok());
        CHECK(r.passed > 0);
    }
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_verify("S9.nope", Bounds{}), UnknownSuite);
}

TEST_CASE("reports carry sorted instances") {
    Bounds b;
    b.sum_bound = 5;
    VerificationReport r = run_verify("S2.shuffle-count", b);
    for (size_t i = 1; i < r.instances.size(); ++i)
        CHECK(r.instances[i - 1].key < r.instances[i].key);
    CHECK(r.passed == static_cast<long long>(r.instances.size()));
}
