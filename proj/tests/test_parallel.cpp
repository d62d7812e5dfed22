// The OpenMP kernels must agree with their serial references, independent of
// the schedule; reports must be byte-identical across runs.

#include "doctest.h"
#include "omega/shuffle.hpp"
#include "omega/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace omega;

TEST_CASE("hom kernel: parallel equals serial") {
    std::vector<std::pair<Tree, Tree>> cases = {
        {linear_tree(3), linear_tree(4)},
        {linear_tree(4), linear_tree(4)},
        {corolla(3), corolla(3)},
        {parse_term("a[u](b[v](c,d), e[w](), f)"), parse_term("a[u](b[v](c,d), e[w](), f)")},
        {linear_tree(2), parse_term("a[u](b[v](c,d,e), f[w](g,h,i), j)")}};
    for (const auto& [s, t] : cases) {
        auto a = hom_serial(s, t);
        auto b = hom_parallel(s, t);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}

TEST_CASE("shuffle kernel: parallel equals serial") {
    std::vector<std::pair<Tree, Tree>> cases = {
        {linear_tree(3), linear_tree(3)},
        {corolla(2), corolla(3)},
        {linear_tree(2), parse_term("a[u](b[v](c,d,e), f[w](g,h,i), j)")}};
    for (const auto& [s, t] : cases) {
        auto a = shuffles_serial(s, t);
        auto b = shuffles_parallel(s, t);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].code == b[i].code);
    }
}

#ifdef _OPENMP
TEST_CASE("kernels are schedule-independent") {
    Tree s = linear_tree(4), t = linear_tree(4);
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    auto one = hom_parallel(s, t);
    omp_set_num_threads(saved);
    auto many = hom_parallel(s, t);
    REQUIRE(one.size() == many.size());
    for (size_t i = 0; i < one.size(); ++i) CHECK(one[i] == many[i]);
}
#endif

TEST_CASE("verification reports are byte-identical across runs") {
    Bounds b;
    b.m = b.n = 2;
    auto r1 = run_verify("S2.prop-asph", b);
    auto r2 = run_verify("S2.prop-asph", b);
    CHECK(r1.to_json() == r2.to_json());

    Bounds s;
    s.max_vertices = 2;
    auto r3 = run_verify("S5.prop-shuffles", s);
    auto r4 = run_verify("S5.prop-shuffles", s);
    CHECK(r3.to_json() == r4.to_json());
}
