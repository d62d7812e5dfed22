#include "doctest.h"
#include "omega/presheaf.hpp"
#include "omega/shuffle.hpp"
#include "oracles.hpp"

using namespace omega;

TEST_CASE("shuffle counts on linear trees match lattice paths") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            long long expect = oracle::lattice_paths(m, n);
            CHECK(static_cast<long long>(shuffles(linear_tree(m), linear_tree(n)).size()) ==
                  expect);
            CHECK(static_cast<long long>(simplex_shuffles(m, n).size()) == expect);
        }
}

TEST_CASE("unit law") {
    for (const Tree& t : enumerate_trees(2, 3)) {
        auto shs = shuffles(eta(), t);
        REQUIRE(shs.size() == 1);
        CHECK(canonical_code(shs[0].tree) == canonical_code(t));
        auto shs2 = shuffles(t, eta());
        REQUIRE(shs2.size() == 1);
        CHECK(canonical_code(shs2[0].tree) == canonical_code(t));
    }
}

TEST_CASE("percolation agrees with exhaustive labelled-tree generation") {
    struct Case {
        Tree s, t;
        int shape_bound;
    };
    std::vector<Case> cases = {{linear_tree(1), linear_tree(1), 2},
                               {linear_tree(1), linear_tree(2), 3},
                               {linear_tree(1), corolla(2), 3},
                               {corolla(1), corolla(2), 3},
                               {eta(), corolla(2), 1},
                               {corolla(0), corolla(2), 3}};
    for (const auto& c : cases) {
        long long expect = oracle::labelled_shuffle_count(c.s, c.t, c.shape_bound);
        CHECK(static_cast<long long>(shuffles(c.s, c.t).size()) == expect);
    }
    // frozen value for the interval against the 2-corolla
    CHECK(shuffles(linear_tree(1), corolla(2)).size() == 2);
}

TEST_CASE("scheme invariants") {
    std::vector<std::pair<Tree, Tree>> pairs = {
        {linear_tree(2), corolla(2)},
        {corolla(2), corolla(2)},
        {parse_term("a[u](b[v](c,d), e[w](), f)"), linear_tree(1)}};
    for (const auto& [s, t] : pairs) {
        for (const ShuffleTree& sh : shuffles(s, t)) {
            // root label is the pair of roots
            CHECK(sh.label.at(sh.tree.root()) == std::make_pair(s.root(), t.root()));
            // leaf labels are pairs of leaves
            for (const auto& l : sh.tree.leaves()) {
                auto [a, b] = sh.label.at(l);
                CHECK(s.producer_of(s.edge_index(a)) < 0);
                CHECK(t.producer_of(t.edge_index(b)) < 0);
            }
            // each vertex is an S-move or a T-move with the prescribed inputs
            for (int v = 0; v < sh.tree.vertex_count(); ++v) {
                auto [se, te] = sh.label.at(sh.tree.edge_name(sh.tree.vertex_output(v)));
                std::multiset<std::pair<std::string, std::string>> got;
                for (int in : sh.tree.vertex_inputs(v))
                    got.insert(sh.label.at(sh.tree.edge_name(in)));
                char tag = sh.vertex_tag.at(sh.tree.vertex(v).name);
                std::multiset<std::pair<std::string, std::string>> want;
                if (tag == 'S') {
                    int sp = s.producer_of(s.edge_index(se));
                    REQUIRE(sp >= 0);
                    for (int in : s.vertex_inputs(sp)) want.insert({s.edge_name(in), te});
                } else {
                    int tp = t.producer_of(t.edge_index(te));
                    REQUIRE(tp >= 0);
                    for (int in : t.vertex_inputs(tp)) want.insert({se, t.edge_name(in)});
                }
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("simplicial shuffle intersections") {
    auto s11 = simplex_shuffles(1, 1);
    auto inter = simplex_shuffle_intersection(s11);
    CHECK(inter.points == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    CHECK(inter.nonempty);
    CHECK(inter.contains_origin);
    CHECK(inter.linear);
    CHECK_THROWS_AS(simplex_shuffle_intersection({}), EmptyIndexSet);

    auto s22 = simplex_shuffles(2, 2);
    REQUIRE(s22.size() == 6);
    for (unsigned mask = 1; mask < (1u << 6); ++mask) {
        std::vector<SimplicialShuffle> J;
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) J.push_back(s22[i]);
        auto r = simplex_shuffle_intersection(J);
        CHECK(r.nonempty);
        CHECK(r.contains_origin);
        CHECK(r.linear);
    }
}

TEST_CASE("linear percolations correspond to lattice paths with intersections") {
    int m = 2, n = 2;
    Tree lm = linear_tree(m), ln = linear_tree(n);
    auto perc = shuffles(lm, ln);
    auto simp = simplex_shuffles(m, n);
    REQUIRE(perc.size() == simp.size());
    std::set<std::vector<std::pair<int, int>>> a, b;
    for (const auto& sh : perc) {
        auto pts = linear_shuffle_points(sh, lm, ln);
        for (auto& p : pts) p = {m - p.first, n - p.second};
        std::sort(pts.begin(), pts.end());
        a.insert(pts);
    }
    for (const auto& ss : simp) {
        auto pts = ss.points();
        std::sort(pts.begin(), pts.end());
        b.insert(pts);
    }
    CHECK(a == b);
    // pairwise intersections correspond as well: shared labels of two schemes
    // are exactly the shared grid points of their lattice paths
    for (const auto& s1 : perc)
        for (const auto& s2 : perc) {
            std::set<std::string> e1(s1.tree.edges().begin(), s1.tree.edges().end());
            std::set<std::pair<int, int>> got;
            for (const auto& e : s2.tree.edges()) {
                if (!e1.count(e)) continue;
                auto [x, y] = split_label(e);
                got.insert({m - std::stoi(x), n - std::stoi(y)});
            }
            auto pts1 = linear_shuffle_points(s1, lm, ln);
            auto pts2 = linear_shuffle_points(s2, lm, ln);
            std::set<std::pair<int, int>> set1(pts1.begin(), pts1.end());
            std::set<std::pair<int, int>> want;
            for (auto p : pts2)
                if (set1.count(p)) want.insert(p);
            CHECK(got == want);
        }
}

TEST_CASE("tensor ambient elements factor through schemes") {
    auto amb = Ambient::tensor(linear_tree(1), corolla(2));
    for (const Tree& v : enumerate_trees(2, 2)) {
        for (const Elem& z : amb->elements_at(shape_data(v).tree)) {
            bool admissible = false;
            for (const auto& sh : amb->shuffle_list())
                admissible = admissible ||
                             labelling_in_shuffle(sh, shape_data(v).tree, z.labels);
            CHECK(admissible);
        }
    }
}
