#include "doctest.h"
#include "omega/tree.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

Tree sample_tree() { return parse_term("a[u](b[v](c,d), e[w](), f)"); }

// structural conversion for the brute-force isomorphism oracle
oracle::OTree to_otree(const Tree& t, int edge) {
    oracle::OTree o;
    int p = t.producer_of(edge);
    if (p < 0) return o;
    o.has_vertex = true;
    for (int in : t.vertex_inputs(p)) o.kids.push_back(to_otree(t, in));
    return o;
}

bool trees_iso_oracle(const Tree& a, const Tree& b) {
    return oracle::otree_iso(to_otree(a, a.root_index()), to_otree(b, b.root_index()));
}

}  // namespace

TEST_CASE("basic constructors") {
    CHECK(eta().edge_count() == 1);
    CHECK(eta().vertex_count() == 0);
    CHECK(corolla(0).edge_count() == 1);
    CHECK(corolla(0).vertex_count() == 1);
    CHECK(corolla(3).edge_count() == 4);
    CHECK(linear_tree(2).edge_count() == 3);
    CHECK(linear_tree(2).vertex_count() == 2);
    for (const auto& v : linear_tree(4).vertices()) CHECK(v.inputs.size() == 1);
}

TEST_CASE("canonical codes are relabelling-invariant") {
    Tree c2 = corolla(2);
    Tree c2_renamed = parse_term("root[vtx](y, x)");
    CHECK(canonical_code(c2) == canonical_code(c2_renamed));
    CHECK(canonical_code(linear_tree(1)) == canonical_code(corolla(1)));
    CHECK(canonical_code(linear_tree(1)) != canonical_code(corolla(2)));
    CHECK(canonical_code(eta()) != canonical_code(corolla(0)));
}

TEST_CASE("canonical code equals iff isomorphic, against brute-force search") {
    auto corpus = enumerate_trees(3, 2);
    for (size_t i = 0; i < corpus.size(); ++i)
        for (size_t j = i; j < corpus.size(); ++j) {
            bool codes = canonical_code(corpus[i]) == canonical_code(corpus[j]);
            bool iso = trees_iso_oracle(corpus[i], corpus[j]);
            CHECK(codes == iso);
        }
    // a relabelled copy stays isomorphic
    Tree t = sample_tree();
    CanonicalForm cf = canonical_form(t);
    CHECK(canonical_code(cf.tree) == canonical_code(t));
    CHECK(trees_iso_oracle(cf.tree, t));
}

TEST_CASE("enumeration is exhaustive up to isomorphism") {
    CHECK(enumerate_trees(0, 5).size() == 1);
    CHECK(enumerate_trees(1, 2).size() == 4);  // eta, C0, C1, C2
    // frozen from the independent recursive-generation oracle
    CHECK(oracle::count_tree_classes(2, 2) == 10);
    CHECK(enumerate_trees(2, 2).size() == 10);
    CHECK(oracle::count_tree_classes(3, 3) == 73);
    CHECK(enumerate_trees(3, 3).size() == 73);
    // deterministic order and duplicate-free
    auto a = enumerate_trees(3, 3);
    auto b = enumerate_trees(3, 3);
    for (size_t i = 0; i < a.size(); ++i) CHECK(canonical_code(a[i]) == canonical_code(b[i]));
    std::set<std::string> codes;
    for (const auto& t : a) codes.insert(canonical_code(t));
    CHECK(codes.size() == a.size());
}

TEST_CASE("leaves and root match the incidence definitions") {
    for (const Tree& t : enumerate_trees(3, 3)) {
        for (const auto& l : t.leaves()) {
            int e = t.edge_index(l);
            CHECK(t.producer_of(e) < 0);
        }
        CHECK(t.consumer_of(t.root_index()) < 0);
        // every non-root edge feeds exactly one vertex
        for (int e = 0; e < t.edge_count(); ++e)
            if (e != t.root_index()) CHECK(t.consumer_of(e) >= 0);
    }
}

TEST_CASE("closed trees and closures") {
    CHECK(is_closed(corolla(0)));
    CHECK(!is_closed(eta()));
    Tree t = sample_tree();
    Tree cl = closure_tree(t);
    CHECK(is_closed(cl));
    CHECK(cl.edge_count() == t.edge_count());
    CHECK(cl.vertex_count() == t.vertex_count() + 3);  // caps on c, d, f
    for (const char* leaf : {"c", "d", "f"})
        CHECK(cl.producer_of(cl.edge_index(leaf)) >= 0);
    // closure of eta is the nullary corolla
    CHECK(canonical_code(closure_tree(eta())) == canonical_code(corolla(0)));
    // idempotence over the corpus
    for (const Tree& u : enumerate_trees(3, 3)) {
        Tree once = closure_tree(u);
        CHECK(closure_tree(once) == once);
        CHECK(is_closed(once));
    }
}

TEST_CASE("decalage object construction") {
    DecalageTree d0 = decalage_tree(corolla(0));
    CHECK(d0.tree.edge_count() == 2);
    CHECK(d0.tree.vertex_count() == 2);
    CHECK(is_closed(d0.tree));
    Tree cl = closure_tree(sample_tree());
    DecalageTree d = decalage_tree(cl);
    CHECK(d.tree.edge_count() == 7);
    CHECK(d.tree.root() == d.new_root_edge);
    for (const Tree& u : enumerate_trees(4, 3)) {
        if (!is_closed(u)) {
            CHECK_THROWS_AS(decalage_tree(u), NotClosedError);
            continue;
        }
        DecalageTree du = decalage_tree(u);
        CHECK(du.tree.vertex_count() == u.vertex_count() + 1);
        CHECK(du.tree.edge_count() == u.edge_count() + 1);
        CHECK(is_closed(du.tree));
    }
}

TEST_CASE("term syntax round trip") {
    Tree t = sample_tree();
    CHECK(to_term(t) == "a[u](b[v](c, d), e[w](), f)");
    CHECK(parse_term(to_term(t)) == t);
    CHECK(parse_term("a[u](b[v](c,d), e[w](), f)") == t);
    CHECK(parse_term("x") == Tree::make({"x"}, "x", {}));
    CHECK_THROWS_AS(parse_term("a[u](b"), TreeError);
    CHECK_THROWS_AS(parse_term("a[u](a)"), TreeError);  // duplicate edge
}

TEST_CASE("json round trip with order-insignificant inputs") {
    Tree t = sample_tree();
    CHECK(tree_from_json(to_json(t)) == t);
    Tree shuffled = tree_from_json(
        R"({"edges":["f","e","d","c","b","a"],"root":"a",
            "vertices":[{"name":"u","out":"a","in":["f","e","b"]},
                        {"name":"v","out":"b","in":["d","c"]},
                        {"name":"w","out":"e","in":[]}]})");
    CHECK(shuffled == t);
}

TEST_CASE("invariant violations are rejected") {
    CHECK_THROWS_AS(Tree::make({"a", "b"}, "a", {}), TreeError);  // disconnected
    CHECK_THROWS_AS(Tree::make({"a"}, "b", {}), TreeError);       // root missing
    CHECK_THROWS_AS(
        Tree::make({"a", "b"}, "a",
                   {Vertex{"u", "a", {"b"}}, Vertex{"v", "a", {}}}),
        TreeError);  // two producers
    CHECK_THROWS_AS(Tree::make({"a", "b", "c"}, "a",
                               {Vertex{"u", "a", {"b", "c"}}, Vertex{"v", "b", {"c"}}}),
                    TreeError);  // edge consumed twice
}

TEST_CASE("dot output mentions every edge") {
    Tree t = sample_tree();
    std::string dot = to_dot(t);
    for (const auto& e : t.edges()) CHECK(dot.find("label=\"" + e + "\"") != std::string::npos);
}
