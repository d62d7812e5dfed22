#include "doctest.h"
#include "omega/morphism.hpp"
#include "oracles.hpp"

using namespace omega;

namespace {

Tree sample_tree() { return parse_term("a[u](b[v](c,d), e[w](), f)"); }

long long ops_with_orderings(const Tree& t) {
    long long total = 0;
    for (const auto& [out, ins] : oracle::saturated_ops(t)) {
        if (ins.size() == 1 && ins[0] == out) {
            total += 1;  // identity
            continue;
        }
        long long fact = 1;
        for (size_t k = 2; k <= ins.size(); ++k) fact *= static_cast<long long>(k);
        total += fact;
    }
    return total;
}

}  // namespace

TEST_CASE("operations of the free operad") {
    CHECK(operations_of(eta()).size() == 1);
    CHECK(operations_of(corolla(2)).size() == 5);  // 3 identities + 2 orderings
    CHECK(ops_with_orderings(corolla(2)) == 5);
    Tree t = sample_tree();
    CHECK(operations_of(t).size() == static_cast<size_t>(ops_with_orderings(t)));
    // exactly one operation with output a and inputs {c,d,f} per ordering
    int a = t.edge_index("a");
    std::set<int> cdf = {t.edge_index("c"), t.edge_index("d"), t.edge_index("f")};
    int count = 0;
    for (const OperadOp& op : operations_of(t)) {
        if (op.output != a) continue;
        std::set<int> ins(op.inputs.begin(), op.inputs.end());
        if (ins == cdf) ++count;
    }
    CHECK(count == 6);
}

TEST_CASE("hom counts against the operadic-saturation oracle") {
    CHECK(hom(eta(), corolla(2)).size() == 3);
    CHECK(hom(eta(), sample_tree()).size() == 6);
    CHECK(hom(linear_tree(1), eta()).size() == 1);
    for (const Tree& s : enumerate_trees(2, 2))
        for (const Tree& t : enumerate_trees(2, 2)) {
            long long expect = oracle::hom_count_bruteforce(s, t);
            CHECK(static_cast<long long>(hom(s, t).size()) == expect);
        }
}

TEST_CASE("hom sets are duplicate-free and sorted") {
    auto fs = hom(linear_tree(2), linear_tree(2));
    for (size_t i = 1; i < fs.size(); ++i) CHECK(fs[i - 1].edge_map() < fs[i].edge_map());
}

TEST_CASE("composition laws") {
    Tree l1 = linear_tree(1), l2 = linear_tree(2), l3 = linear_tree(3);
    for (const auto& f : hom(l1, l2)) {
        CHECK(compose(identity_morphism(l2), f) == f);
        CHECK(compose(f, identity_morphism(l1)) == f);
    }
    // associativity over an exhaustive small corpus
    for (const auto& f : hom(l1, l2))
        for (const auto& g : hom(l2, l3))
            for (const auto& h : hom(l3, linear_tree(1)))
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
    CHECK_THROWS_AS(compose(hom(l1, l2)[0], hom(l1, l2)[0]), SourceTargetMismatch);
}

TEST_CASE("outer faces of linear trees compose into hom(L1, L3)") {
    Tree l1 = linear_tree(1), l2 = linear_tree(2), l3 = linear_tree(3);
    auto h13 = hom(l1, l3);
    CHECK(h13.size() == 10);  // monotone maps [1] -> [3]
    CHECK(oracle::monotone_maps(1, 3) == 10);
    for (const Face& f12 : elementary_faces(l2))
        for (const Face& f23 : elementary_faces(l3)) {
            if (!(f12.map.source() == l1) || !(f23.map.source() == l2)) continue;
            TreeMorphism comp = compose(f23.map, f12.map);
            CHECK(std::count(h13.begin(), h13.end(), comp) == 1);
        }
}

TEST_CASE("elementary faces") {
    auto fl2 = elementary_faces(linear_tree(2));
    CHECK(fl2.size() == 3);
    int inner = 0, outer = 0;
    for (const auto& f : fl2) (f.kind == FaceKind::Inner ? inner : outer)++;
    CHECK(inner == 1);
    CHECK(outer == 2);

    auto fc2 = elementary_faces(corolla(2));
    CHECK(fc2.size() == 3);
    for (const auto& f : fc2) CHECK(f.kind == FaceKind::CorollaEdge);

    Tree t = sample_tree();
    auto ft = elementary_faces(t);
    CHECK(ft.size() == 4);
    std::set<std::string> inner_names, outer_names;
    for (const auto& f : ft)
        (f.kind == FaceKind::Inner ? inner_names : outer_names).insert(f.name);
    CHECK(inner_names == std::set<std::string>{"b", "e"});
    CHECK(outer_names == std::set<std::string>{"v", "w"});
    // every face is a monomorphism into t
    for (const auto& f : ft) CHECK(f.map.is_mono());
}

TEST_CASE("elementary degeneracies") {
    CHECK(elementary_degeneracies(eta()).size() == 1);
    for (const Tree& t : enumerate_trees(2, 3))
        CHECK(elementary_degeneracies(t).size() == static_cast<size_t>(t.edge_count()));
    // the two faces of L1 split the degeneracy L1 -> eta
    Tree e = eta(), l1 = linear_tree(1);
    auto sigma = elementary_degeneracies(e)[0].map;  // L1-shaped source onto eta
    for (const auto& f : hom(e, sigma.source()))
        CHECK(compose(sigma, f) == identity_morphism(e));
}

TEST_CASE("factorisation triples") {
    Tree l1 = linear_tree(1);
    auto tri_id = factorize(identity_morphism(l1));
    CHECK(tri_id.degeneracy_chain.empty());
    CHECK(tri_id.face_chain.empty());
    CHECK(tri_id.iso.is_identity());

    // a pure degeneracy factors with trivial iso and face
    auto sigma = elementary_degeneracies(eta())[0].map;
    auto tri_sigma = factorize(sigma);
    CHECK(tri_sigma.degeneracy_chain.size() == 1);
    CHECK(tri_sigma.face_chain.empty());
    CHECK(tri_sigma.recomposed() == sigma);

    // exhaustive recomposition over a small corpus
    for (const Tree& s : enumerate_trees(2, 2))
        for (const Tree& t : enumerate_trees(2, 2))
            for (const auto& f : hom(s, t)) {
                auto tri = factorize(f);
                CHECK(tri.recomposed() == f);
                CHECK(tri.iso.is_iso());
                CHECK(tri.face.is_mono());
            }
}

TEST_CASE("closure functor") {
    Tree t = sample_tree();
    Closure c = closure(t);
    CHECK(is_closed(c.tree));
    CHECK(c.embedding.is_mono());
    // triangle identity: cl applied to the unit is the identity
    for (const Tree& u : enumerate_trees(3, 3)) {
        Closure cu = closure(u);
        CHECK(closure_morphism(cu.embedding).is_identity());
    }
    CHECK(closure_morphism(identity_morphism(t)).is_identity());
    // the closure of the displayed outer face is a composite of the three
    // inner faces contracting the capped leaves
    Tree r = parse_term("a[v](b,c)");
    Tree tt = parse_term("a[v](b, c[w](d,e,f))");
    TreeMorphism dw = make_morphism_names(r, tt, {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    auto tri = factorize(closure_morphism(dw));
    CHECK(tri.degeneracy_chain.empty());
    CHECK(tri.face_chain.size() == 3);
    std::set<std::string> contracted;
    for (const auto& f : tri.face_chain) {
        CHECK(f.kind == FaceKind::Inner);
        contracted.insert(f.name);
    }
    CHECK(contracted == std::set<std::string>{"d", "e", "f"});
}

TEST_CASE("decalage functor on closed trees") {
    Tree c0 = corolla(0);
    Decalage d = decalage(c0);
    CHECK(decalage_morphism(identity_morphism(c0)).is_identity());
    CHECK(d.inclusion.is_mono());
    CHECK(d.root_map.root_preserving());
    CHECK_THROWS_AS(decalage(eta()), NotClosedError);
    CHECK_THROWS_AS(decalage_morphism(identity_morphism(eta())), NotClosedError);
    // naturality over closed trees with few vertices
    std::vector<Tree> closed;
    for (const Tree& t : enumerate_trees(3, 3))
        if (is_closed(t)) closed.push_back(t);
    for (const Tree& a : closed)
        for (const Tree& b : closed) {
            Decalage da = decalage(a), db = decalage(b);
            for (const auto& f : hom(a, b)) {
                TreeMorphism df = decalage_morphism(f);
                CHECK(compose(df, da.inclusion) == compose(db.inclusion, f));
                CHECK(compose(df, da.root_map) == db.root_map);
            }
        }
}

TEST_CASE("automorphisms") {
    CHECK(automorphisms(corolla(2)).size() == 2);
    CHECK(automorphisms(corolla(3)).size() == 6);
    CHECK(automorphisms(linear_tree(3)).size() == 1);
}

TEST_CASE("morphism json round trip") {
    Tree l1 = linear_tree(1), l2 = linear_tree(2);
    for (const auto& f : hom(l1, l2)) {
        TreeMorphism g = morphism_from_json(morphism_to_json(f));
        CHECK(g == f);
    }
}
