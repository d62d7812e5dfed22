#include "doctest.h"
#include "omega/catelem.hpp"
#include "omega/presheaf.hpp"

using namespace omega;

namespace {

Tree sample_tree() { return parse_term("a[u](b[v](c,d), e[w](), f)"); }

}  // namespace

TEST_CASE("element enumeration at shapes") {
    auto re = Ambient::representable(eta());
    Tree e = eta();
    CHECK(re->elements_at(shape_data(e).tree).size() == 1);
    auto rc2 = Ambient::representable(corolla(2));
    CHECK(rc2->elements_at(shape_data(e).tree).size() == 3);
    auto tl1 = Ambient::tensor(linear_tree(1), linear_tree(1));
    CHECK(tl1->elements_at(shape_data(e).tree).size() == 4);
}

TEST_CASE("boundaries") {
    CHECK(boundary(eta()).empty());
    SubPresheaf bc2 = boundary(corolla(2));
    CHECK(bc2.size() == 3);
    CHECK(bc2.eta_set().size() == 3);
    CHECK(bc2.elements().count("*"));
    SubPresheaf bl2 = boundary(linear_tree(2));
    CHECK(bl2.size() == 6);  // three vertices and three edges of the 2-simplex boundary
}

TEST_CASE("inner horns") {
    Tree l2 = linear_tree(2);
    SubPresheaf h = inner_horn(l2, "1");
    SubPresheaf bd = boundary(l2);
    CHECK(h.size() == 5);
    CHECK(h.subset_of(bd));
    CHECK(!(h == bd));
    CHECK(bd.subset_of(full_subpresheaf(Ambient::representable(l2))));
    CHECK_THROWS_AS(inner_horn(l2, "0"), NotInnerEdge);

    // the horn at b omits exactly the inner face contracting b
    Tree t = sample_tree();
    SubPresheaf horn_b = inner_horn(t, "b");
    for (const Face& f : elementary_faces(t)) {
        Elem e = elem_of_morphism(f.map);
        bool in_horn = horn_b.contains(e);
        bool is_db = f.kind == FaceKind::Inner && f.name == "b";
        CHECK(in_horn == !is_db);
    }
}

TEST_CASE("segal cores") {
    CHECK(segal_core(corolla(2)) ==
          full_subpresheaf(Ambient::representable(corolla(2))));
    CHECK(segal_core(corolla(0)) ==
          full_subpresheaf(Ambient::representable(corolla(0))));
    SubPresheaf spine = segal_core(linear_tree(3));
    CHECK(spine.size() == 7);  // four vertices, three unit edges
    SubPresheaf sceta = segal_core(eta());
    CHECK(sceta.size() == 1);
}

TEST_CASE("unions and intersections") {
    Tree l2 = linear_tree(2);
    std::vector<SubPresheaf> pieces;
    AmbientPtr a = Ambient::representable(l2);
    for (const Face& f : elementary_faces(l2))
        pieces.push_back(generated_by(a, {elem_of_morphism(f.map)}));
    CHECK(union_(pieces) == boundary(l2));
    CHECK_THROWS_AS(union_({boundary(l2), boundary(corolla(2))}), AmbientMismatch);

    // the two schemes of the square intersect in the diagonal chain
    auto amb = Ambient::tensor(linear_tree(1), linear_tree(1));
    const auto& shs = amb->shuffle_list();
    REQUIRE(shs.size() == 2);
    SubPresheaf fa = shuffle_subobject(amb, shs[0]);
    SubPresheaf fb = shuffle_subobject(amb, shs[1]);
    SubPresheaf diag = intersection({fa, fb});
    CHECK(diag.eta_set() == std::set<std::string>{"0|0", "1|1"});
    CHECK(diag.size() == 3);  // two endpoints and the diagonal edge

    // intersection of all schemes keeps the shared root and leaves
    auto amb2 = Ambient::tensor(linear_tree(1), corolla(2));
    std::vector<SubPresheaf> all;
    for (const auto& sh : amb2->shuffle_list()) all.push_back(shuffle_subobject(amb2, sh));
    SubPresheaf inter = intersection(all);
    auto etas = inter.eta_set();
    CHECK(etas.count("1|r"));   // shared root
    CHECK(etas.count("0|l1")); // shared leaves
    CHECK(etas.count("0|l2"));
}

TEST_CASE("action closure under restriction") {
    SubPresheaf bd = boundary(sample_tree());
    for (const Elem& e : bd.all_elems()) {
        const ShapeData& sd = shape_data(e.shape);
        for (const auto& f : sd.faces)
            CHECK(bd.contains(restrict_elem(e, f.src_code, f.edge_map)));
        for (const auto& g : sd.auts) CHECK(bd.contains(restrict_elem(e, e.shape, g)));
    }
}

TEST_CASE("fullness") {
    SubPresheaf bc2 = boundary(corolla(2));
    SubPresheaf full_c2 = full_subpresheaf(Ambient::representable(corolla(2)));
    CHECK(!is_full(bc2, full_c2));
    CHECK_THROWS_AS(is_full(full_c2, bc2), NotASubobject);

    auto amb = Ambient::tensor(linear_tree(1), corolla(2));
    SubPresheaf fullt = full_subpresheaf(amb);
    for (const auto& sh : amb->shuffle_list()) {
        SubPresheaf fs = shuffle_subobject(amb, sh);
        CHECK(is_full(fs, fullt));
        CHECK(shuffle_full_bounded(amb, sh, 2));
    }
    // fullness is transitive on a generated chain
    auto ambq = Ambient::tensor(linear_tree(1), linear_tree(1));
    SubPresheaf fullq = full_subpresheaf(ambq);
    SubPresheaf fa = shuffle_subobject(ambq, ambq->shuffle_list()[0]);
    SubPresheaf fb = shuffle_subobject(ambq, ambq->shuffle_list()[1]);
    SubPresheaf diag = intersection({fa, fb});
    CHECK(is_full(fa, fullq));
    CHECK(is_full(diag, fa));
    CHECK(is_full(diag, fullq));
}

TEST_CASE("representability") {
    CHECK(!is_representable(boundary(corolla(2))));
    SubPresheaf full_c2 = full_subpresheaf(Ambient::representable(corolla(2)));
    auto w = is_representable(full_c2);
    REQUIRE(w.has_value());
    CHECK(canonical_code(w->object) == canonical_code(corolla(2)));

    auto amb = Ambient::tensor(linear_tree(1), corolla(2));
    for (const auto& sh : amb->shuffle_list()) {
        auto ws = is_representable(shuffle_subobject(amb, sh));
        REQUIRE(ws.has_value());
        CHECK(canonical_code(ws->object) == canonical_code(sh.tree));
    }
    // intersections of schemes are representable; both routes agree
    auto ambq = Ambient::tensor(linear_tree(1), linear_tree(1));
    SubPresheaf fa = shuffle_subobject(ambq, ambq->shuffle_list()[0]);
    SubPresheaf fb = shuffle_subobject(ambq, ambq->shuffle_list()[1]);
    SubPresheaf diag = intersection({fa, fb});
    auto wd = is_representable(diag);
    REQUIRE(wd.has_value());
    std::set<std::string> keep = diag.eta_set();
    auto contracted = inner_face_contraction(ambq->shuffle_list()[0], keep);
    REQUIRE(contracted.has_value());
    CHECK(canonical_code(wd->object) == canonical_code(*contracted));
}

TEST_CASE("normality") {
    for (const Tree& t : enumerate_trees(2, 2)) {
        SubPresheaf full = full_subpresheaf(Ambient::representable(t));
        CHECK(is_normal(full));
        SubPresheaf bd = boundary(t);
        CHECK(is_normal_mono(bd, full));
        // the mono from the empty subobject detects exactly normality
        SubPresheaf empty(full.ambient());
        CHECK(is_normal_mono(empty, full) == is_normal(full));
    }
    // quotient of the 2-corolla by the swap: the swap fixes the identified
    // element, so the quotient is not normal
    auto amb = Ambient::representable(corolla(2));
    FinitePresheaf quotient = presheaf_of(amb);
    quotient.name = "C2-mod-swap";
    auto base = presheaf_of(amb);
    Tree c2 = corolla(2);
    TreeMorphism swap = automorphisms(c2)[1].is_identity() ? automorphisms(c2)[0]
                                                           : automorphisms(c2)[1];
    auto orbit_rep = [base, swap](const std::string& e) {
        Elem z = decode_elem(e);
        Elem other = z;
        for (auto& l : other.labels)
            l = swap.target().edge_name(
                swap.edge_image(swap.source().edge_index(l)));
        return std::min(z.encode(), other.encode());
    };
    quotient.elements_at = [base, orbit_rep](const Tree& shape) {
        std::set<std::string> out;
        for (const auto& e : base.elements_at(shape)) out.insert(orbit_rep(e));
        return std::vector<std::string>(out.begin(), out.end());
    };
    quotient.restrict = [base, orbit_rep](const TreeMorphism& m, const std::string& e) {
        return orbit_rep(base.restrict(m, e));
    };
    std::vector<Tree> shapes = enumerate_trees(2, 2);
    CHECK(finite_is_normal(presheaf_of(amb), shapes));
    CHECK(!finite_is_normal(quotient, shapes));
}

TEST_CASE("sieves") {
    CHECK(sieves(eta()).size() == 2);
    CHECK(sieves(linear_tree(1)).size() == 5);
    CHECK(sieves(corolla(2)).size() == 9);
    // every sieve is closed under the action (regenerating it changes nothing)
    for (const SubPresheaf& s : sieves(corolla(2))) {
        if (s.empty()) continue;
        CHECK(generated_by(s.ambient(), s.all_elems()) == s);
    }
}

TEST_CASE("products and categories of elements") {
    FinitePresheaf pe = presheaf_of(Ambient::representable(eta()));
    FinitePresheaf pc2 = presheaf_of(Ambient::representable(corolla(2)));
    FinitePresheaf prod = product_presheaf(pe, pc2);
    Tree e = eta();
    CHECK(prod.elements_at(shape_data(e).tree).size() == 3);
    // no nondegenerate elements at larger shapes
    for (const Tree& v : enumerate_trees(3, 3)) {
        if (v.vertex_count() == 0) continue;
        for (const auto& z : prod.elements_at(shape_data(v).tree))
            CHECK(finite_elem_degenerate(prod, shape_data(v).tree, z));
    }
    SmallCategory cat = category_of_elements(prod, 2, 3);
    std::string why;
    CHECK(cat.verify_axioms(&why));
    CHECK(connected_components(cat) == 3);

    // eta x eta is the unit again
    FinitePresheaf unit = product_presheaf(pe, pe);
    for (const Tree& v : enumerate_trees(2, 2))
        CHECK(unit.elements_at(shape_data(v).tree).size() ==
              pe.elements_at(shape_data(v).tree).size());

    // slice over a representable has a terminal object
    for (const Tree& t : enumerate_trees(2, 2)) {
        SmallCategory c = category_of_elements(presheaf_of(Ambient::representable(t)), 2, 2);
        CHECK(c.verify_axioms(&why));
        CHECK(c.terminal_object().has_value());
    }
    // nerve of the category of elements of the unit representable is a point
    SmallCategory unit_cat = category_of_elements(pe, 0, 1);
    auto counts = nerve_counts(unit_cat, 2);
    CHECK(counts[0] == 1);
    CHECK(counts[1] == 0);
    CHECK(counts[2] == 0);
}

TEST_CASE("cylinder maps") {
    for (const Tree& x : enumerate_trees(2, 2)) {
        CylinderMaps cm = cylinder_maps(x);
        for (const Tree& v : enumerate_trees(1, 2))
            for (const TreeMorphism& m : hom(v, x)) {
                Elem z = elem_of_morphism(m);
                Elem e0 = cm.end(0, z), e1 = cm.end(1, z);
                CHECK(e0 != e1);
                auto p0 = cm.project(e0), p1 = cm.project(e1);
                REQUIRE(p0.has_value());
                REQUIRE(p1.has_value());
                CHECK(*p0 == z);
                CHECK(*p1 == z);
            }
        // unit: the interval tensored with the unit tree is the interval
        if (x.vertex_count() == 0) {
            CHECK(cm.ambient->shuffle_list().size() == 1);
            CHECK(canonical_code(cm.ambient->shuffle_list()[0].tree) ==
                  canonical_code(linear_tree(1)));
        }
        // joint ends form a normal mono with disjoint images
        Elem top = elem_of_morphism(identity_morphism(x));
        SubPresheaf im0 = generated_by(cm.ambient, {cm.end(0, top)});
        SubPresheaf im1 = generated_by(cm.ambient, {cm.end(1, top)});
        CHECK(intersection({im0, im1}).empty());
        CHECK(is_normal_mono(union_({im0, im1}), full_subpresheaf(cm.ambient)));
    }
}
