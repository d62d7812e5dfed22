#include "omega/morphism.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omega {

std::optional<std::vector<int>> witness_vertices(const Tree& t, int output,
                                                 const std::vector<int>& input_set_sorted) {
    auto in_inputs = [&](int e) {
        return std::binary_search(input_set_sorted.begin(), input_set_sorted.end(), e);
    };
    std::vector<int> vertices;
    std::vector<int> hit;
    std::vector<int> stack = {output};
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        if (in_inputs(e)) {
            hit.push_back(e);
            continue;
        }
        int p = t.producer_of(e);
        if (p < 0) return std::nullopt;  // reached a leaf that is not an input
        vertices.push_back(p);
        for (int in : t.vertex_inputs(p)) stack.push_back(in);
    }
    std::sort(hit.begin(), hit.end());
    if (hit != input_set_sorted) return std::nullopt;  // some input was never reached
    std::sort(vertices.begin(), vertices.end());
    return vertices;
}

std::vector<OperadOp> operations_of(const Tree& t) {
    std::vector<OperadOp> out;
    for (int e = 0; e < t.edge_count(); ++e) out.push_back(OperadOp{e, {e}, {}});

    // Subtrees grown upward from each root edge; at every frontier edge either
    // stop (making it a leaf of the operation) or include the vertex above.
    std::function<void(int, std::vector<int>&, std::vector<int>&, std::vector<int>&)> grow =
        [&](int root, std::vector<int>& frontier, std::vector<int>& leaves,
            std::vector<int>& verts) {
            if (frontier.empty()) {
                if (verts.empty()) return;  // identity, already listed
                std::vector<int> leaf_sorted = leaves;
                std::sort(leaf_sorted.begin(), leaf_sorted.end());
                std::vector<int> vs = verts;
                std::sort(vs.begin(), vs.end());
                std::vector<int> perm = leaf_sorted;
                do {
                    out.push_back(OperadOp{root, perm, vs});
                } while (std::next_permutation(perm.begin(), perm.end()));
                return;
            }
            int e = frontier.back();
            frontier.pop_back();
            // stop at e
            leaves.push_back(e);
            grow(root, frontier, leaves, verts);
            leaves.pop_back();
            // expand through the vertex above e, when there is one
            int p = t.producer_of(e);
            if (p >= 0) {
                verts.push_back(p);
                size_t base = frontier.size();
                for (int in : t.vertex_inputs(p)) frontier.push_back(in);
                grow(root, frontier, leaves, verts);
                frontier.resize(base);
                verts.pop_back();
            }
            frontier.push_back(e);
        };
    for (int r = 0; r < t.edge_count(); ++r) {
        std::vector<int> frontier, leaves, verts;
        int p = t.producer_of(r);
        if (p < 0) continue;
        verts.push_back(p);
        for (int in : t.vertex_inputs(p)) frontier.push_back(in);
        grow(r, frontier, leaves, verts);
    }
    return out;
}

// --- TreeMorphism -------------------------------------------------------------

namespace {

std::optional<std::vector<OperadOp>> build_vertex_map(const Tree& s, const Tree& t,
                                                      const std::vector<int>& em) {
    std::vector<OperadOp> ops;
    ops.reserve(s.vertex_count());
    for (int vi = 0; vi < s.vertex_count(); ++vi) {
        int out = em[s.vertex_output(vi)];
        std::vector<int> ins;
        for (int in : s.vertex_inputs(vi)) ins.push_back(em[in]);
        std::vector<int> uniq = ins;
        std::sort(uniq.begin(), uniq.end());
        if (ins.size() == 1 && ins[0] == out) {
            ops.push_back(OperadOp{out, ins, {}});  // identity operation
            continue;
        }
        if (std::adjacent_find(uniq.begin(), uniq.end()) != uniq.end())
            return std::nullopt;  // operations have pairwise distinct inputs
        auto w = witness_vertices(t, out, uniq);
        if (!w) return std::nullopt;
        ops.push_back(OperadOp{out, ins, std::move(*w)});
    }
    return ops;
}

}  // namespace

std::optional<TreeMorphism> TreeMorphism::try_make(TreePtr src, TreePtr tgt,
                                                   std::vector<int> edge_map) {
    auto ops = build_vertex_map(*src, *tgt, edge_map);
    if (!ops) return std::nullopt;
    TreeMorphism f;
    f.src_ = std::move(src);
    f.tgt_ = std::move(tgt);
    f.edge_map_ = std::move(edge_map);
    f.vertex_map_ = std::move(*ops);
    return f;
}

TreeMorphism make_morphism(TreePtr src, TreePtr tgt, std::vector<int> edge_map) {
    auto f = TreeMorphism::try_make(std::move(src), std::move(tgt), std::move(edge_map));
    if (!f) throw MorphismError("edge map does not define a morphism");
    return *f;
}

TreeMorphism make_morphism_names(const Tree& src, const Tree& tgt,
                                 const std::map<std::string, std::string>& edge_map) {
    auto sp = std::make_shared<const Tree>(src);
    auto tp = std::make_shared<const Tree>(tgt);
    std::vector<int> em(src.edge_count(), -1);
    for (const auto& [a, b] : edge_map) em[sp->edge_index(a)] = tp->edge_index(b);
    for (int e = 0; e < src.edge_count(); ++e)
        if (em[e] < 0) throw MorphismError("edge map misses edge " + src.edge_name(e));
    return make_morphism(sp, tp, std::move(em));
}

bool TreeMorphism::is_identity() const {
    if (!(source() == target())) return false;
    for (int e = 0; e < source().edge_count(); ++e)
        if (edge_map_[e] != e) return false;
    return true;
}

bool TreeMorphism::is_mono() const {
    std::vector<int> seen = edge_map_;
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool TreeMorphism::is_iso() const {
    return source().edge_count() == target().edge_count() && is_mono();
}

std::string TreeMorphism::encode() const {
    std::string s;
    for (int e = 0; e < source().edge_count(); ++e) {
        s += source().edge_name(e);
        s += "->";
        s += target().edge_name(edge_map_[e]);
        s += ";";
    }
    return s;
}

TreeMorphism identity_morphism(TreePtr t) {
    std::vector<int> em(t->edge_count());
    std::iota(em.begin(), em.end(), 0);
    return make_morphism(t, t, std::move(em));
}

TreeMorphism identity_morphism(const Tree& t) {
    return identity_morphism(std::make_shared<const Tree>(t));
}

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f) {
    if (!(f.target() == g.source()))
        throw SourceTargetMismatch("compose: target of f differs from source of g");
    std::vector<int> em(f.source().edge_count());
    for (int e = 0; e < f.source().edge_count(); ++e)
        em[e] = g.edge_image(f.edge_image(e));
    auto h = TreeMorphism::try_make(f.source_ptr(), g.target_ptr(), std::move(em));
    assert(h && "composite of operad maps must be an operad map");
    return *h;
}

// --- hom enumeration ----------------------------------------------------------

namespace {

struct HomSearch {
    const Tree& s;
    TreePtr sp, tp;
    std::vector<int> order;                 // source edges, root first, outputs before inputs
    std::vector<std::vector<int>> upsets;   // per target edge, sorted
    std::vector<bool> closable;             // per target edge
    std::vector<int> assign;                // source edge -> target edge
    std::vector<int> remaining_inputs;      // per source vertex

    HomSearch(TreePtr sp_, TreePtr tp_) : s(*sp_), sp(sp_), tp(tp_) {
        const Tree& t = *tp;
        order.reserve(s.edge_count());
        std::vector<int> queue = {s.root_index()};
        size_t qi = 0;
        while (qi < queue.size()) {
            int e = queue[qi++];
            order.push_back(e);
            int p = s.producer_of(e);
            if (p >= 0)
                for (int in : s.vertex_inputs(p)) queue.push_back(in);
        }
        upsets.resize(t.edge_count());
        closable.resize(t.edge_count());
        for (int e = 0; e < t.edge_count(); ++e) {
            upsets[e] = t.upset(e);
            closable[e] = t.closable_above(e);
        }
        assign.assign(s.edge_count(), -1);
        remaining_inputs.resize(s.vertex_count());
        for (int v = 0; v < s.vertex_count(); ++v)
            remaining_inputs[v] = static_cast<int>(s.vertex_inputs(v).size());
    }

    // Checks triggered by assigning target image `img` to source edge `e`.
    bool admissible(int e, int img) {
        const Tree& t = *tp;
        int p = s.producer_of(e);
        if (p >= 0 && s.vertex_inputs(p).empty() && !closable[img])
            return false;  // nullary vertex needs the unique nullary operation
        int c = s.consumer_of(e);
        if (c < 0) return true;
        int out_img = assign[s.vertex_output(c)];
        const auto& ins = s.vertex_inputs(c);
        if (ins.size() == 1) {
            if (img == out_img) return true;  // identity operation
            auto w = witness_vertices(t, out_img, {img});
            return w.has_value();
        }
        // arity >= 2: inputs pairwise distinct and distinct from the output
        if (img == out_img) return false;
        for (int in : ins)
            if (in != e && assign[in] == img) return false;
        if (remaining_inputs[c] == 1) {  // this assignment completes the vertex
            std::vector<int> set;
            for (int in : ins) set.push_back(in == e ? img : assign[in]);
            std::sort(set.begin(), set.end());
            return witness_vertices(t, out_img, set).has_value();
        }
        return true;
    }

    void extend(size_t k, std::vector<std::vector<int>>& results) {
        if (k == order.size()) {
            results.push_back(assign);
            return;
        }
        int e = order[k];
        int c = s.consumer_of(e);
        const std::vector<int>* candidates;
        std::vector<int> all;
        if (c < 0) {
            all.resize(tp->edge_count());
            std::iota(all.begin(), all.end(), 0);
            candidates = &all;
        } else {
            candidates = &upsets[assign[s.vertex_output(c)]];
        }
        for (int img : *candidates) {
            if (!admissible(e, img)) continue;
            assign[e] = img;
            if (c >= 0) --remaining_inputs[c];
            extend(k + 1, results);
            if (c >= 0) ++remaining_inputs[c];
            assign[e] = -1;
        }
    }
};

std::vector<TreeMorphism> assemble(TreePtr sp, TreePtr tp,
                                   std::vector<std::vector<int>> maps) {
    std::sort(maps.begin(), maps.end());
    std::vector<TreeMorphism> out;
    out.reserve(maps.size());
    for (auto& em : maps) {
        auto f = TreeMorphism::try_make(sp, tp, std::move(em));
        assert(f);
        out.push_back(std::move(*f));
    }
    return out;
}

}  // namespace

std::vector<TreeMorphism> hom_serial(const Tree& s, const Tree& t) {
    auto sp = std::make_shared<const Tree>(s);
    auto tp = std::make_shared<const Tree>(t);
    HomSearch search(sp, tp);
    std::vector<std::vector<int>> results;
    search.extend(0, results);
    return assemble(sp, tp, std::move(results));
}

std::vector<TreeMorphism> hom_parallel(const Tree& s, const Tree& t) {
    auto sp = std::make_shared<const Tree>(s);
    auto tp = std::make_shared<const Tree>(t);
    const int n = t.edge_count();
    std::vector<std::vector<std::vector<int>>> buckets(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int root_img = 0; root_img < n; ++root_img) {
        HomSearch search(sp, tp);
        int e0 = search.order[0];
        if (!search.admissible(e0, root_img)) continue;
        search.assign[e0] = root_img;
        search.extend(1, buckets[root_img]);
    }
    std::vector<std::vector<int>> results;
    for (auto& b : buckets)
        for (auto& em : b) results.push_back(std::move(em));
    return assemble(sp, tp, std::move(results));
}

std::vector<TreeMorphism> hom(const Tree& s, const Tree& t) {
#ifdef _OPENMP
    if (t.edge_count() >= 6) return hom_parallel(s, t);
#endif
    return hom_serial(s, t);
}

std::vector<TreeMorphism> automorphisms(const Tree& t) {
    std::vector<TreeMorphism> out;
    for (auto& f : hom(t, t))
        if (f.is_iso()) out.push_back(f);
    return out;
}

// --- elementary faces ----------------------------------------------------------

namespace {

bool edge_is_inner(const Tree& t, int e) {
    return t.producer_of(e) >= 0 && t.consumer_of(e) >= 0;
}

}  // namespace

std::vector<Face> elementary_faces(const Tree& t) {
    std::vector<Face> out;
    auto tp = std::make_shared<const Tree>(t);

    if (t.vertex_count() == 1) {
        auto e = std::make_shared<const Tree>(eta());
        for (int i = 0; i < t.edge_count(); ++i)
            out.push_back(Face{FaceKind::CorollaEdge, t.edge_name(i),
                               make_morphism(e, tp, {i})});
        return out;
    }

    // inner faces: contract an inner edge, merging its two end vertices
    for (int e = 0; e < t.edge_count(); ++e) {
        if (!edge_is_inner(t, e)) continue;
        int above = t.producer_of(e);
        int below = t.consumer_of(e);
        std::vector<std::string> edges;
        for (int i = 0; i < t.edge_count(); ++i)
            if (i != e) edges.push_back(t.edge_name(i));
        std::string merged = t.vertex(below).name + "~" + t.vertex(above).name;
        std::vector<Vertex> vs;
        std::vector<std::string> merged_inputs;
        for (int in : t.vertex_inputs(below))
            if (in != e) merged_inputs.push_back(t.edge_name(in));
        for (int in : t.vertex_inputs(above)) merged_inputs.push_back(t.edge_name(in));
        vs.push_back(Vertex{merged, t.edge_name(t.vertex_output(below)), merged_inputs});
        for (int v = 0; v < t.vertex_count(); ++v) {
            if (v == above || v == below) continue;
            vs.push_back(t.vertex(v));
        }
        Tree contracted = Tree::make(edges, t.root(), vs);
        std::map<std::string, std::string> em;
        for (const auto& name : contracted.edges()) em[name] = name;
        out.push_back(Face{FaceKind::Inner, t.edge_name(e),
                           make_morphism_names(contracted, t, em)});
    }

    // outer faces: chop a vertex with exactly one adjacent inner edge
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& ins = t.vertex_inputs(v);
        int out_edge = t.vertex_output(v);
        bool out_inner = edge_is_inner(t, out_edge);
        std::vector<int> inner_inputs;
        for (int in : ins)
            if (edge_is_inner(t, in)) inner_inputs.push_back(in);

        if (out_inner && inner_inputs.empty()) {
            // top vertex: remove v and its (leaf) inputs
            std::vector<std::string> edges;
            for (int i = 0; i < t.edge_count(); ++i)
                if (t.consumer_of(i) != v || i == out_edge) edges.push_back(t.edge_name(i));
            std::vector<Vertex> vs;
            for (int w = 0; w < t.vertex_count(); ++w)
                if (w != v) vs.push_back(t.vertex(w));
            Tree chopped = Tree::make(edges, t.root(), vs);
            std::map<std::string, std::string> em;
            for (const auto& name : chopped.edges()) em[name] = name;
            out.push_back(Face{FaceKind::OuterTop, t.vertex(v).name,
                               make_morphism_names(chopped, t, em)});
        } else if (!out_inner && out_edge == t.root_index() && inner_inputs.size() == 1) {
            // root vertex with a single inner input: remove v, the root edge
            // and the leaf inputs; the inner input becomes the new root
            int new_root = inner_inputs[0];
            std::vector<std::string> edges;
            for (int i = 0; i < t.edge_count(); ++i) {
                if (i == out_edge) continue;
                if (t.consumer_of(i) == v && i != new_root) continue;
                edges.push_back(t.edge_name(i));
            }
            std::vector<Vertex> vs;
            for (int w = 0; w < t.vertex_count(); ++w)
                if (w != v) vs.push_back(t.vertex(w));
            Tree chopped = Tree::make(edges, t.edge_name(new_root), vs);
            std::map<std::string, std::string> em;
            for (const auto& name : chopped.edges()) em[name] = name;
            out.push_back(Face{FaceKind::OuterRoot, t.vertex(v).name,
                               make_morphism_names(chopped, t, em)});
        }
    }
    return out;
}

std::vector<Degeneracy> elementary_degeneracies(const Tree& t) {
    std::vector<Degeneracy> out;
    for (int e = 0; e < t.edge_count(); ++e) {
        const std::string& en = t.edge_name(e);
        std::string lo = en + ".lo", hi = en + ".hi", vname = en + ".deg";
        std::vector<std::string> edges;
        for (int i = 0; i < t.edge_count(); ++i)
            if (i != e) edges.push_back(t.edge_name(i));
        edges.push_back(lo);
        edges.push_back(hi);
        std::vector<Vertex> vs;
        for (const auto& v : t.vertices()) {
            Vertex nv = v;
            if (nv.output == en) nv.output = hi;
            for (auto& in : nv.inputs)
                if (in == en) in = lo;
            vs.push_back(nv);
        }
        vs.push_back(Vertex{vname, lo, {hi}});
        std::string root = (e == t.root_index()) ? lo : t.root();
        Tree split = Tree::make(edges, root, vs);
        std::map<std::string, std::string> em;
        for (const auto& name : split.edges())
            em[name] = (name == lo || name == hi) ? en : name;
        out.push_back(Degeneracy{en, make_morphism_names(split, t, em)});
    }
    return out;
}

// --- factorisation --------------------------------------------------------------

TreeMorphism FactorisationTriple::recomposed() const {
    return compose(face, compose(iso, degeneracy));
}

FactorisationTriple factorize(const TreeMorphism& f) {
    FactorisationTriple triple;
    TreeMorphism cur = f;

    // Peel elementary degeneracies: collapse unary vertices whose image is an
    // identity operation.
    for (;;) {
        const Tree& s = cur.source();
        int found = -1;
        for (int v = 0; v < s.vertex_count() && found < 0; ++v) {
            const auto& ins = s.vertex_inputs(v);
            if (ins.size() == 1 && cur.edge_image(ins[0]) == cur.edge_image(s.vertex_output(v)))
                found = v;
        }
        if (found < 0) break;
        int lo = s.vertex_output(found);
        int hi = s.vertex_inputs(found)[0];
        // collapsed tree: drop the upper edge and the vertex, reattach above
        std::vector<std::string> edges;
        for (int i = 0; i < s.edge_count(); ++i)
            if (i != hi) edges.push_back(s.edge_name(i));
        std::vector<Vertex> vs;
        for (int v = 0; v < s.vertex_count(); ++v) {
            if (v == found) continue;
            Vertex nv = s.vertex(v);
            if (nv.output == s.edge_name(hi)) nv.output = s.edge_name(lo);
            for (auto& in : nv.inputs)
                if (in == s.edge_name(hi)) in = s.edge_name(lo);
            vs.push_back(nv);
        }
        Tree collapsed = Tree::make(edges, s.root(), vs);
        std::map<std::string, std::string> sigma_map;
        for (int i = 0; i < s.edge_count(); ++i)
            sigma_map[s.edge_name(i)] = (i == hi) ? s.edge_name(lo) : s.edge_name(i);
        TreeMorphism sigma = make_morphism_names(s, collapsed, sigma_map);
        triple.degeneracy_chain.push_back(sigma);
        // residual map from the collapsed tree
        auto cp = std::make_shared<const Tree>(collapsed);
        std::vector<int> em(collapsed.edge_count());
        for (int i = 0; i < collapsed.edge_count(); ++i)
            em[i] = cur.edge_image(cur.source().edge_index(collapsed.edge_name(i)));
        cur = make_morphism(cp, cur.target_ptr(), std::move(em));
    }

    if (!cur.is_mono())
        throw MorphismError("residual map after degeneracy peeling is not injective");

    // Peel elementary faces from the target side.
    while (!cur.is_iso()) {
        bool found = false;
        for (const Face& face : elementary_faces(cur.target())) {
            std::vector<int> inv(cur.target().edge_count(), -1);
            for (int e = 0; e < face.map.source().edge_count(); ++e)
                inv[face.map.edge_image(e)] = e;
            std::vector<int> em(cur.source().edge_count());
            bool ok = true;
            for (int e = 0; e < cur.source().edge_count() && ok; ++e) {
                int pre = inv[cur.edge_image(e)];
                if (pre < 0)
                    ok = false;
                else
                    em[e] = pre;
            }
            if (!ok) continue;
            auto lifted =
                TreeMorphism::try_make(cur.source_ptr(), face.map.source_ptr(), std::move(em));
            if (!lifted) continue;
            triple.face_chain.push_back(face);
            cur = *lifted;
            found = true;
            break;
        }
        if (!found)
            throw MorphismError("proper monomorphism does not factor through any elementary face");
    }
    triple.iso = cur;

    triple.degeneracy = identity_morphism(f.source_ptr());
    for (const auto& sigma : triple.degeneracy_chain)
        triple.degeneracy = compose(sigma, triple.degeneracy);

    triple.face = identity_morphism(triple.iso.target_ptr());
    for (auto it = triple.face_chain.rbegin(); it != triple.face_chain.rend(); ++it)
        triple.face = compose(it->map, triple.face);

    assert(triple.recomposed() == f);
    return triple;
}

// --- closure and décalage --------------------------------------------------------

Closure closure(const Tree& t) {
    Tree cl = closure_tree(t);
    std::map<std::string, std::string> em;
    for (const auto& e : t.edges()) em[e] = e;
    return Closure{cl, make_morphism_names(t, cl, em)};
}

TreeMorphism closure_morphism(const TreeMorphism& f) {
    Tree cs = closure_tree(f.source());
    Tree ct = closure_tree(f.target());
    std::map<std::string, std::string> em;
    for (int e = 0; e < f.source().edge_count(); ++e)
        em[f.source().edge_name(e)] = f.target().edge_name(f.edge_image(e));
    return make_morphism_names(cs, ct, em);
}

TreePtr ClosureCache::closed(const TreePtr& t) {
    auto it = cache_.find(t.get());
    if (it != cache_.end()) return it->second;
    auto cl = std::make_shared<const Tree>(closure_tree(*t));
    cache_[t.get()] = cl;
    return cl;
}

TreeMorphism ClosureCache::cl(const TreeMorphism& f) {
    // closure keeps the edge set, so indices carry over unchanged
    return make_morphism(closed(f.source_ptr()), closed(f.target_ptr()), f.edge_map());
}

Decalage decalage(const Tree& t) {
    DecalageTree d = decalage_tree(t);
    std::map<std::string, std::string> em;
    for (const auto& e : t.edges()) em[e] = e;
    TreeMorphism u = make_morphism_names(t, d.tree, em);
    Tree ebar = closure_tree(eta());
    TreeMorphism root_map =
        make_morphism_names(ebar, d.tree, {{ebar.root(), d.new_root_edge}});
    return Decalage{d.tree, u, root_map, d.new_root_edge, d.new_vertex};
}

TreeMorphism decalage_morphism(const TreeMorphism& f) {
    if (!is_closed(f.source()) || !is_closed(f.target()))
        throw NotClosedError("decalage_morphism requires closed source and target");
    DecalageTree ds = decalage_tree(f.source());
    DecalageTree dt = decalage_tree(f.target());
    std::map<std::string, std::string> em;
    for (int e = 0; e < f.source().edge_count(); ++e)
        em[f.source().edge_name(e)] = f.target().edge_name(f.edge_image(e));
    em[ds.new_root_edge] = dt.new_root_edge;
    return make_morphism_names(ds.tree, dt.tree, em);
}

// --- serialization ----------------------------------------------------------------

std::string morphism_to_json(const TreeMorphism& f) {
    nlohmann::json j;
    j["source"] = nlohmann::json::parse(to_json(f.source()));
    j["target"] = nlohmann::json::parse(to_json(f.target()));
    nlohmann::json em = nlohmann::json::object();
    for (int e = 0; e < f.source().edge_count(); ++e)
        em[f.source().edge_name(e)] = f.target().edge_name(f.edge_image(e));
    j["edge_map"] = em;
    nlohmann::json vm = nlohmann::json::object();
    for (int v = 0; v < f.source().vertex_count(); ++v) {
        const OperadOp& op = f.vertex_image(v);
        nlohmann::json ins = nlohmann::json::array();
        for (int in : op.inputs) ins.push_back(f.target().edge_name(in));
        vm[f.source().vertex(v).name] = {{"out", f.target().edge_name(op.output)},
                                         {"in", ins}};
    }
    j["vertex_map"] = vm;
    return j.dump();
}

TreeMorphism morphism_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Tree src = tree_from_json(j.at("source").dump());
    Tree tgt = tree_from_json(j.at("target").dump());
    std::map<std::string, std::string> em;
    for (auto it = j.at("edge_map").begin(); it != j.at("edge_map").end(); ++it)
        em[it.key()] = it.value().get<std::string>();
    return make_morphism_names(src, tgt, em);
}

}  // namespace omega
