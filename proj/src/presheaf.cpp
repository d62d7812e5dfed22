#include "omega/presheaf.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace omega {

// --- shape registry ---------------------------------------------------------

namespace {

std::mutex g_shapes_mu;
std::map<std::string, ShapeData>& shape_map() {
    static std::map<std::string, ShapeData> m;
    return m;
}

}  // namespace

const ShapeData& shape_data(const Tree& tree) {
    std::string code = canonical_code(tree);
    {
        std::lock_guard<std::mutex> lk(g_shapes_mu);
        auto it = shape_map().find(code);
        if (it != shape_map().end()) return it->second;
    }
    ShapeData d;
    d.tree = canonical_form(tree).tree;
    std::vector<Tree> face_sources;
    for (const Face& f : elementary_faces(d.tree)) {
        CanonicalForm cf = canonical_form(f.map.source());
        std::map<std::string, std::string> old_of_new;
        for (const auto& [o, n] : cf.edge_map) old_of_new[n] = o;
        ShapeData::FaceInto fi;
        fi.src_code = canonical_code(cf.tree);
        fi.kind = f.kind;
        fi.name = f.name;
        fi.edge_map.resize(cf.tree.edge_count());
        for (int i = 0; i < cf.tree.edge_count(); ++i) {
            const std::string& old_name = old_of_new.at(cf.tree.edge_name(i));
            fi.edge_map[i] = f.map.edge_image(f.map.source().edge_index(old_name));
        }
        d.faces.push_back(std::move(fi));
        face_sources.push_back(cf.tree);
    }
    for (const TreeMorphism& g : automorphisms(d.tree)) d.auts.push_back(g.edge_map());
    const ShapeData* ret;
    {
        std::lock_guard<std::mutex> lk(g_shapes_mu);
        auto [it, inserted] = shape_map().emplace(code, std::move(d));
        ret = &it->second;
    }
    for (const Tree& src : face_sources) shape_data(src);
    return *ret;
}

const ShapeData& shape_data(const std::string& code) {
    std::lock_guard<std::mutex> lk(g_shapes_mu);
    auto it = shape_map().find(code);
    if (it == shape_map().end())
        throw TreeError("shape not registered: " + code);
    return it->second;
}

// --- elements ----------------------------------------------------------------

std::string Elem::encode() const {
    std::string s = shape;
    s += "!";
    for (const auto& l : labels) {
        s += l;
        s += ";";
    }
    return s;
}

bool elem_degenerate(const Elem& e) {
    const Tree& t = shape_data(e.shape).tree;
    for (int v = 0; v < t.vertex_count(); ++v) {
        const auto& ins = t.vertex_inputs(v);
        if (ins.size() == 1 && e.labels[ins[0]] == e.labels[t.vertex_output(v)])
            return true;
    }
    return false;
}

Elem elem_core(const Elem& e) {
    Tree cur = shape_data(e.shape).tree;
    std::map<std::string, std::string> lab;
    for (int i = 0; i < cur.edge_count(); ++i) lab[cur.edge_name(i)] = e.labels[i];
    for (;;) {
        int found = -1;
        for (int v = 0; v < cur.vertex_count() && found < 0; ++v) {
            const auto& ins = cur.vertex_inputs(v);
            if (ins.size() == 1 &&
                lab[cur.edge_name(ins[0])] == lab[cur.edge_name(cur.vertex_output(v))])
                found = v;
        }
        if (found < 0) break;
        int lo = cur.vertex_output(found);
        int hi = cur.vertex_inputs(found)[0];
        std::string lo_name = cur.edge_name(lo), hi_name = cur.edge_name(hi);
        std::vector<std::string> edges;
        for (int i = 0; i < cur.edge_count(); ++i)
            if (i != hi) edges.push_back(cur.edge_name(i));
        std::vector<Vertex> vs;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            if (v == found) continue;
            Vertex nv = cur.vertex(v);
            if (nv.output == hi_name) nv.output = lo_name;
            for (auto& in : nv.inputs)
                if (in == hi_name) in = lo_name;
            vs.push_back(nv);
        }
        cur = Tree::make(edges, cur.root(), vs);
        lab.erase(hi_name);
    }
    CanonicalForm cf = canonical_form(cur);
    const ShapeData& sd = shape_data(cf.tree);
    Elem out;
    out.shape = canonical_code(cf.tree);
    out.labels.resize(cf.tree.edge_count());
    for (const auto& [old_name, new_name] : cf.edge_map)
        out.labels[cf.tree.edge_index(new_name)] = lab.at(old_name);
    (void)sd;
    return out;
}

Elem restrict_elem(const Elem& e, const std::string& src_code,
                   const std::vector<int>& edge_map) {
    Elem out;
    out.shape = src_code;
    out.labels.resize(edge_map.size());
    for (size_t i = 0; i < edge_map.size(); ++i) out.labels[i] = e.labels[edge_map[i]];
    return out;
}

Elem elem_of_morphism(const TreeMorphism& f) {
    std::map<std::string, std::string> labels;
    for (int i = 0; i < f.source().edge_count(); ++i)
        labels[f.source().edge_name(i)] = f.target().edge_name(f.edge_image(i));
    return elem_of_labelling(f.source(), labels);
}

Elem elem_of_labelling(const Tree& shape, const std::map<std::string, std::string>& labels) {
    CanonicalForm cf = canonical_form(shape);
    const ShapeData& sd = shape_data(cf.tree);
    (void)sd;
    Elem out;
    out.shape = canonical_code(cf.tree);
    out.labels.resize(cf.tree.edge_count());
    for (const auto& [old_name, new_name] : cf.edge_map)
        out.labels[cf.tree.edge_index(new_name)] = labels.at(old_name);
    return out;
}

// --- ambients -----------------------------------------------------------------

AmbientPtr Ambient::representable(const Tree& t) {
    auto a = std::make_shared<Ambient>();
    a->kind_ = Kind::Representable;
    a->rep_ = t;
    a->code_ = "rep:" + to_term(t);
    return a;
}

AmbientPtr Ambient::tensor(const Tree& s, const Tree& t) {
    auto a = std::make_shared<Ambient>();
    a->kind_ = Kind::Tensor;
    a->left_ = s;
    a->right_ = t;
    a->shuffles_ = shuffles(s, t);
    a->code_ = "tens:" + to_term(s) + "(x)" + to_term(t);
    return a;
}

std::vector<std::string> Ambient::eta_labels() const {
    std::set<std::string> out;
    if (kind_ == Kind::Representable) {
        for (const auto& e : rep_.edges()) out.insert(e);
    } else {
        for (const auto& sh : shuffles_)
            for (const auto& e : sh.tree.edges()) out.insert(e);
    }
    return {out.begin(), out.end()};
}

const std::vector<Elem>& Ambient::elements_at(const Tree& canonical_shape) const {
    std::string key = canonical_code(canonical_shape);
    {
        std::lock_guard<std::mutex> lk(cache_mu_);
        auto it = elem_cache_.find(key);
        if (it != elem_cache_.end()) return it->second;
    }
    const ShapeData& sd = shape_data(canonical_shape);
    std::set<Elem> acc;
    auto add_from = [&](const Tree& target) {
        for (const TreeMorphism& f : hom(sd.tree, target)) {
            Elem e;
            e.shape = key;
            e.labels.resize(sd.tree.edge_count());
            for (int i = 0; i < sd.tree.edge_count(); ++i)
                e.labels[i] = target.edge_name(f.edge_image(i));
            acc.insert(std::move(e));
        }
    };
    if (kind_ == Kind::Representable) {
        add_from(rep_);
    } else {
        for (const auto& sh : shuffles_) add_from(sh.tree);
    }
    std::lock_guard<std::mutex> lk(cache_mu_);
    auto [it, ins] = elem_cache_.emplace(key, std::vector<Elem>(acc.begin(), acc.end()));
    return it->second;
}

int Ambient::scan_arity() const {
    if (kind_ == Kind::Representable) return std::max(1, rep_.max_arity());
    return std::max({1, left_.max_arity(), right_.max_arity()});
}

bool labelling_in_shuffle(const ShuffleTree& sh, const Tree& shape,
                          const std::vector<std::string>& labels) {
    std::vector<int> em(shape.edge_count());
    for (int i = 0; i < shape.edge_count(); ++i) {
        if (!sh.tree.has_edge(labels[i])) return false;
        em[i] = sh.tree.edge_index(labels[i]);
    }
    auto sp = std::make_shared<const Tree>(shape);
    auto tp = std::make_shared<const Tree>(sh.tree);
    return TreeMorphism::try_make(sp, tp, std::move(em)).has_value();
}

// --- subpresheaves ---------------------------------------------------------------

long long SubPresheaf::size() const {
    long long n = 0;
    for (const auto& [k, v] : elems_) n += static_cast<long long>(v.size());
    return n;
}

bool SubPresheaf::contains(const Elem& e) const {
    Elem c = elem_degenerate(e) ? elem_core(e) : e;
    auto it = elems_.find(c.shape);
    return it != elems_.end() && it->second.count(c.encode()) > 0;
}

std::set<std::string> SubPresheaf::eta_set() const {
    std::set<std::string> out;
    auto it = elems_.find("*");
    if (it == elems_.end()) return out;
    for (const auto& enc : it->second) {
        Elem e = {"*", {enc.substr(2, enc.size() - 3)}};  // "*!label;"
        out.insert(e.labels[0]);
    }
    return out;
}

std::vector<Elem> SubPresheaf::all_elems() const {
    std::vector<Elem> out;
    for (const auto& [shape, set] : elems_) {
        const ShapeData& sd = shape_data(shape);
        for (const auto& enc : set) {
            Elem e;
            e.shape = shape;
            std::string rest = enc.substr(shape.size() + 1);
            size_t pos = 0;
            for (int i = 0; i < sd.tree.edge_count(); ++i) {
                size_t semi = rest.find(';', pos);
                e.labels.push_back(rest.substr(pos, semi - pos));
                pos = semi + 1;
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

void SubPresheaf::insert_saturate(const Elem& e, long long budget) {
    std::deque<Elem> work;
    work.push_back(e);
    while (!work.empty()) {
        Elem x = work.front();
        work.pop_front();
        if (elem_degenerate(x)) x = elem_core(x);
        const std::string enc = x.encode();
        auto& bucket = elems_[x.shape];
        if (bucket.count(enc)) continue;
        const ShapeData& sd = shape_data(x.shape);
        for (const auto& aut : sd.auts) {
            Elem tr = restrict_elem(x, x.shape, aut);
            bucket.insert(tr.encode());
        }
        if (size() > budget)
            throw BoundsTooLarge("subpresheaf saturation exceeded budget");
        for (const auto& face : sd.faces)
            work.push_back(restrict_elem(x, face.src_code, face.edge_map));
    }
}

bool SubPresheaf::subset_of(const SubPresheaf& y) const {
    if (ambient_->code() != y.ambient_->code()) return false;
    for (const auto& [shape, set] : elems_) {
        auto it = y.elems_.find(shape);
        if (it == y.elems_.end()) {
            if (!set.empty()) return false;
            continue;
        }
        if (!std::includes(it->second.begin(), it->second.end(), set.begin(), set.end()))
            return false;
    }
    return true;
}

SubPresheaf generated_by(AmbientPtr a, const std::vector<Elem>& gens, long long budget) {
    SubPresheaf x(std::move(a));
    for (const auto& g : gens) x.insert_saturate(g, budget);
    return x;
}

SubPresheaf full_subpresheaf(AmbientPtr a, long long budget) {
    SubPresheaf x(a);
    if (a->kind() == Ambient::Kind::Representable) {
        x.insert_saturate(elem_of_morphism(identity_morphism(a->rep())), budget);
    } else {
        for (const auto& sh : a->shuffle_list())
            x.insert_saturate(shuffle_top_elem(sh), budget);
    }
    return x;
}

SubPresheaf boundary(const Tree& t) {
    AmbientPtr a = Ambient::representable(t);
    SubPresheaf x(a);
    for (const Face& f : elementary_faces(t)) x.insert_saturate(elem_of_morphism(f.map));
    return x;
}

SubPresheaf inner_horn(const Tree& t, const std::string& inner_edge) {
    int e = t.edge_index(inner_edge);
    if (t.producer_of(e) < 0 || t.consumer_of(e) < 0)
        throw NotInnerEdge("edge " + inner_edge + " is not inner");
    AmbientPtr a = Ambient::representable(t);
    SubPresheaf x(a);
    for (const Face& f : elementary_faces(t)) {
        if (f.kind == FaceKind::Inner && f.name == inner_edge) continue;
        x.insert_saturate(elem_of_morphism(f.map));
    }
    return x;
}

SubPresheaf segal_core(const Tree& t) {
    AmbientPtr a = Ambient::representable(t);
    SubPresheaf x(a);
    if (t.vertex_count() == 0) {
        x.insert_saturate(elem_of_morphism(identity_morphism(t)));
        return x;  // convention: the Segal core of the unit tree is itself
    }
    for (int v = 0; v < t.vertex_count(); ++v) {
        int n = static_cast<int>(t.vertex_inputs(v).size());
        Tree c = corolla(n);
        std::map<std::string, std::string> labels;
        labels[c.root()] = t.edge_name(t.vertex_output(v));
        const auto& ins = t.vertex_inputs(v);
        for (int i = 0; i < n; ++i)
            labels["l" + std::to_string(i + 1)] = t.edge_name(ins[i]);
        x.insert_saturate(elem_of_labelling(c, labels));
    }
    return x;
}

namespace {

void check_same_ambient(const std::vector<SubPresheaf>& xs) {
    if (xs.empty()) throw AmbientMismatch("empty collection of subpresheaves");
    for (const auto& x : xs)
        if (x.ambient()->code() != xs.front().ambient()->code())
            throw AmbientMismatch("subpresheaves live in different ambients");
}

}  // namespace

SubPresheaf union_(const std::vector<SubPresheaf>& xs) {
    check_same_ambient(xs);
    SubPresheaf out(xs.front().ambient());
    for (const auto& x : xs)
        for (const auto& e : x.all_elems()) out.insert_saturate(e);
    return out;
}

SubPresheaf intersection(const std::vector<SubPresheaf>& xs) {
    check_same_ambient(xs);
    SubPresheaf out(xs.front().ambient());
    for (const auto& e : xs.front().all_elems()) {
        bool in_all = true;
        for (size_t i = 1; i < xs.size() && in_all; ++i) in_all = xs[i].contains(e);
        if (in_all) out.insert_saturate(e);
    }
    return out;
}

bool is_full(const SubPresheaf& x, const SubPresheaf& y) {
    if (!x.subset_of(y)) throw NotASubobject("x is not a subobject of y");
    std::set<std::string> xeta = x.eta_set();
    for (const auto& z : y.all_elems()) {
        bool inx = x.contains(z);
        bool faces_in = true;
        for (const auto& l : z.labels)
            if (!xeta.count(l)) {
                faces_in = false;
                break;
            }
        if (inx != faces_in) return false;
    }
    return true;
}

namespace {

// Scan set for bounded shape sweeps: shapes already carrying elements, small
// shapes up to the vertex bound, and corollas up to the leaf cap.
std::vector<Tree> scan_shapes(const SubPresheaf& x, int max_vertices, int arity) {
    std::map<std::string, Tree> shapes;
    for (const auto& [code, set] : x.elements()) {
        if (set.empty()) continue;
        shapes.emplace(code, shape_data(code).tree);
    }
    for (const Tree& t : enumerate_trees(std::max(0, max_vertices), arity))
        shapes.emplace(canonical_code(t), t);
    return [&] {
        std::vector<Tree> out;
        for (auto& [c, t] : shapes) out.push_back(t);
        return out;
    }();
}

int max_stored_vertices(const SubPresheaf& x) {
    int m = 0;
    for (const auto& [code, set] : x.elements())
        if (!set.empty()) m = std::max(m, shape_data(code).tree.vertex_count());
    return m;
}

}  // namespace

std::optional<ReprWitness> is_representable(const SubPresheaf& x, int shape_bound) {
    if (x.empty()) return std::nullopt;
    std::vector<Elem> cands = x.all_elems();
    std::stable_sort(cands.begin(), cands.end(), [](const Elem& a, const Elem& b) {
        int va = shape_data(a.shape).tree.vertex_count();
        int vb = shape_data(b.shape).tree.vertex_count();
        if (va != vb) return va > vb;
        return a.encode() < b.encode();
    });
    for (const Elem& cand : cands) {
        const Tree& u = shape_data(cand.shape).tree;
        SubPresheaf gen = generated_by(x.ambient(), {cand});
        if (!(gen == x)) continue;
        bool ok = true;
        int bound = std::min(u.vertex_count(), shape_bound);
        for (const Tree& v : scan_shapes(x, bound, x.ambient()->scan_arity())) {
            if (v.vertex_count() > u.vertex_count()) continue;
            std::set<std::string> lhs;
            auto homs = hom(v, u);
            for (const TreeMorphism& m : homs) {
                Elem img;
                img.shape = canonical_code(v);
                img.labels.resize(v.edge_count());
                for (int i = 0; i < v.edge_count(); ++i)
                    img.labels[i] = cand.labels[m.edge_image(i)];
                lhs.insert(img.encode());
            }
            if (lhs.size() != homs.size()) {  // injectivity
                ok = false;
                break;
            }
            std::set<std::string> rhs;
            for (const Elem& z : x.ambient()->elements_at(v))
                if (x.contains(z)) rhs.insert(z.encode());
            if (lhs != rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return ReprWitness{u, cand};
    }
    return std::nullopt;
}

namespace {

bool action_free(const SubPresheaf& x, const SubPresheaf* inner, int extra_vertices) {
    const SubPresheaf& outer = x;
    int bound = max_stored_vertices(outer) + extra_vertices;
    for (const Tree& v : scan_shapes(outer, bound, outer.ambient()->scan_arity())) {
        const ShapeData& sd = shape_data(v);
        if (sd.auts.size() <= 1) continue;
        for (const Elem& z : outer.ambient()->elements_at(v)) {
            if (!outer.contains(z)) continue;
            if (inner && inner->contains(z)) continue;
            for (const auto& aut : sd.auts) {
                bool is_id = true;
                for (size_t i = 0; i < aut.size(); ++i)
                    if (aut[i] != static_cast<int>(i)) {
                        is_id = false;
                        break;
                    }
                if (is_id) continue;
                if (restrict_elem(z, z.shape, aut) == z) return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_normal(const SubPresheaf& x, int extra_vertices) {
    return action_free(x, nullptr, extra_vertices);
}

bool is_normal_mono(const SubPresheaf& x, const SubPresheaf& y, int extra_vertices) {
    if (!x.subset_of(y)) throw NotASubobject("x is not a subobject of y");
    return action_free(y, &x, extra_vertices);
}

std::vector<SubPresheaf> sieves(const Tree& t, long long budget) {
    AmbientPtr a = Ambient::representable(t);
    SubPresheaf full = full_subpresheaf(a);
    // Orbit classes of nondegenerate elements under shape automorphisms.
    std::vector<std::vector<Elem>> classes;
    std::map<std::string, int> class_of;
    for (const Elem& e : full.all_elems()) {
        if (class_of.count(e.encode())) continue;
        const ShapeData& sd = shape_data(e.shape);
        std::set<std::string> seen;
        std::vector<Elem> orbit;
        for (const auto& aut : sd.auts) {
            Elem tr = restrict_elem(e, e.shape, aut);
            if (seen.insert(tr.encode()).second) orbit.push_back(tr);
        }
        int id = static_cast<int>(classes.size());
        for (const auto& o : orbit) class_of[o.encode()] = id;
        classes.push_back(std::move(orbit));
    }
    // Immediate face relation between classes.
    std::vector<std::set<int>> faces_of(classes.size());
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        const Elem& rep = classes[ci].front();
        const ShapeData& sd = shape_data(rep.shape);
        for (const auto& f : sd.faces) {
            Elem r = restrict_elem(rep, f.src_code, f.edge_map);
            if (elem_degenerate(r)) r = elem_core(r);
            faces_of[ci].insert(class_of.at(r.encode()));
        }
    }
    // Topological order: face sources have strictly fewer vertices.
    std::vector<int> order(classes.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a_, int b_) {
        int va = shape_data(classes[a_].front().shape).tree.vertex_count();
        int vb = shape_data(classes[b_].front().shape).tree.vertex_count();
        if (va != vb) return va < vb;
        return classes[a_].front().encode() < classes[b_].front().encode();
    });
    std::vector<SubPresheaf> out;
    std::vector<char> chosen(classes.size(), 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (static_cast<long long>(out.size()) > budget)
            throw BoundsTooLarge("sieve enumeration exceeded budget");
        if (k == order.size()) {
            SubPresheaf s(a);
            for (size_t ci = 0; ci < classes.size(); ++ci)
                if (chosen[ci])
                    for (const Elem& e : classes[ci]) s.insert_saturate(e);
            out.push_back(std::move(s));
            return;
        }
        int c = order[k];
        rec(k + 1);  // exclude
        bool can = true;
        for (int f : faces_of[c])
            if (!chosen[f]) {
                can = false;
                break;
            }
        if (can) {
            chosen[c] = 1;
            rec(k + 1);
            chosen[c] = 0;
        }
    };
    rec(0);
    return out;
}

// --- shuffle subobjects --------------------------------------------------------------

Elem shuffle_top_elem(const ShuffleTree& sh) {
    std::map<std::string, std::string> labels;
    for (const auto& e : sh.tree.edges()) labels[e] = e;
    return elem_of_labelling(sh.tree, labels);
}

SubPresheaf shuffle_subobject(AmbientPtr a, const ShuffleTree& sh, long long budget) {
    SubPresheaf x(std::move(a));
    x.insert_saturate(shuffle_top_elem(sh), budget);
    return x;
}

bool shuffle_full_bounded(const AmbientPtr& a, const ShuffleTree& sh, int max_vertices,
                          std::string* fail_detail) {
    std::set<std::string> sigma_labels(sh.tree.edges().begin(), sh.tree.edges().end());
    for (const Tree& v : enumerate_trees(max_vertices, a->scan_arity())) {
        for (const Elem& z : a->elements_at(v)) {
            bool labels_in = true;
            for (const auto& l : z.labels)
                if (!sigma_labels.count(l)) {
                    labels_in = false;
                    break;
                }
            bool member = labelling_in_shuffle(sh, v, z.labels);
            if (member != labels_in) {
                if (fail_detail)
                    *fail_detail = "element " + z.encode() + " member=" +
                                   std::to_string(member) + " labels_in=" +
                                   std::to_string(labels_in);
                return false;
            }
        }
    }
    return true;
}

namespace {

Tree contract_edge(const Tree& t, int e) {
    int above = t.producer_of(e);
    int below = t.consumer_of(e);
    if (above < 0 || below < 0) throw NotInnerEdge("cannot contract non-inner edge");
    std::vector<std::string> edges;
    for (int i = 0; i < t.edge_count(); ++i)
        if (i != e) edges.push_back(t.edge_name(i));
    std::vector<std::string> merged_inputs;
    for (int in : t.vertex_inputs(below))
        if (in != e) merged_inputs.push_back(t.edge_name(in));
    for (int in : t.vertex_inputs(above)) merged_inputs.push_back(t.edge_name(in));
    std::vector<Vertex> vs;
    vs.push_back(Vertex{t.vertex(below).name + "~" + t.vertex(above).name,
                        t.edge_name(t.vertex_output(below)), merged_inputs});
    for (int v = 0; v < t.vertex_count(); ++v)
        if (v != above && v != below) vs.push_back(t.vertex(v));
    return Tree::make(edges, t.root(), vs);
}

}  // namespace

std::optional<Tree> inner_face_contraction(const ShuffleTree& sh,
                                           const std::set<std::string>& keep_labels) {
    // Every dropped edge must be inner in the original scheme; contracting one
    // inner edge keeps the others inner, so any order works.
    for (const auto& e : sh.tree.edges()) {
        if (keep_labels.count(e)) continue;
        int i = sh.tree.edge_index(e);
        if (sh.tree.producer_of(i) < 0 || sh.tree.consumer_of(i) < 0) return std::nullopt;
    }
    Tree cur = sh.tree;
    for (;;) {
        int drop = -1;
        for (int i = 0; i < cur.edge_count() && drop < 0; ++i)
            if (!keep_labels.count(cur.edge_name(i))) drop = i;
        if (drop < 0) break;
        cur = contract_edge(cur, drop);
    }
    if (cur.edge_count() != static_cast<int>(keep_labels.size())) return std::nullopt;
    return cur;
}

// --- cylinder maps ---------------------------------------------------------------------

Elem CylinderMaps::end(int i, const Elem& z) const {
    Elem out = z;
    std::string end_edge = (i == 0) ? "0" : "1";
    for (auto& l : out.labels) l = pair_label(end_edge, l);
    return out;
}

std::optional<Elem> CylinderMaps::project(const Elem& e) const {
    const Tree& shape = shape_data(e.shape).tree;
    std::vector<int> em(shape.edge_count());
    for (int i = 0; i < shape.edge_count(); ++i) {
        auto [s, t] = split_label(e.labels[i]);
        if (!object.has_edge(t)) return std::nullopt;
        em[i] = object.edge_index(t);
    }
    auto sp = std::make_shared<const Tree>(shape);
    auto tp = std::make_shared<const Tree>(object);
    auto m = TreeMorphism::try_make(sp, tp, std::move(em));
    if (!m) return std::nullopt;
    Elem out = e;
    for (auto& l : out.labels) l = split_label(l).second;
    return out;
}

CylinderMaps cylinder_maps(const Tree& x) {
    CylinderMaps cm;
    cm.interval = linear_tree(1);
    cm.object = x;
    cm.ambient = Ambient::tensor(cm.interval, x);
    return cm;
}

}  // namespace omega
