#include "omega/catelem.hpp"

#include <algorithm>

namespace omega {

Elem decode_elem(const std::string& encoding) {
    auto bang = encoding.find('!');
    if (bang == std::string::npos) throw TreeError("bad element encoding");
    Elem e;
    e.shape = encoding.substr(0, bang);
    size_t pos = bang + 1;
    while (pos < encoding.size()) {
        size_t semi = encoding.find(';', pos);
        if (semi == std::string::npos) throw TreeError("bad element encoding");
        e.labels.push_back(encoding.substr(pos, semi - pos));
        pos = semi + 1;
    }
    return e;
}

FinitePresheaf presheaf_of(AmbientPtr a) {
    FinitePresheaf p;
    p.name = a->code();
    p.elements_at = [a](const Tree& shape) {
        std::vector<std::string> out;
        for (const Elem& e : a->elements_at(shape)) out.push_back(e.encode());
        return out;
    };
    p.restrict = [](const TreeMorphism& m, const std::string& elem) {
        Elem e = decode_elem(elem);
        Elem r;
        r.shape = canonical_code(m.source());
        r.labels.resize(m.source().edge_count());
        for (int i = 0; i < m.source().edge_count(); ++i)
            r.labels[i] = e.labels[m.edge_image(i)];
        return r.encode();
    };
    return p;
}

FinitePresheaf presheaf_of(std::shared_ptr<const SubPresheaf> x) {
    FinitePresheaf p = presheaf_of(x->ambient());
    p.name = "sub:" + p.name;
    auto amb = x->ambient();
    p.elements_at = [x, amb](const Tree& shape) {
        std::vector<std::string> out;
        for (const Elem& e : amb->elements_at(shape))
            if (x->contains(e)) out.push_back(e.encode());
        return out;
    };
    return p;
}

std::string encode_pair_elem(const std::string& a, const std::string& b) {
    return std::to_string(a.size()) + ":" + a + b;
}

std::pair<std::string, std::string> decode_pair_elem(const std::string& e) {
    auto colon = e.find(':');
    size_t len = std::stoul(e.substr(0, colon));
    return {e.substr(colon + 1, len), e.substr(colon + 1 + len)};
}

FinitePresheaf product_presheaf(const FinitePresheaf& a, const FinitePresheaf& b) {
    FinitePresheaf p;
    p.name = a.name + " x " + b.name;
    p.elements_at = [a, b](const Tree& shape) {
        std::vector<std::string> out;
        for (const auto& x : a.elements_at(shape))
            for (const auto& y : b.elements_at(shape))
                out.push_back(encode_pair_elem(x, y));
        return out;
    };
    p.restrict = [a, b](const TreeMorphism& m, const std::string& elem) {
        auto [x, y] = decode_pair_elem(elem);
        return encode_pair_elem(a.restrict(m, x), b.restrict(m, y));
    };
    return p;
}

bool finite_elem_degenerate(const FinitePresheaf& p, const Tree& shape,
                            const std::string& elem) {
    // An element at `shape` is degenerate iff for some unary vertex the
    // collapse morphism sigma : shape -> shape/v carries an element onto it.
    for (int v = 0; v < shape.vertex_count(); ++v) {
        if (shape.vertex_inputs(v).size() != 1) continue;
        int lo = shape.vertex_output(v);
        int hi = shape.vertex_inputs(v)[0];
        std::vector<std::string> edges;
        for (int i = 0; i < shape.edge_count(); ++i)
            if (i != hi) edges.push_back(shape.edge_name(i));
        std::vector<Vertex> vs;
        for (int w = 0; w < shape.vertex_count(); ++w) {
            if (w == v) continue;
            Vertex nv = shape.vertex(w);
            if (nv.output == shape.edge_name(hi)) nv.output = shape.edge_name(lo);
            for (auto& in : nv.inputs)
                if (in == shape.edge_name(hi)) in = shape.edge_name(lo);
            vs.push_back(nv);
        }
        Tree collapsed = Tree::make(edges, shape.root(), vs);
        CanonicalForm cf = canonical_form(collapsed);
        shape_data(cf.tree);
        std::map<std::string, std::string> em;
        for (int i = 0; i < shape.edge_count(); ++i) {
            const std::string& n = shape.edge_name(i);
            em[n] = cf.edge_map.at(i == hi ? shape.edge_name(lo) : n);
        }
        TreeMorphism sigma = make_morphism_names(shape, cf.tree, em);
        for (const auto& z : p.elements_at(cf.tree))
            if (p.restrict(sigma, z) == elem) return true;
    }
    return false;
}

bool finite_is_normal(const FinitePresheaf& p, const std::vector<Tree>& shapes) {
    for (const Tree& v : shapes) {
        const ShapeData& sd = shape_data(v);
        if (sd.auts.size() <= 1) continue;
        std::vector<TreeMorphism> auts = automorphisms(sd.tree);
        for (const auto& z : p.elements_at(sd.tree))
            for (const TreeMorphism& g : auts) {
                if (g.is_identity()) continue;
                if (p.restrict(g, z) == z) return false;
            }
    }
    return true;
}

// --- small categories --------------------------------------------------------------

bool SmallCategory::verify_axioms(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (size_t o = 0; o < objects.size(); ++o) {
        int id = identities[o];
        if (morphisms[id].src != static_cast<int>(o) || morphisms[id].dst != static_cast<int>(o))
            return fail("identity endpoints wrong");
    }
    for (size_t f = 0; f < morphisms.size(); ++f) {
        int idd = identities[morphisms[f].dst];
        int ids = identities[morphisms[f].src];
        auto l = composition.find({idd, static_cast<int>(f)});
        auto r = composition.find({static_cast<int>(f), ids});
        if (l == composition.end() || l->second != static_cast<int>(f))
            return fail("left identity law fails");
        if (r == composition.end() || r->second != static_cast<int>(f))
            return fail("right identity law fails");
    }
    for (size_t f = 0; f < morphisms.size(); ++f)
        for (size_t g = 0; g < morphisms.size(); ++g) {
            if (morphisms[f].dst != morphisms[g].src) continue;
            auto gf = composition.find({static_cast<int>(g), static_cast<int>(f)});
            if (gf == composition.end()) return fail("composition not defined");
            for (size_t h = 0; h < morphisms.size(); ++h) {
                if (morphisms[g].dst != morphisms[h].src) continue;
                int hg = composition.at({static_cast<int>(h), static_cast<int>(g)});
                int left = composition.at({hg, static_cast<int>(f)});
                int right = composition.at({static_cast<int>(h), gf->second});
                if (left != right) return fail("associativity fails");
            }
        }
    return true;
}

std::optional<int> SmallCategory::terminal_object() const {
    std::vector<std::vector<int>> into(objects.size());
    for (size_t m = 0; m < morphisms.size(); ++m)
        into[morphisms[m].dst].push_back(static_cast<int>(m));
    for (size_t o = 0; o < objects.size(); ++o) {
        std::vector<int> count(objects.size(), 0);
        for (int m : into[o]) ++count[morphisms[m].src];
        bool ok = true;
        for (size_t s = 0; s < objects.size() && ok; ++s) ok = count[s] == 1;
        if (ok) return static_cast<int>(o);
    }
    return std::nullopt;
}

SmallCategory category_of_elements(const FinitePresheaf& p, int max_vertices,
                                   int max_arity) {
    SmallCategory c;
    std::vector<Tree> shapes = enumerate_trees(max_vertices, max_arity);
    struct ShapeObjs {
        Tree tree;
        std::vector<std::string> elems;
    };
    std::vector<ShapeObjs> per_shape;
    std::map<std::string, int> obj_ix;
    for (const Tree& s : shapes) {
        shape_data(s);
        ShapeObjs so{s, p.elements_at(s)};
        for (const auto& e : so.elems) {
            std::string key = canonical_code(s) + "@" + e;
            obj_ix[key] = static_cast<int>(c.objects.size());
            c.objects.push_back(key);
        }
        per_shape.push_back(std::move(so));
    }
    std::map<std::string, int> mor_ix;
    struct MorData {
        TreeMorphism m;
        std::string target_elem;
    };
    std::vector<MorData> data;
    auto add_mor = [&](const TreeMorphism& m, const std::string& ze, int src, int dst) {
        std::string key = m.encode() + "@" + ze;
        std::string full = std::to_string(src) + ">" + std::to_string(dst) + ">" + key;
        if (mor_ix.count(full)) return mor_ix[full];
        int id = static_cast<int>(c.morphisms.size());
        mor_ix[full] = id;
        c.morphisms.push_back({src, dst, key});
        data.push_back({m, ze});
        return id;
    };
    for (const auto& su : per_shape) {
        std::string ucode = canonical_code(su.tree);
        for (const auto& sv : per_shape) {
            std::string vcode = canonical_code(sv.tree);
            for (const TreeMorphism& m : hom(sv.tree, su.tree)) {
                for (const auto& z : su.elems) {
                    std::string w = p.restrict(m, z);
                    int src = obj_ix.at(vcode + "@" + w);
                    int dst = obj_ix.at(ucode + "@" + z);
                    add_mor(m, z, src, dst);
                }
            }
        }
    }
    c.identities.resize(c.objects.size());
    for (const auto& su : per_shape) {
        TreeMorphism idm = identity_morphism(su.tree);
        std::string ucode = canonical_code(su.tree);
        for (const auto& z : su.elems) {
            int o = obj_ix.at(ucode + "@" + z);
            std::string full =
                std::to_string(o) + ">" + std::to_string(o) + ">" + idm.encode() + "@" + z;
            c.identities[o] = mor_ix.at(full);
        }
    }
    for (size_t f = 0; f < c.morphisms.size(); ++f)
        for (size_t g = 0; g < c.morphisms.size(); ++g) {
            if (c.morphisms[f].dst != c.morphisms[g].src) continue;
            TreeMorphism comp = compose(data[g].m, data[f].m);
            std::string full = std::to_string(c.morphisms[f].src) + ">" +
                               std::to_string(c.morphisms[g].dst) + ">" + comp.encode() +
                               "@" + data[g].target_elem;
            c.composition[{static_cast<int>(g), static_cast<int>(f)}] = mor_ix.at(full);
        }
    return c;
}

int connected_components(const SmallCategory& c) {
    std::vector<int> parent(c.objects.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& m : c.morphisms) parent[find(m.src)] = find(m.dst);
    std::set<int> roots;
    for (size_t i = 0; i < parent.size(); ++i) roots.insert(find(static_cast<int>(i)));
    return static_cast<int>(roots.size());
}

std::vector<long long> nerve_counts(const SmallCategory& c, int dim_bound) {
    std::vector<long long> out;
    out.push_back(static_cast<long long>(c.objects.size()));
    std::set<int> ids(c.identities.begin(), c.identities.end());
    // paths[m] = number of nondegenerate chains of the current length ending at m
    std::vector<long long> paths(c.morphisms.size(), 0);
    for (size_t m = 0; m < c.morphisms.size(); ++m)
        if (!ids.count(static_cast<int>(m))) paths[m] = 1;
    for (int d = 1; d <= dim_bound; ++d) {
        long long total = 0;
        for (auto v : paths) total += v;
        out.push_back(total);
        std::vector<long long> next(c.morphisms.size(), 0);
        for (size_t f = 0; f < c.morphisms.size(); ++f) {
            if (!paths[f]) continue;
            for (size_t g = 0; g < c.morphisms.size(); ++g) {
                if (ids.count(static_cast<int>(g))) continue;
                if (c.morphisms[f].dst != c.morphisms[g].src) continue;
                next[g] += paths[f];
            }
        }
        paths = std::move(next);
    }
    return out;
}

}  // namespace omega
