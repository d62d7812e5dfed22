#include "omega/homotopy.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace omega {

// --- posets ------------------------------------------------------------------

std::optional<int> FacePoset::maximum() const {
    for (int b = 0; b < size(); ++b) {
        bool top = true;
        for (int a = 0; a < size() && top; ++a) top = leq(a, b);
        if (top) return b;
    }
    return std::nullopt;
}

std::string FacePoset::to_dot() const {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (int i = 0; i < size(); ++i) os << "  n" << i << " [label=\"" << keys[i] << "\"];\n";
    // Hasse edges: covers only.
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (!lt[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < size() && cover; ++c)
                if (lt[a][c] && lt[c][b]) cover = false;
            if (cover) os << "  n" << a << " -> n" << b << ";\n";
        }
    os << "}\n";
    return os.str();
}

FacePoset face_poset(const SubPresheaf& x) {
    std::vector<Elem> elems = x.all_elems();
    // Orbit classes under shape automorphisms; key = least encoding in orbit.
    std::map<std::string, int> class_of;
    std::vector<std::string> keys;
    std::vector<Elem> reps;
    for (const Elem& e : elems) {
        if (class_of.count(e.encode())) continue;
        const ShapeData& sd = shape_data(e.shape);
        std::string least = e.encode();
        std::vector<std::string> orbit;
        for (const auto& aut : sd.auts) {
            std::string enc = restrict_elem(e, e.shape, aut).encode();
            orbit.push_back(enc);
            least = std::min(least, enc);
        }
        int id = static_cast<int>(keys.size());
        for (const auto& enc : orbit) class_of[enc] = id;
        keys.push_back(least);
        reps.push_back(e);
    }
    const int n = static_cast<int>(keys.size());
    FacePoset p;
    p.keys = keys;
    p.lt.assign(n, std::vector<bool>(n, false));
    for (int b = 0; b < n; ++b) {
        SubPresheaf down = generated_by(x.ambient(), {reps[b]});
        for (const Elem& w : down.all_elems()) {
            int a = class_of.at(w.encode());
            if (a != b) p.lt[a][b] = true;
        }
    }
    return p;
}

FacePoset face_poset(const FinitePresheaf& pre, int max_vertices, int max_arity) {
    // Collect nondegenerate elements over the shape range.
    struct Node {
        Tree shape;
        std::string elem;
    };
    std::vector<Node> nodes;
    std::map<std::string, int> node_ix;  // shapecode@elem -> id(class)
    std::vector<Tree> shapes = enumerate_trees(max_vertices, max_arity);
    for (const Tree& s : shapes) {
        const ShapeData& sd = shape_data(s);
        std::vector<TreeMorphism> auts = automorphisms(sd.tree);
        for (const std::string& z : pre.elements_at(sd.tree)) {
            std::string key = canonical_code(s) + "@" + z;
            if (node_ix.count(key)) continue;
            if (finite_elem_degenerate(pre, sd.tree, z)) continue;
            int id = static_cast<int>(nodes.size());
            for (const TreeMorphism& g : auts)
                node_ix[canonical_code(s) + "@" + pre.restrict(g, z)] = id;
            nodes.push_back({sd.tree, z});
        }
    }
    const int n = static_cast<int>(nodes.size());
    FacePoset p;
    for (const auto& nd : nodes) p.keys.push_back(canonical_code(nd.shape) + "@" + nd.elem);
    p.lt.assign(n, std::vector<bool>(n, false));
    // Downward closure by single face steps, taking cores of degenerate images.
    std::function<void(int, const Tree&, const std::string&, std::set<std::string>&)> walk =
        [&](int b, const Tree& shape, const std::string& elem, std::set<std::string>& seen) {
            const ShapeData& sd = shape_data(shape);
            for (const auto& f : sd.faces) {
                const ShapeData& src = shape_data(f.src_code);
                TreeMorphism m = make_morphism_names(src.tree, sd.tree, [&] {
                    std::map<std::string, std::string> em;
                    for (int i = 0; i < src.tree.edge_count(); ++i)
                        em[src.tree.edge_name(i)] = sd.tree.edge_name(f.edge_map[i]);
                    return em;
                }());
                std::string w = pre.restrict(m, elem);
                Tree wshape = src.tree;
                // take the core by searching a preimage along collapse maps
                bool reduced = true;
                while (reduced) {
                    reduced = false;
                    for (int v = 0; v < wshape.vertex_count() && !reduced; ++v) {
                        if (wshape.vertex_inputs(v).size() != 1) continue;
                        int lo = wshape.vertex_output(v);
                        int hi = wshape.vertex_inputs(v)[0];
                        std::vector<std::string> edges;
                        for (int i = 0; i < wshape.edge_count(); ++i)
                            if (i != hi) edges.push_back(wshape.edge_name(i));
                        std::vector<Vertex> vs;
                        for (int u = 0; u < wshape.vertex_count(); ++u) {
                            if (u == v) continue;
                            Vertex nv = wshape.vertex(u);
                            if (nv.output == wshape.edge_name(hi))
                                nv.output = wshape.edge_name(lo);
                            for (auto& in : nv.inputs)
                                if (in == wshape.edge_name(hi)) in = wshape.edge_name(lo);
                            vs.push_back(nv);
                        }
                        Tree collapsed = Tree::make(edges, wshape.root(), vs);
                        CanonicalForm cf = canonical_form(collapsed);
                        shape_data(cf.tree);
                        std::map<std::string, std::string> em;
                        for (int i = 0; i < wshape.edge_count(); ++i) {
                            const std::string& nm = wshape.edge_name(i);
                            em[nm] = cf.edge_map.at(i == hi ? wshape.edge_name(lo) : nm);
                        }
                        TreeMorphism sigma = make_morphism_names(wshape, cf.tree, em);
                        for (const std::string& z2 : pre.elements_at(cf.tree)) {
                            if (pre.restrict(sigma, z2) == w) {
                                w = z2;
                                wshape = cf.tree;
                                reduced = true;
                                break;
                            }
                        }
                    }
                }
                std::string key = canonical_code(wshape) + "@" + w;
                auto it = node_ix.find(key);
                if (it == node_ix.end()) continue;  // outside the shape range
                int a = it->second;
                if (a != b) p.lt[a][b] = true;
                if (seen.insert(key).second) walk(b, wshape, w, seen);
            }
        };
    for (int b = 0; b < n; ++b) {
        std::set<std::string> seen;
        walk(b, nodes[b].shape, nodes[b].elem, seen);
    }
    // transitive closure
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            if (p.lt[a][c])
                for (int b = 0; b < n; ++b)
                    if (p.lt[c][b]) p.lt[a][b] = true;
    return p;
}

FacePoset grid_poset(int m, int n) {
    FacePoset p;
    auto ix = [&](int i, int j) { return i * (n + 1) + j; };
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            p.keys.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    int N = (m + 1) * (n + 1);
    p.lt.assign(N, std::vector<bool>(N, false));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            for (int i2 = i; i2 <= m; ++i2)
                for (int j2 = j; j2 <= n; ++j2)
                    if (i2 != i || j2 != j) p.lt[ix(i, j)][ix(i2, j2)] = true;
    return p;
}

FacePoset grid_simplex_face_poset(int m, int n) {
    // Nondegenerate simplices of the product of simplices are the chains of
    // the grid poset, ordered by subchain.
    FacePoset grid = grid_poset(m, n);
    SimplicialComplex chains = order_complex(grid);
    FacePoset p;
    std::vector<std::vector<int>> sims;
    for (const auto& dim : chains.by_dim)
        for (const auto& s : dim) sims.push_back(s);
    for (const auto& s : sims) {
        std::string k = "{";
        for (int v : s) k += grid.keys[v];
        k += "}";
        p.keys.push_back(k);
    }
    int N = static_cast<int>(sims.size());
    p.lt.assign(N, std::vector<bool>(N, false));
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (a != b && sims[a].size() < sims[b].size() &&
                std::includes(sims[b].begin(), sims[b].end(), sims[a].begin(), sims[a].end()))
                p.lt[a][b] = true;
    return p;
}

// --- complexes -----------------------------------------------------------------

long long SimplicialComplex::size() const {
    long long s = 0;
    for (const auto& d : by_dim) s += static_cast<long long>(d.size());
    return s;
}

SimplicialComplex order_complex(const FacePoset& p, long long budget) {
    SimplicialComplex c;
    c.nvertices = p.size();
    std::vector<std::vector<int>> above(p.size());
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.lt[a][b]) above[a].push_back(b);
    long long count = 0;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int last) {
        if (static_cast<int>(chain.size()) > static_cast<int>(c.by_dim.size()))
            c.by_dim.resize(chain.size());
        std::vector<int> simplex = chain;  // vertex lists are kept sorted
        std::sort(simplex.begin(), simplex.end());
        c.by_dim[chain.size() - 1].push_back(std::move(simplex));
        if (++count > budget) throw BoundsTooLarge("order complex exceeded budget");
        for (int nxt : above[last]) {
            chain.push_back(nxt);
            extend(nxt);
            chain.pop_back();
        }
    };
    for (int v = 0; v < p.size(); ++v) {
        chain = {v};
        extend(v);
    }
    for (auto& d : c.by_dim) std::sort(d.begin(), d.end());
    return c;
}

// --- Smith normal form ------------------------------------------------------------

SNFResult smith_normal_form(int nrows, int ncols,
                            const std::vector<std::map<int, BigInt>>& rows_in) {
    std::vector<std::map<int, BigInt>> row = rows_in;
    row.resize(nrows);
    std::vector<std::set<int>> col(ncols);
    for (int r = 0; r < nrows; ++r)
        for (const auto& [c, v] : row[r])
            if (v != 0) col[c].insert(r);

    auto set_entry = [&](int r, int c, const BigInt& v) {
        if (v == 0) {
            row[r].erase(c);
            col[c].erase(r);
        } else {
            row[r][c] = v;
            col[c].insert(r);
        }
    };
    auto get = [&](int r, int c) -> BigInt {
        auto it = row[r].find(c);
        return it == row[r].end() ? BigInt(0) : it->second;
    };
    // row[r2] -= q * row[r1]
    auto row_sub = [&](int r2, int r1, const BigInt& q) {
        if (q == 0) return;
        for (const auto& [c, v] : row[r1]) set_entry(r2, c, get(r2, c) - q * v);
    };
    // col[c2] -= q * col[c1]
    auto col_sub = [&](int c2, int c1, const BigInt& q) {
        if (q == 0) return;
        std::vector<int> rs(col[c1].begin(), col[c1].end());
        for (int r : rs) set_entry(r, c2, get(r, c2) - q * get(r, c1));
    };

    SNFResult res;
    std::vector<bool> row_done(nrows, false), col_done(ncols, false);
    for (;;) {
        // pivot selection: unit entries first, then smallest magnitude; ties by
        // Markowitz fill estimate
        int pr = -1, pc = -1;
        BigInt pv = 0;
        long long best_score = -1;
        for (int r = 0; r < nrows; ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : row[r]) {
                if (col_done[c]) continue;
                BigInt a = abs(v);
                long long fill = static_cast<long long>(row[r].size() - 1) *
                                 static_cast<long long>(col[c].size() - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if ((a == 1) != (pv == 1))
                    better = a == 1;
                else if (a != pv)
                    better = a < pv;
                else
                    better = fill < best_score;
                if (better) {
                    pr = r;
                    pc = c;
                    pv = a;
                    best_score = fill;
                }
            }
        }
        if (pr < 0) break;
        // clear the pivot column and row
        for (;;) {
            bool moved = false;
            std::vector<int> rs(col[pc].begin(), col[pc].end());
            for (int r : rs) {
                if (r == pr || row_done[r]) continue;
                BigInt a = get(r, pc), p = get(pr, pc);
                BigInt q = a / p;
                row_sub(r, pr, q);
                BigInt rem = get(r, pc);
                if (rem != 0) {
                    pr = r;  // smaller remainder becomes the pivot
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            std::vector<int> cs;
            for (const auto& [c, v] : row[pr])
                if (c != pc && !col_done[c]) cs.push_back(c);
            bool col_moved = false;
            for (int c : cs) {
                BigInt a = get(pr, c), p = get(pr, pc);
                BigInt q = a / p;
                col_sub(c, pc, q);
                BigInt rem = get(pr, c);
                if (rem != 0) {
                    pc = c;
                    col_moved = true;
                    break;
                }
            }
            if (col_moved) continue;
            break;
        }
        res.invariant_factors.push_back(abs(get(pr, pc)));
        ++res.rank;
        row_done[pr] = true;
        col_done[pc] = true;
        // detach the pivot row/column
        std::vector<int> rs(col[pc].begin(), col[pc].end());
        for (int r : rs) set_entry(r, pc, 0);
        std::vector<int> cs;
        for (const auto& [c, v] : row[pr]) cs.push_back(c);
        for (int c : cs) set_entry(pr, c, 0);
    }
    // repair divisibility: invariant factors of a diagonal matrix
    auto& d = res.invariant_factors;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                BigInt g = gcd(d[i], d[j]);
                BigInt l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
    return res;
}

// --- homology ----------------------------------------------------------------------

bool HomologyReport::trivial() const {
    for (long long b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyReport::euler_identity_holds() const {
    long long lhs = 0, sign = 1;
    for (long long n : chain_dims) {
        lhs += sign * n;
        sign = -sign;
    }
    long long rhs = chain_dims.empty() ? 0 : 1;
    sign = 1;
    for (long long b : betti) {
        rhs += sign * b;
        sign = -sign;
    }
    return lhs == rhs;
}

HomologyReport homology(const SimplicialComplex& c, int max_degree) {
    const int dim = c.dim();
    if (max_degree < 0) max_degree = dim;
    HomologyReport rep;
    rep.chain_dims.resize(max_degree + 1, 0);
    for (int k = 0; k <= std::min(dim, max_degree); ++k)
        rep.chain_dims[k] = static_cast<long long>(c.by_dim[k].size());

    // index simplices per dimension
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int k = 0; k <= dim; ++k)
        for (size_t i = 0; i < c.by_dim[k].size(); ++i)
            index[k][c.by_dim[k][i]] = static_cast<int>(i);

    // ranks[k] = rank of boundary C_k -> C_{k-1} (k = 0 is the augmentation)
    std::vector<long long> ranks(std::max(dim + 2, max_degree + 2), 0);
    std::vector<std::vector<BigInt>> diags(std::max(dim + 2, max_degree + 2));
    if (dim >= 0 && !c.by_dim[0].empty()) {
        // augmentation has rank 1 when the complex is nonempty
        ranks[0] = 1;
    }
    for (int k = 1; k <= dim; ++k) {
        int nr = static_cast<int>(c.by_dim[k - 1].size());
        int nc = static_cast<int>(c.by_dim[k].size());
        std::vector<std::map<int, BigInt>> rows(nr);
        for (int j = 0; j < nc; ++j) {
            const auto& s = c.by_dim[k][j];
            int sign = 1;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                rows[index[k - 1].at(face)][j] += sign;
                sign = -sign;
            }
        }
        SNFResult snf = smith_normal_form(nr, nc, rows);
        ranks[k] = snf.rank;
        diags[k] = snf.invariant_factors;
    }
    rep.betti.resize(max_degree + 1, 0);
    rep.torsion.resize(max_degree + 1);
    for (int k = 0; k <= max_degree; ++k) {
        long long nk = rep.chain_dims[k];
        long long rk = k <= dim ? ranks[k] : 0;
        long long rk1 = k + 1 <= dim ? ranks[k + 1] : 0;
        rep.betti[k] = nk - rk - rk1;
        if (k + 1 <= dim)
            for (const BigInt& d : diags[k + 1])
                if (d > 1) rep.torsion[k].push_back(d.str());
    }
    return rep;
}

// --- collapses -----------------------------------------------------------------------

namespace {

struct SimsState {
    std::set<std::vector<int>> sims;
    std::map<std::vector<int>, int> coface_count;  // codimension-1 cofaces

    void init(const SimplicialComplex& c) {
        for (const auto& d : c.by_dim)
            for (const auto& s : d) sims.insert(s);
        for (const auto& s : sims) {
            if (s.size() == 1) continue;
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> f;
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) f.push_back(s[i]);
                ++coface_count[f];
            }
        }
    }

    std::optional<std::vector<int>> unique_coface(const std::vector<int>& s, int nvertices) {
        for (int v = 0; v < nvertices; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            std::vector<int> t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), v), v);
            if (sims.count(t)) return t;
        }
        return std::nullopt;
    }

    void remove_pair(const std::vector<int>& s, const std::vector<int>& t,
                     std::vector<std::vector<int>>& newly_free) {
        sims.erase(s);
        sims.erase(t);
        for (const auto& sim : {t, s}) {
            if (sim.size() == 1) continue;
            for (size_t drop = 0; drop < sim.size(); ++drop) {
                std::vector<int> f;
                for (size_t i = 0; i < sim.size(); ++i)
                    if (i != drop) f.push_back(sim[i]);
                auto it = coface_count.find(f);
                if (it != coface_count.end() && --it->second == 1 && sims.count(f))
                    newly_free.push_back(f);
            }
        }
    }
};

std::optional<std::vector<CollapseStep>> cone_collapse(const SimplicialComplex& c) {
    std::set<std::vector<int>> sims;
    for (const auto& d : c.by_dim)
        for (const auto& s : d) sims.insert(s);
    if (sims.empty()) return std::nullopt;
    for (int apex = 0; apex < c.nvertices; ++apex) {
        bool is_apex = true;
        for (const auto& s : sims) {
            if (std::binary_search(s.begin(), s.end(), apex)) continue;
            std::vector<int> t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), apex), apex);
            if (!sims.count(t)) {
                is_apex = false;
                break;
            }
        }
        if (!is_apex) continue;
        // pair every simplex without the apex with its cone, top dimension first
        std::vector<std::vector<int>> free;
        for (const auto& s : sims)
            if (!std::binary_search(s.begin(), s.end(), apex)) free.push_back(s);
        std::sort(free.begin(), free.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) {
                      return a.size() != b.size() ? a.size() > b.size() : a < b;
                  });
        std::vector<CollapseStep> steps;
        for (const auto& s : free) {
            std::vector<int> t = s;
            t.insert(std::lower_bound(t.begin(), t.end(), apex), apex);
            steps.push_back({s, t});
        }
        return steps;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<CollapseStep>> collapse_to_point(const SimplicialComplex& c,
                                                           int restarts,
                                                           unsigned long long seed) {
    long long total = c.size();
    if (total == 0) return std::nullopt;
    if (total == 1 && !c.by_dim[0].empty()) return std::vector<CollapseStep>{};
    if (auto cone = cone_collapse(c)) return cone;

    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ULL + attempt);
        SimsState st;
        st.init(c);
        std::vector<std::vector<int>> freelist;
        for (const auto& [f, cnt] : st.coface_count)
            if (cnt == 1 && st.sims.count(f)) freelist.push_back(f);
        std::vector<CollapseStep> steps;
        while (st.sims.size() > 1) {
            // lazy-deleting random pick
            std::optional<std::vector<int>> pick;
            while (!freelist.empty()) {
                size_t i = rng() % freelist.size();
                std::vector<int> f = freelist[i];
                freelist[i] = freelist.back();
                freelist.pop_back();
                auto it = st.coface_count.find(f);
                if (st.sims.count(f) && it != st.coface_count.end() && it->second == 1) {
                    pick = f;
                    break;
                }
            }
            if (!pick) break;
            auto t = st.unique_coface(*pick, c.nvertices);
            if (!t) break;
            std::vector<std::vector<int>> newly;
            st.remove_pair(*pick, *t, newly);
            for (auto& f : newly) freelist.push_back(f);
            steps.push_back({*pick, *t});
        }
        if (st.sims.size() == 1 && st.sims.begin()->size() == 1) return steps;
    }
    return std::nullopt;
}

// --- verdicts ---------------------------------------------------------------------

std::string AsphericityVerdict::to_json() const {
    std::ostringstream os;
    os << "{\"verdict\":\"";
    switch (kind) {
        case Kind::CollapsedToPoint: os << "CollapsedToPoint"; break;
        case Kind::HomologyTrivial: os << "HomologyTrivial"; break;
        case Kind::NotAspherical: os << "NotAspherical"; break;
    }
    os << "\",\"evidence\":\"" << detail << "\",\"model\":\"" << model << "\"}";
    return os.str();
}

AsphericityVerdict asphericity(const FacePoset& p, const AsphericityOptions& opt) {
    AsphericityVerdict v;
    if (p.size() == 0) {
        v.kind = AsphericityVerdict::Kind::NotAspherical;
        v.detail = "empty presheaf";
        return v;
    }
    SimplicialComplex c = order_complex(p, opt.complex_budget);
    v.complex_size = c.size();
    auto seq = collapse_to_point(c, opt.restarts, opt.seed);
    if (seq) {
        v.kind = AsphericityVerdict::Kind::CollapsedToPoint;
        v.collapse_steps = static_cast<long long>(seq->size());
        v.detail = "collapse sequence of " + std::to_string(seq->size()) + " steps";
        if (opt.crosscheck && c.size() <= opt.homology_budget) {
            v.report = homology(c, opt.max_degree);
            v.crosschecked = true;
            if (!v.report->trivial())
                throw TreeError("engine inconsistency: collapsed complex has homology");
        }
        return v;
    }
    HomologyReport rep = homology(c, opt.max_degree);
    v.report = rep;
    if (rep.betti.size() > 0 && rep.betti[0] > 0) {
        v.kind = AsphericityVerdict::Kind::NotAspherical;
        v.detail = "disconnected: " + std::to_string(rep.betti[0] + 1) + " components";
    } else if (!rep.trivial()) {
        int deg = 0;
        for (size_t k = 0; k < rep.betti.size(); ++k)
            if (rep.betti[k] != 0 || !rep.torsion[k].empty()) deg = static_cast<int>(k);
        v.kind = AsphericityVerdict::Kind::NotAspherical;
        v.detail = "nonzero reduced homology in degree " + std::to_string(deg);
    } else {
        v.kind = AsphericityVerdict::Kind::HomologyTrivial;
        v.detail = "no collapse found; reduced homology vanishes (necessary evidence only)";
    }
    return v;
}

AsphericityVerdict asphericity(const SubPresheaf& x, const AsphericityOptions& opt) {
    return asphericity(face_poset(x), opt);
}

// --- Segal core --------------------------------------------------------------------

SegalGluing segal_gluing_hypothesis(const Tree& t) {
    SegalGluing out;
    if (t.vertex_count() == 0) {
        out.ok = true;
        out.detail = "no vertices";
        return out;
    }
    AmbientPtr a = Ambient::representable(t);
    std::vector<SubPresheaf> pieces;
    std::vector<int> depth_order;
    auto depth = [&](int v) {
        int d = 0, e = t.vertex_output(v);
        while (t.consumer_of(e) >= 0) {
            e = t.vertex_output(t.consumer_of(e));
            ++d;
        }
        return d;
    };
    for (int v = 0; v < t.vertex_count(); ++v) depth_order.push_back(v);
    std::sort(depth_order.begin(), depth_order.end(),
              [&](int x, int y) { return depth(x) < depth(y); });
    for (int v : depth_order) {
        int n = static_cast<int>(t.vertex_inputs(v).size());
        Tree c = corolla(n);
        std::map<std::string, std::string> labels;
        labels[c.root()] = t.edge_name(t.vertex_output(v));
        for (int i = 0; i < n; ++i)
            labels["l" + std::to_string(i + 1)] = t.edge_name(t.vertex_inputs(v)[i]);
        pieces.push_back(generated_by(a, {elem_of_labelling(c, labels)}));
    }
    auto is_single_eta = [](const SubPresheaf& s) {
        return s.size() == 1 && s.elements().count("*") &&
               s.elements().at("*").size() == 1;
    };
    // connected-order gluing: each new corolla meets the union so far in one η
    for (size_t k = 1; k < pieces.size(); ++k) {
        std::vector<SubPresheaf> prefix(pieces.begin(), pieces.begin() + k);
        SubPresheaf uni = union_(prefix);
        SubPresheaf inter = intersection({uni, pieces[k]});
        if (!is_single_eta(inter)) {
            out.ok = false;
            out.detail = "gluing step " + std::to_string(k) + " intersects in " +
                         std::to_string(inter.size()) + " elements";
            return out;
        }
    }
    // pairwise: adjacent vertices share exactly one η, others are disjoint
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            SubPresheaf inter = intersection({pieces[i], pieces[j]});
            if (!(inter.empty() || is_single_eta(inter))) {
                out.ok = false;
                out.detail = "corolla images " + std::to_string(i) + "," +
                             std::to_string(j) + " overlap in " +
                             std::to_string(inter.size()) + " elements";
                return out;
            }
        }
    out.ok = true;
    out.detail = std::to_string(pieces.size()) + " corollas glued along single η-elements";
    return out;
}

AsphericityVerdict segal_core_asphericity(const Tree& t, const AsphericityOptions& opt) {
    SegalGluing g = segal_gluing_hypothesis(t);
    if (!g.ok) throw TreeError("Segal gluing hypothesis failed: " + g.detail);
    return asphericity(segal_core(t), opt);
}

// --- union lemma harness --------------------------------------------------------------

MVCheck mv_lemma_check(const std::vector<SubPresheaf>& pieces, const AsphericityOptions& opt) {
    MVCheck out;
    if (pieces.empty()) throw EmptyIndexSet("no pieces");
    // close under pairwise intersection
    std::vector<SubPresheaf> closed = pieces;
    auto key = [](const SubPresheaf& s) {
        std::string k;
        for (const auto& [shape, set] : s.elements())
            for (const auto& e : set) k += e + "|";
        return k;
    };
    std::set<std::string> seen;
    bool saw_empty = false;
    for (const auto& p : closed) seen.insert(key(p));
    for (size_t i = 0; i < closed.size(); ++i)
        for (size_t j = 0; j < pieces.size(); ++j) {
            SubPresheaf inter = intersection({closed[i], pieces[j]});
            if (inter.empty()) {
                saw_empty = true;  // the empty presheaf is not aspherical
                continue;
            }
            if (seen.insert(key(inter)).second) closed.push_back(inter);
        }
    out.hypothesis_met = !saw_empty;
    if (saw_empty) out.detail = "an intersection is empty";
    for (const auto& piece : closed) {
        if (!out.hypothesis_met) break;
        AsphericityVerdict v = asphericity(piece, opt);
        if (v.kind != AsphericityVerdict::Kind::CollapsedToPoint) {
            out.hypothesis_met = false;
            out.detail = "an intersection did not collapse";
        }
    }
    if (!out.hypothesis_met) {
        out.consistent = true;  // lemma imposes nothing
        return out;
    }
    AsphericityVerdict u = asphericity(union_(pieces), opt);
    out.consistent = u.kind != AsphericityVerdict::Kind::NotAspherical;
    out.detail = "union verdict: " + u.detail;
    return out;
}

}  // namespace omega
