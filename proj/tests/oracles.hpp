#pragma once

// Independent oracles used by the tests. Each one recomputes a quantity by a
// different route than the library: brute-force isomorphism search instead of
// canonical codes, operadic saturation instead of subtree growth, exhaustive
// labelled-tree generation instead of percolation, and a replay checker for
// collapse sequences.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omega/homotopy.hpp"
#include "omega/shuffle.hpp"

namespace oracle {

// --- rooted-tree generation with brute-force isomorphism dedup ------------------

struct OTree {
    bool has_vertex = false;
    std::vector<OTree> kids;  // edges above the vertex
};

inline bool otree_iso(const OTree& a, const OTree& b) {
    if (a.has_vertex != b.has_vertex) return false;
    if (!a.has_vertex) return true;
    if (a.kids.size() != b.kids.size()) return false;
    std::vector<bool> used(b.kids.size(), false);
    std::function<bool(size_t)> match = [&](size_t i) -> bool {
        if (i == a.kids.size()) return true;
        for (size_t j = 0; j < b.kids.size(); ++j) {
            if (used[j] || !otree_iso(a.kids[i], b.kids[j])) continue;
            used[j] = true;
            if (match(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return match(0);
}

inline int otree_vertices(const OTree& t) {
    int c = t.has_vertex ? 1 : 0;
    for (const auto& k : t.kids) c += otree_vertices(k);
    return c;
}

// All trees with at most vertex_budget vertices (as ordered trees, with
// duplicates across orderings; the caller deduplicates up to isomorphism).
inline const std::vector<OTree>& otrees_upto(int vertex_budget, int max_arity) {
    static std::map<std::pair<int, int>, std::vector<OTree>> memo;
    auto key = std::make_pair(vertex_budget, max_arity);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<OTree> out;
    out.push_back(OTree{});  // bare edge
    if (vertex_budget > 0) {
        for (int k = 0; k <= max_arity; ++k) {
            std::vector<OTree> acc;
            std::function<void(int, int)> rec = [&](int slot, int budget) {
                if (slot == k) {
                    OTree t;
                    t.has_vertex = true;
                    t.kids = acc;
                    out.push_back(t);
                    return;
                }
                for (const OTree& g : otrees_upto(budget, max_arity)) {
                    int used = otree_vertices(g);
                    if (used > budget) continue;
                    acc.push_back(g);
                    rec(slot + 1, budget - used);
                    acc.pop_back();
                }
            };
            rec(0, vertex_budget - 1);
        }
    }
    return memo.emplace(key, std::move(out)).first->second;
}

// Number of isomorphism classes of trees with at most max_vertices vertices
// and arity at most max_arity, via pairwise isomorphism tests.
inline long long count_tree_classes(int max_vertices, int max_arity) {
    std::vector<OTree> raw = otrees_upto(max_vertices, max_arity);
    std::vector<OTree> classes;
    for (const OTree& t : raw) {
        bool fresh = true;
        for (const OTree& c : classes)
            if (otree_iso(t, c)) {
                fresh = false;
                break;
            }
        if (fresh) classes.push_back(t);
    }
    return static_cast<long long>(classes.size());
}

// --- operadic saturation -----------------------------------------------------------

// Operations of the free operad of a tree, computed by closing the generators
// under substitution. Returned as (output, sorted input list) pairs; the
// orderings of an operation are all permutations of its (distinct) inputs.
inline std::set<std::pair<int, std::vector<int>>> saturated_ops(const omega::Tree& t) {
    std::set<std::pair<int, std::vector<int>>> ops;
    for (int e = 0; e < t.edge_count(); ++e) ops.insert({e, {e}});
    for (int v = 0; v < t.vertex_count(); ++v) {
        std::vector<int> ins = t.vertex_inputs(v);
        std::sort(ins.begin(), ins.end());
        ops.insert({t.vertex_output(v), ins});
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, std::vector<int>>> cur(ops.begin(), ops.end());
        for (const auto& [d, l1] : cur)
            for (const auto& [c, l2] : cur) {
                if (l1.size() == 1 && l1[0] == d) continue;  // identity substitution
                if (l2.size() == 1 && l2[0] == c) continue;
                auto it = std::find(l1.begin(), l1.end(), c);
                if (it == l1.end()) continue;
                std::vector<int> merged;
                for (int x : l1)
                    if (x != c) merged.push_back(x);
                merged.insert(merged.end(), l2.begin(), l2.end());
                std::sort(merged.begin(), merged.end());
                if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
                    continue;
                if (ops.insert({d, merged}).second) grew = true;
            }
    }
    return ops;
}

// Brute-force hom-set counting: every edge map, validated against the
// saturated operation set.
inline long long hom_count_bruteforce(const omega::Tree& s, const omega::Tree& t) {
    auto ops = saturated_ops(t);
    long long count = 0;
    std::vector<int> em(s.edge_count(), 0);
    std::function<void(int)> rec = [&](int e) {
        if (e == s.edge_count()) {
            for (int v = 0; v < s.vertex_count(); ++v) {
                int out = em[s.vertex_output(v)];
                std::vector<int> ins;
                for (int in : s.vertex_inputs(v)) ins.push_back(em[in]);
                std::sort(ins.begin(), ins.end());
                if (ins.size() == 1 && ins[0] == out) continue;  // identity
                if (std::adjacent_find(ins.begin(), ins.end()) != ins.end()) return;
                if (!ops.count({out, ins})) return;
            }
            ++count;
            return;
        }
        for (int img = 0; img < t.edge_count(); ++img) {
            em[e] = img;
            rec(e + 1);
        }
    };
    rec(0);
    return count;
}

// --- monotone maps and lattice paths -----------------------------------------------

inline long long monotone_maps(int m, int n) {
    long long count = 0;
    std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i > m) {
            ++count;
            return;
        }
        for (int v = lo; v <= n; ++v) rec(i + 1, v);
    };
    rec(0, 0);
    return count;
}

inline long long lattice_paths(int m, int n) {
    if (m == 0 || n == 0) return 1;
    return lattice_paths(m - 1, n) + lattice_paths(m, n - 1);
}

// --- exhaustive labelled-shuffle generation ------------------------------------------

// All labelled trees satisfying the percolation-scheme invariants, generated
// by brute force over shapes and labellings, deduplicated by labelled code.
inline long long labelled_shuffle_count(const omega::Tree& s, const omega::Tree& t,
                                        int max_shape_vertices) {
    using namespace omega;
    std::set<std::string> found;
    int max_ar = std::max(s.max_arity(), t.max_arity());
    for (const Tree& u : enumerate_trees(max_shape_vertices, max_ar)) {
        // all labellings edges(u) -> edges(s) x edges(t)
        std::vector<std::pair<int, int>> lab(u.edge_count());
        std::function<void(int)> rec = [&](int e) {
            if (e == u.edge_count()) {
                // root label
                if (lab[u.root_index()] != std::make_pair(s.root_index(), t.root_index()))
                    return;
                // leaves carry leaf pairs, vertices are S-moves or T-moves
                for (int i = 0; i < u.edge_count(); ++i) {
                    if (u.producer_of(i) >= 0) continue;
                    if (s.producer_of(lab[i].first) >= 0 || t.producer_of(lab[i].second) >= 0)
                        return;
                }
                for (int v = 0; v < u.vertex_count(); ++v) {
                    auto [se, te] = lab[u.vertex_output(v)];
                    std::multiset<std::pair<int, int>> got;
                    for (int in : u.vertex_inputs(v)) got.insert(lab[in]);
                    bool s_move = false, t_move = false;
                    int sp = s.producer_of(se);
                    if (sp >= 0) {
                        std::multiset<std::pair<int, int>> want;
                        for (int in : s.vertex_inputs(sp)) want.insert({in, te});
                        s_move = got == want;
                    }
                    int tp = t.producer_of(te);
                    if (tp >= 0) {
                        std::multiset<std::pair<int, int>> want;
                        for (int in : t.vertex_inputs(tp)) want.insert({se, in});
                        t_move = got == want;
                    }
                    if (!s_move && !t_move) return;
                }
                // rename edges by labels to get the canonical labelled code
                std::vector<std::string> edges;
                std::vector<Vertex> vs;
                auto name = [&](int e2) {
                    return pair_label(s.edge_name(lab[e2].first), t.edge_name(lab[e2].second));
                };
                for (int i = 0; i < u.edge_count(); ++i) edges.push_back(name(i));
                std::sort(edges.begin(), edges.end());
                if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
                    return;  // labels must be pairwise distinct
                for (int v = 0; v < u.vertex_count(); ++v) {
                    std::vector<std::string> ins;
                    for (int in : u.vertex_inputs(v)) ins.push_back(name(in));
                    vs.push_back(Vertex{"w" + std::to_string(v), name(u.vertex_output(v)), ins});
                }
                Tree relabelled = Tree::make(edges, name(u.root_index()), vs);
                found.insert(labelled_tree_code(relabelled));
                return;
            }
            for (int a = 0; a < s.edge_count(); ++a)
                for (int bb = 0; bb < t.edge_count(); ++bb) {
                    lab[e] = {a, bb};
                    rec(e + 1);
                }
        };
        rec(0);
    }
    return static_cast<long long>(found.size());
}

// --- collapse sequence replay ---------------------------------------------------------

inline bool verify_collapse(const omega::SimplicialComplex& c,
                            const std::vector<omega::CollapseStep>& steps) {
    std::set<std::vector<int>> sims;
    for (const auto& d : c.by_dim)
        for (const auto& s : d) sims.insert(s);
    for (const auto& st : steps) {
        if (!sims.count(st.free_face) || !sims.count(st.coface)) return false;
        if (st.coface.size() != st.free_face.size() + 1) return false;
        if (!std::includes(st.coface.begin(), st.coface.end(), st.free_face.begin(),
                           st.free_face.end()))
            return false;
        // freeness: the named coface is the only one
        int cofaces = 0;
        for (int v = 0; v < c.nvertices; ++v) {
            if (std::binary_search(st.free_face.begin(), st.free_face.end(), v)) continue;
            std::vector<int> sup = st.free_face;
            sup.insert(std::lower_bound(sup.begin(), sup.end(), v), v);
            if (sims.count(sup)) ++cofaces;
        }
        if (cofaces != 1) return false;
        sims.erase(st.free_face);
        sims.erase(st.coface);
    }
    return sims.size() == 1 && sims.begin()->size() == 1;
}

}  // namespace oracle
