#include "omega/shuffle.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omega {

namespace {

std::string labelled_code_rec(const Tree& t, int e) {
    std::string c = t.edge_name(e);
    int p = t.producer_of(e);
    if (p < 0) return c;
    std::vector<std::string> kids;
    for (int in : t.vertex_inputs(p)) kids.push_back(labelled_code_rec(t, in));
    std::sort(kids.begin(), kids.end());
    c += "(";
    for (auto& k : kids) c += k;
    c += ")";
    return c;
}

}  // namespace

std::string labelled_tree_code(const Tree& t) { return labelled_code_rec(t, t.root_index()); }

std::string pair_label(const std::string& s_edge, const std::string& t_edge) {
    return s_edge + "|" + t_edge;
}

std::pair<std::string, std::string> split_label(const std::string& label) {
    auto pos = label.find('|');
    if (pos == std::string::npos) throw TreeError("not a pair label: " + label);
    return {label.substr(0, pos), label.substr(pos + 1)};
}

namespace {

// Partially percolated scheme. Completed structure is accumulated in
// edges/vertices; frontier holds edges still to process.
struct Partial {
    std::vector<std::string> edges;
    std::vector<Vertex> vertices;
    std::vector<char> vtags;                         // parallel to vertices
    std::vector<std::pair<int, int>> frontier;       // (s edge, t edge) indices
    std::vector<std::string> frontier_names;
};

struct Percolator {
    const Tree& s;
    const Tree& t;
    std::vector<ShuffleTree> out;
    std::set<std::string> seen;

    Partial initial() const {
        Partial p;
        std::string root = pair_label(s.root(), t.root());
        p.edges.push_back(root);
        p.frontier.push_back({s.root_index(), t.root_index()});
        p.frontier_names.push_back(root);
        return p;
    }

    // Expands the last frontier entry; returns the successor states.
    std::vector<Partial> step(const Partial& p) const {
        std::vector<Partial> next;
        Partial base = p;
        auto [se, te] = base.frontier.back();
        std::string ename = base.frontier_names.back();
        base.frontier.pop_back();
        base.frontier_names.pop_back();
        int sp = s.producer_of(se);
        int tp = t.producer_of(te);
        if (sp < 0 && tp < 0) {
            next.push_back(base);  // leaf pair, edge terminates
            return next;
        }
        if (sp >= 0) {
            Partial q = base;
            std::string vname = s.vertex(sp).name + "|" + t.edge_name(te);
            std::vector<std::string> ins;
            for (int in : s.vertex_inputs(sp)) {
                std::string n = pair_label(s.edge_name(in), t.edge_name(te));
                ins.push_back(n);
                q.edges.push_back(n);
                q.frontier.push_back({in, te});
                q.frontier_names.push_back(n);
            }
            q.vertices.push_back(Vertex{vname, ename, ins});
            q.vtags.push_back('S');
            next.push_back(std::move(q));
        }
        if (tp >= 0) {
            Partial q = base;
            std::string vname = s.edge_name(se) + "|" + t.vertex(tp).name;
            std::vector<std::string> ins;
            for (int in : t.vertex_inputs(tp)) {
                std::string n = pair_label(s.edge_name(se), t.edge_name(in));
                ins.push_back(n);
                q.edges.push_back(n);
                q.frontier.push_back({se, in});
                q.frontier_names.push_back(n);
            }
            q.vertices.push_back(Vertex{vname, ename, ins});
            q.vtags.push_back('T');
            next.push_back(std::move(q));
        }
        return next;
    }

    ShuffleTree finish(const Partial& p) const {
        ShuffleTree sh;
        sh.tree = Tree::make(p.edges, pair_label(s.root(), t.root()), p.vertices);
        for (const auto& e : sh.tree.edges()) sh.label[e] = split_label(e);
        for (size_t i = 0; i < p.vertices.size(); ++i)
            sh.vertex_tag[p.vertices[i].name] = p.vtags[i];
        sh.code = labelled_tree_code(sh.tree);
        return sh;
    }

    void run_serial(Partial p, std::vector<ShuffleTree>& sink) const {
        if (p.frontier.empty()) {
            sink.push_back(finish(p));
            return;
        }
        for (auto& q : step(p)) run_serial(std::move(q), sink);
    }
};

std::vector<ShuffleTree> dedup_sorted(std::vector<ShuffleTree> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const ShuffleTree& a, const ShuffleTree& b) { return a.code < b.code; });
    std::vector<ShuffleTree> out;
    for (auto& sh : raw)
        if (out.empty() || out.back().code != sh.code) out.push_back(std::move(sh));
    return out;
}

}  // namespace

std::vector<ShuffleTree> shuffles_serial(const Tree& s, const Tree& t) {
    Percolator perc{s, t};
    std::vector<ShuffleTree> raw;
    perc.run_serial(perc.initial(), raw);
    return dedup_sorted(std::move(raw));
}

std::vector<ShuffleTree> shuffles_parallel(const Tree& s, const Tree& t) {
    Percolator perc{s, t};
    // Breadth-first expansion until there are enough independent states.
    std::vector<Partial> queue = {perc.initial()};
    const size_t want = 32;
    for (;;) {
        bool any_open = false;
        std::vector<Partial> next;
        for (auto& p : queue) {
            if (p.frontier.empty()) {
                next.push_back(std::move(p));
                continue;
            }
            any_open = true;
            for (auto& q : perc.step(p)) next.push_back(std::move(q));
        }
        queue = std::move(next);
        if (!any_open || queue.size() >= want) break;
    }
    std::vector<std::vector<ShuffleTree>> buckets(queue.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < static_cast<int>(queue.size()); ++i)
        perc.run_serial(queue[i], buckets[i]);
    std::vector<ShuffleTree> raw;
    for (auto& b : buckets)
        for (auto& sh : b) raw.push_back(std::move(sh));
    return dedup_sorted(std::move(raw));
}

std::vector<ShuffleTree> shuffles(const Tree& s, const Tree& t) {
#ifdef _OPENMP
    if (s.vertex_count() + t.vertex_count() >= 4) return shuffles_parallel(s, t);
#endif
    return shuffles_serial(s, t);
}

// --- simplicial shuffles ------------------------------------------------------

std::vector<std::pair<int, int>> SimplicialShuffle::points() const {
    std::vector<std::pair<int, int>> pts = {{0, 0}};
    int x = 0, y = 0;
    for (bool step : steps) {
        if (step)
            ++y;
        else
            ++x;
        pts.push_back({x, y});
    }
    return pts;
}

std::vector<SimplicialShuffle> simplex_shuffles(int m, int n) {
    if (m < 0 || n < 0) throw TreeError("simplex indices must be >= 0");
    std::vector<SimplicialShuffle> out;
    std::vector<bool> steps;
    std::function<void(int, int)> rec = [&](int dx, int dy) {
        if (dx == 0 && dy == 0) {
            out.push_back(SimplicialShuffle{m, n, steps});
            return;
        }
        if (dx > 0) {
            steps.push_back(false);
            rec(dx - 1, dy);
            steps.pop_back();
        }
        if (dy > 0) {
            steps.push_back(true);
            rec(dx, dy - 1);
            steps.pop_back();
        }
    };
    rec(m, n);
    return out;
}

PosetIntersection simplex_shuffle_intersection(const std::vector<SimplicialShuffle>& J) {
    if (J.empty()) throw EmptyIndexSet("intersection over an empty set of shuffles");
    std::set<std::pair<int, int>> acc;
    for (auto& p : J.front().points()) acc.insert(p);
    for (size_t i = 1; i < J.size(); ++i) {
        std::set<std::pair<int, int>> pts;
        for (auto& p : J[i].points()) pts.insert(p);
        std::set<std::pair<int, int>> keep;
        for (auto& p : acc)
            if (pts.count(p)) keep.insert(p);
        acc = std::move(keep);
    }
    PosetIntersection res;
    res.points.assign(acc.begin(), acc.end());
    res.nonempty = !res.points.empty();
    res.contains_origin = acc.count({0, 0}) > 0;
    res.linear = true;
    for (size_t i = 0; i < res.points.size() && res.linear; ++i)
        for (size_t j = i + 1; j < res.points.size(); ++j) {
            auto [a, b] = res.points[i];
            auto [c, d] = res.points[j];
            bool le = a <= c && b <= d, ge = a >= c && b >= d;
            if (!le && !ge) {
                res.linear = false;
                break;
            }
        }
    return res;
}

std::vector<std::pair<int, int>> linear_shuffle_points(const ShuffleTree& sh,
                                                       const Tree& s, const Tree& t) {
    // Depth of an edge from the root of its factor.
    auto depth = [](const Tree& tr, const std::string& e) {
        int d = 0;
        int cur = tr.edge_index(e);
        while (tr.consumer_of(cur) >= 0) {
            cur = tr.vertex_output(tr.consumer_of(cur));
            ++d;
        }
        return d;
    };
    std::vector<std::pair<int, int>> pts;
    for (const auto& [e, lab] : sh.label)
        pts.push_back({depth(s, lab.first), depth(t, lab.second)});
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace omega
