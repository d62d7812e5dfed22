#include "omega/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace omega {

Tree Tree::make(std::vector<std::string> edges, std::string root,
                std::vector<Vertex> vertices) {
    Tree t;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw TreeError("duplicate edge name");
    for (auto& v : vertices) std::sort(v.inputs.begin(), v.inputs.end());
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.name < b.name; });
    t.edges_ = std::move(edges);
    t.root_ = std::move(root);
    t.vertices_ = std::move(vertices);

    const int ne = t.edge_count();
    for (int i = 0; i < ne; ++i) t.edge_ix_[t.edges_[i]] = i;
    if (!t.edge_ix_.count(t.root_)) throw TreeError("root is not an edge");
    t.root_ix_ = t.edge_ix_[t.root_];

    t.producer_.assign(ne, -1);
    t.consumer_.assign(ne, -1);
    t.vertex_inputs_.resize(t.vertices_.size());
    t.vertex_output_.resize(t.vertices_.size());
    for (int vi = 0; vi < t.vertex_count(); ++vi) {
        const Vertex& v = t.vertices_[vi];
        if (t.vertex_ix_.count(v.name)) throw TreeError("duplicate vertex name");
        t.vertex_ix_[v.name] = vi;
        auto oit = t.edge_ix_.find(v.output);
        if (oit == t.edge_ix_.end()) throw TreeError("vertex output is not an edge");
        if (t.producer_[oit->second] >= 0)
            throw TreeError("edge is the output of two vertices");
        t.producer_[oit->second] = vi;
        t.vertex_output_[vi] = oit->second;
        if (std::adjacent_find(v.inputs.begin(), v.inputs.end()) != v.inputs.end())
            throw TreeError("repeated input edge");
        for (const auto& in : v.inputs) {
            auto iit = t.edge_ix_.find(in);
            if (iit == t.edge_ix_.end()) throw TreeError("vertex input is not an edge");
            if (t.consumer_[iit->second] >= 0)
                throw TreeError("edge is an input of two vertices");
            t.consumer_[iit->second] = vi;
            t.vertex_inputs_[vi].push_back(iit->second);
        }
    }
    if (t.consumer_[t.root_ix_] >= 0) throw TreeError("root is an input of a vertex");

    // Connectivity and acyclicity: walking up from the root must reach every
    // edge and every vertex exactly once.
    std::vector<bool> eseen(ne, false);
    std::vector<bool> vseen(t.vertices_.size(), false);
    std::vector<int> stack = {t.root_ix_};
    int ecount = 0, vcount = 0;
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        if (eseen[e]) throw TreeError("cycle in incidence graph");
        eseen[e] = true;
        ++ecount;
        int p = t.producer_[e];
        if (p >= 0) {
            if (vseen[p]) throw TreeError("cycle in incidence graph");
            vseen[p] = true;
            ++vcount;
            for (int in : t.vertex_inputs_[p]) stack.push_back(in);
        }
    }
    if (ecount != ne || vcount != t.vertex_count())
        throw TreeError("incidence graph is not connected");
    return t;
}

int Tree::edge_index(const std::string& name) const {
    auto it = edge_ix_.find(name);
    if (it == edge_ix_.end()) throw TreeError("unknown edge: " + name);
    return it->second;
}

bool Tree::has_edge(const std::string& name) const { return edge_ix_.count(name) > 0; }

int Tree::vertex_index(const std::string& name) const {
    auto it = vertex_ix_.find(name);
    if (it == vertex_ix_.end()) throw TreeError("unknown vertex: " + name);
    return it->second;
}

std::vector<std::string> Tree::leaves() const {
    std::vector<std::string> out;
    for (int i = 0; i < edge_count(); ++i)
        if (producer_[i] < 0) out.push_back(edges_[i]);
    return out;
}

int Tree::max_arity() const {
    int m = 0;
    for (const auto& v : vertices_) m = std::max(m, static_cast<int>(v.inputs.size()));
    return m;
}

std::vector<int> Tree::upset(int edge_ix) const {
    std::vector<int> out;
    std::vector<int> stack = {edge_ix};
    while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        out.push_back(e);
        int p = producer_[e];
        if (p >= 0)
            for (int in : vertex_inputs_[p]) stack.push_back(in);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Tree::closable_above(int edge_ix) const {
    for (int e : upset(edge_ix))
        if (producer_[e] < 0) return false;
    return true;
}

// --- constructors -----------------------------------------------------------

Tree eta() { return Tree::make({"e"}, "e", {}); }

Tree corolla(int n) {
    if (n < 0) throw TreeError("corolla arity must be >= 0");
    std::vector<std::string> edges = {"r"};
    std::vector<std::string> ins;
    for (int i = 0; i < n; ++i) {
        edges.push_back("l" + std::to_string(i + 1));
        ins.push_back("l" + std::to_string(i + 1));
    }
    return Tree::make(edges, "r", {Vertex{"v", "r", ins}});
}

Tree linear_tree(int n) {
    if (n < 0) throw TreeError("linear tree length must be >= 0");
    std::vector<std::string> edges;
    for (int i = 0; i <= n; ++i) edges.push_back(std::to_string(i));
    std::vector<Vertex> vs;
    for (int i = 1; i <= n; ++i)
        vs.push_back(Vertex{"v" + std::to_string(i), std::to_string(i),
                            {std::to_string(i - 1)}});
    return Tree::make(edges, std::to_string(n), vs);
}

// --- canonical form ---------------------------------------------------------

namespace {

std::string edge_code(const Tree& t, int e) {
    int p = t.producer_of(e);
    if (p < 0) return "*";
    std::vector<std::string> kid;
    for (int in : t.vertex_inputs(p)) kid.push_back(edge_code(t, in));
    std::sort(kid.begin(), kid.end());
    std::string s = "(";
    for (auto& k : kid) s += k;
    s += ")";
    return s;
}

}  // namespace

std::string canonical_code(const Tree& t) { return edge_code(t, t.root_index()); }

CanonicalForm canonical_form(const Tree& t) {
    CanonicalForm cf;
    // Deterministic traversal: children ordered by (code, original name).
    std::vector<std::string> new_edges;
    std::vector<Vertex> new_vertices;
    std::map<std::string, std::string> emap, vmap;
    int ecount = 0, vcount = 0;
    std::function<std::string(int)> walk = [&](int e) -> std::string {
        std::string ename = "e" + std::to_string(ecount++);
        emap[t.edge_name(e)] = ename;
        new_edges.push_back(ename);
        int p = t.producer_of(e);
        if (p >= 0) {
            std::string vname = "v" + std::to_string(vcount++);
            vmap[t.vertex(p).name] = vname;
            std::vector<std::pair<std::string, int>> kids;
            for (int in : t.vertex_inputs(p))
                kids.push_back({edge_code(t, in), in});
            std::sort(kids.begin(), kids.end(), [&](const auto& a, const auto& b) {
                if (a.first != b.first) return a.first < b.first;
                return t.edge_name(a.second) < t.edge_name(b.second);
            });
            std::vector<std::string> ins;
            for (auto& [code, in] : kids) ins.push_back(walk(in));
            new_vertices.push_back(Vertex{vname, ename, ins});
        }
        return ename;
    };
    std::string new_root = walk(t.root_index());
    cf.tree = Tree::make(new_edges, new_root, new_vertices);
    cf.edge_map = std::move(emap);
    cf.vertex_map = std::move(vmap);
    return cf;
}

// --- enumeration ------------------------------------------------------------

namespace {

// Structure terms: "" is a bare edge, otherwise a sorted multiset of child
// structures under a root vertex. Generates one term per isomorphism class.
struct StructGen {
    int max_arity;
    // memo[v] = all structures with exactly v vertices (as term strings of a
    // little private grammar, decoded when materializing).
    std::map<int, std::vector<std::vector<std::string>>> multisets_memo;

    // All structures with exactly nv vertices. A structure is encoded as the
    // code string produced by materializing; we store child lists instead.
    std::map<int, std::vector<std::string>> memo;

    const std::vector<std::string>& structures(int nv) {
        auto it = memo.find(nv);
        if (it != memo.end()) return it->second;
        std::vector<std::string> out;
        if (nv == 0) {
            out.push_back("*");
        } else {
            // Root vertex with arity k, children structures totalling nv-1
            // vertices, as a sorted multiset.
            for (int k = 0; k <= max_arity; ++k) {
                std::vector<std::string> cur;
                gen_children(k, nv - 1, "", cur, out);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        memo[nv] = std::move(out);
        return memo[nv];
    }

    // Choose k child structures with given total vertex count; children kept
    // sorted to avoid generating the same multiset twice.
    void gen_children(int remaining, int budget, const std::string& min_code,
                      std::vector<std::string>& cur, std::vector<std::string>& out) {
        if (remaining == 0) {
            if (budget != 0) return;
            std::string s = "(";
            for (auto& c : cur) s += c;
            s += ")";
            out.push_back(s);
            return;
        }
        for (int nv = 0; nv <= budget; ++nv) {
            for (const auto& child : structures(nv)) {
                if (child < min_code) continue;
                // Remaining children must each use >= 0 vertices; fine.
                cur.push_back(child);
                gen_children(remaining - 1, budget - nv, child, cur, out);
                cur.pop_back();
            }
        }
    }
};

// Materialize a code string (the same grammar canonical_code emits) as a tree.
Tree tree_of_code(const std::string& code) {
    int ecount = 0, vcount = 0;
    std::vector<std::string> edges;
    std::vector<Vertex> vertices;
    size_t pos = 0;
    std::function<std::string()> walk = [&]() -> std::string {
        std::string ename = "e" + std::to_string(ecount++);
        edges.push_back(ename);
        if (pos < code.size() && code[pos] == '*') {
            ++pos;
            return ename;
        }
        if (pos >= code.size() || code[pos] != '(') throw TreeError("bad code");
        ++pos;  // '('
        std::string vname = "v" + std::to_string(vcount++);
        std::vector<std::string> ins;
        while (pos < code.size() && code[pos] != ')') ins.push_back(walk());
        if (pos >= code.size()) throw TreeError("bad code");
        ++pos;  // ')'
        vertices.push_back(Vertex{vname, ename, ins});
        return ename;
    };
    std::string root = walk();
    return Tree::make(edges, root, vertices);
}

}  // namespace

std::vector<Tree> enumerate_trees(int max_vertices, int max_arity) {
    if (max_vertices < 0 || max_arity < 0) throw TreeError("bounds must be >= 0");
    StructGen gen{max_arity};
    std::vector<std::string> codes;
    for (int nv = 0; nv <= max_vertices; ++nv) {
        const auto& s = gen.structures(nv);
        codes.insert(codes.end(), s.begin(), s.end());
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Tree> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(tree_of_code(c));
    return out;
}

// --- closed trees -----------------------------------------------------------

bool is_closed(const Tree& t) {
    for (int i = 0; i < t.edge_count(); ++i)
        if (t.is_leaf(i)) return false;
    return true;
}

Tree closure_tree(const Tree& t) {
    std::vector<Vertex> vs = t.vertices();
    for (const auto& l : t.leaves()) vs.push_back(Vertex{l + ".cap", l, {}});
    return Tree::make(t.edges(), t.root(), vs);
}

DecalageTree decalage_tree(const Tree& t) {
    if (!is_closed(t)) throw NotClosedError("decalage requires a closed tree");
    std::string new_edge = t.root() + ".dec";
    while (t.has_edge(new_edge)) new_edge += ".dec";
    std::string new_vertex = new_edge + ".v";
    std::vector<std::string> edges = t.edges();
    edges.push_back(new_edge);
    std::vector<Vertex> vs = t.vertices();
    vs.push_back(Vertex{new_vertex, new_edge, {t.root()}});
    return DecalageTree{Tree::make(edges, new_edge, vs), new_edge, new_vertex};
}

// --- term syntax ------------------------------------------------------------

namespace {

struct TermParser {
    const std::string& s;
    size_t pos = 0;

    explicit TermParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                s[pos] == '.' || s[pos] == '\'' || s[pos] == '-'))
            ++pos;
        if (pos == start) throw TreeError("expected a name in term at position " +
                                          std::to_string(pos));
        return s.substr(start, pos - start);
    }

    // Parses one Edge production; collects edges/vertices.
    std::string edge(std::vector<std::string>& edges, std::vector<Vertex>& vertices) {
        std::string ename = name();
        edges.push_back(ename);
        skip_ws();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            std::string vname = name();
            skip_ws();
            if (pos >= s.size() || s[pos] != ']') throw TreeError("expected ']' in term");
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != '(') throw TreeError("expected '(' in term");
            ++pos;
            std::vector<std::string> ins;
            skip_ws();
            if (pos < s.size() && s[pos] != ')') {
                ins.push_back(edge(edges, vertices));
                skip_ws();
                while (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    ins.push_back(edge(edges, vertices));
                    skip_ws();
                }
            }
            if (pos >= s.size() || s[pos] != ')') throw TreeError("expected ')' in term");
            ++pos;
            vertices.push_back(Vertex{vname, ename, ins});
        }
        return ename;
    }
};

}  // namespace

Tree parse_term(const std::string& term) {
    TermParser p(term);
    std::vector<std::string> edges;
    std::vector<Vertex> vertices;
    std::string root = p.edge(edges, vertices);
    p.skip_ws();
    if (p.pos != term.size()) throw TreeError("trailing characters in term");
    return Tree::make(edges, root, vertices);
}

namespace {

void term_of_edge(const Tree& t, int e, std::string& out) {
    out += t.edge_name(e);
    int p = t.producer_of(e);
    if (p < 0) return;
    out += "[" + t.vertex(p).name + "](";
    const auto& ins = t.vertex_inputs(p);
    for (size_t i = 0; i < ins.size(); ++i) {
        if (i) out += ", ";
        term_of_edge(t, ins[i], out);
    }
    out += ")";
}

}  // namespace

std::string to_term(const Tree& t) {
    std::string out;
    term_of_edge(t, t.root_index(), out);
    return out;
}

// --- JSON -------------------------------------------------------------------

std::string to_json(const Tree& t) {
    nlohmann::json j;
    j["edges"] = t.edges();
    j["root"] = t.root();
    auto vs = nlohmann::json::array();
    for (const auto& v : t.vertices())
        vs.push_back({{"name", v.name}, {"out", v.output}, {"in", v.inputs}});
    j["vertices"] = vs;
    return j.dump();
}

Tree tree_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<std::string> edges = j.at("edges").get<std::vector<std::string>>();
    std::string root = j.at("root").get<std::string>();
    std::vector<Vertex> vs;
    for (const auto& vj : j.at("vertices"))
        vs.push_back(Vertex{vj.at("name").get<std::string>(),
                            vj.at("out").get<std::string>(),
                            vj.at("in").get<std::vector<std::string>>()});
    return Tree::make(edges, root, vs);
}

// --- DOT --------------------------------------------------------------------

std::string to_dot(const Tree& t) {
    // Tree edges become graph edges; tree vertices become nodes. Leaf tops and
    // the root bottom get invisible endpoints.
    std::ostringstream os;
    os << "graph tree {\n  rankdir=BT;\n";
    for (const auto& v : t.vertices())
        os << "  \"" << v.name << "\" [shape=point, width=0.12];\n";
    int anon = 0;
    auto endpoint_above = [&](int e) -> std::string {
        int p = t.producer_of(e);
        if (p >= 0) return t.vertex(p).name;
        std::string n = "_leaf" + std::to_string(anon++);
        os << "  \"" << n << "\" [style=invis, shape=point];\n";
        return n;
    };
    std::string rootpt = "_root";
    os << "  \"" << rootpt << "\" [style=invis, shape=point];\n";
    for (int e = 0; e < t.edge_count(); ++e) {
        int c = t.consumer_of(e);
        std::string below = (c >= 0) ? t.vertex(c).name : rootpt;
        os << "  \"" << below << "\" -- \"" << endpoint_above(e) << "\" [label=\""
           << t.edge_name(e) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace omega
