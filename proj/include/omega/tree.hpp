#pragma once

// Finite rooted non-planar trees with named edges and vertices: the objects
// of the tree category. Edges are oriented toward the root; every vertex has
// one output edge (below it) and an unordered set of input edges (above it).
// Leaves are edges with no vertex on top, the root is the unique edge with no
// vertex underneath.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace omega {

struct TreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotClosedError : TreeError {
    using TreeError::TreeError;
};

struct Vertex {
    std::string name;
    std::string output;
    std::vector<std::string> inputs;  // kept sorted; input sets are unordered

    bool operator==(const Vertex&) const = default;
};

class Tree {
  public:
    // Validates all invariants (single producer/consumer per edge, root free,
    // connected acyclic incidence) and builds the index structures.
    static Tree make(std::vector<std::string> edges, std::string root,
                     std::vector<Vertex> vertices);

    const std::vector<std::string>& edges() const { return edges_; }
    const std::string& root() const { return root_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }

    int edge_index(const std::string& name) const;
    bool has_edge(const std::string& name) const;
    const std::string& edge_name(int i) const { return edges_[i]; }
    int root_index() const { return root_ix_; }

    // Vertex whose output is the given edge (sits on top of it); -1 for leaves.
    int producer_of(int edge_ix) const { return producer_[edge_ix]; }
    // Vertex having the given edge among its inputs; -1 for the root.
    int consumer_of(int edge_ix) const { return consumer_[edge_ix]; }

    const Vertex& vertex(int i) const { return vertices_[i]; }
    int vertex_index(const std::string& name) const;
    // Input edge indices of a vertex, sorted.
    const std::vector<int>& vertex_inputs(int i) const { return vertex_inputs_[i]; }
    int vertex_output(int i) const { return vertex_output_[i]; }

    std::vector<std::string> leaves() const;
    bool is_leaf(int edge_ix) const { return producer_[edge_ix] < 0; }
    int max_arity() const;

    // Edges weakly above e (e itself plus everything reachable upward).
    std::vector<int> upset(int edge_ix) const;
    // True when every maximal path above the edge ends in a nullary vertex,
    // i.e. the unique nullary operation with this output exists.
    bool closable_above(int edge_ix) const;

    bool operator==(const Tree& o) const {
        return edges_ == o.edges_ && root_ == o.root_ && vertices_ == o.vertices_;
    }

  private:
    std::vector<std::string> edges_;
    std::string root_;
    std::vector<Vertex> vertices_;

    // derived
    std::map<std::string, int> edge_ix_;
    std::map<std::string, int> vertex_ix_;
    std::vector<int> producer_, consumer_;
    std::vector<std::vector<int>> vertex_inputs_;
    std::vector<int> vertex_output_;
    int root_ix_ = -1;
};

// --- basic constructors ---------------------------------------------------

Tree eta();
Tree corolla(int n);
Tree linear_tree(int n);

// --- isomorphism and enumeration -------------------------------------------

// Total deterministic encoding: equal codes iff the trees are isomorphic
// (AHU-style, child codes sorted at every vertex; names are ignored).
std::string canonical_code(const Tree& t);

struct CanonicalForm {
    Tree tree;                                  // canonical names e0,e1,... / v0,v1,...
    std::map<std::string, std::string> edge_map;   // old edge -> canonical edge
    std::map<std::string, std::string> vertex_map; // old vertex -> canonical vertex
};

// Renames a tree to its canonical representative. Two isomorphic trees yield
// literally identical canonical trees.
CanonicalForm canonical_form(const Tree& t);

// All isomorphism classes with at most max_vertices vertices and arity at
// most max_arity, as canonical representatives sorted by canonical code.
// Always contains the one-edge tree.
std::vector<Tree> enumerate_trees(int max_vertices, int max_arity);

// --- closed trees -----------------------------------------------------------

bool is_closed(const Tree& t);

// Caps every leaf l with a nullary vertex named l+".cap". Edges are unchanged,
// so the embedding into the closure is the identity edge map. Closure of a
// closed tree is the tree itself.
Tree closure_tree(const Tree& t);

// Adds a new root edge (old root + ".dec") with a unary vertex under the old
// root. Object-level part of the décalage; rejects trees with leaves.
struct DecalageTree {
    Tree tree;
    std::string new_root_edge;
    std::string new_vertex;
};
DecalageTree decalage_tree(const Tree& t);

// --- I/O --------------------------------------------------------------------

// Compact term syntax: a bare name is a leaf, name[vertex](child,...) puts a
// vertex on top of the edge. Example: a[u](b[v](c,d), e[w](), f).
Tree parse_term(const std::string& term);
std::string to_term(const Tree& t);

std::string to_json(const Tree& t);
Tree tree_from_json(const std::string& json_text);

std::string to_dot(const Tree& t);

}  // namespace omega
