#pragma once

// Morphisms of the tree category: maps of the free coloured operads generated
// by trees. A morphism is determined by its edge map; every vertex of the
// source must land on an operation of the target operad, witnessed by a
// subtree with prescribed root and leaf set.

#include <memory>
#include <optional>
#include <vector>

#include "omega/tree.hpp"

namespace omega {

struct MorphismError : TreeError {
    using TreeError::TreeError;
};

struct SourceTargetMismatch : MorphismError {
    using MorphismError::MorphismError;
};

// An operation of the free operad of a tree: output edge, ordered pairwise
// distinct input edges, and the witnessing subtree (empty vertex list for
// identity operations).
struct OperadOp {
    int output = -1;
    std::vector<int> inputs;
    std::vector<int> witness_vertices;  // sorted

    bool operator==(const OperadOp&) const = default;
};

// Witness subtree with root `output` and leaf set exactly `input_set`;
// nullopt when no such subtree exists.
std::optional<std::vector<int>> witness_vertices(const Tree& t, int output,
                                                 const std::vector<int>& input_set_sorted);

// All operations of the free operad of t: identities plus one operation per
// (subtree, ordering of its leaves).
std::vector<OperadOp> operations_of(const Tree& t);

using TreePtr = std::shared_ptr<const Tree>;

class TreeMorphism {
  public:
    TreeMorphism() = default;

    const Tree& source() const { return *src_; }
    const Tree& target() const { return *tgt_; }
    const TreePtr& source_ptr() const { return src_; }
    const TreePtr& target_ptr() const { return tgt_; }

    int edge_image(int src_edge) const { return edge_map_[src_edge]; }
    const std::vector<int>& edge_map() const { return edge_map_; }
    const OperadOp& vertex_image(int src_vertex) const { return vertex_map_[src_vertex]; }

    bool is_identity() const;
    bool is_iso() const;  // bijective on edges
    bool is_mono() const; // injective on edges
    bool root_preserving() const {
        return edge_map_[source().root_index()] == target().root_index();
    }

    // Deterministic encoding of the edge map, "e->a;f->b;...". Used for
    // sorting, equality across enumerations, and element storage.
    std::string encode() const;

    bool operator==(const TreeMorphism& o) const {
        if (edge_map_ != o.edge_map_) return false;
        return (src_ == o.src_ || source() == o.source()) &&
               (tgt_ == o.tgt_ || target() == o.target());
    }

    static std::optional<TreeMorphism> try_make(TreePtr src, TreePtr tgt,
                                                std::vector<int> edge_map);

    friend TreeMorphism make_morphism(TreePtr, TreePtr, std::vector<int>);

  private:
    TreePtr src_, tgt_;
    std::vector<int> edge_map_;
    std::vector<OperadOp> vertex_map_;
};

// Builds and validates; throws MorphismError when some vertex has no
// compatible operation in the target.
TreeMorphism make_morphism(TreePtr src, TreePtr tgt, std::vector<int> edge_map);
TreeMorphism make_morphism_names(const Tree& src, const Tree& tgt,
                                 const std::map<std::string, std::string>& edge_map);

TreeMorphism identity_morphism(TreePtr t);
TreeMorphism identity_morphism(const Tree& t);

// Composition g after f; throws SourceTargetMismatch unless target(f) = source(g).
TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);

// Exhaustive duplicate-free enumeration, sorted by encode(). The parallel
// kernel splits on the image of the root edge; the serial reference is kept
// for testing and benchmarking. hom() picks the parallel path when OpenMP is
// available.
std::vector<TreeMorphism> hom(const Tree& s, const Tree& t);
std::vector<TreeMorphism> hom_serial(const Tree& s, const Tree& t);
std::vector<TreeMorphism> hom_parallel(const Tree& s, const Tree& t);

std::vector<TreeMorphism> automorphisms(const Tree& t);

// --- elementary faces and degeneracies ---------------------------------------

enum class FaceKind { Inner, OuterTop, OuterRoot, CorollaEdge };

struct Face {
    FaceKind kind;
    std::string name;  // contracted edge / chopped vertex / selected corolla edge
    TreeMorphism map;  // source is the smaller tree
};

// Complete list of elementary faces of t: inner faces contracting an inner
// edge, outer faces chopping a vertex with exactly one adjacent inner edge
// (trees with >= 2 vertices), and the edge maps from the one-edge tree when t
// is a corolla.
std::vector<Face> elementary_faces(const Tree& t);

// One elementary degeneracy per edge of t, collapsing an inserted unary vertex.
struct Degeneracy {
    std::string edge;   // edge of t that was split in the source
    TreeMorphism map;   // source has one extra unary vertex
};
std::vector<Degeneracy> elementary_degeneracies(const Tree& t);

// --- factorisation ------------------------------------------------------------

// f = face . iso . degeneracy, with the elementary chains kept as evidence.
struct FactorisationTriple {
    TreeMorphism degeneracy;
    TreeMorphism iso;
    TreeMorphism face;
    std::vector<TreeMorphism> degeneracy_chain;  // elementary degeneracies, first applied first
    std::vector<Face> face_chain;                // outermost last
    TreeMorphism recomposed() const;
};

FactorisationTriple factorize(const TreeMorphism& f);

// --- closure and décalage on morphisms ----------------------------------------

struct Closure {
    Tree tree;                // the closed tree
    TreeMorphism embedding;   // t -> cl(t), identity on edges
};
Closure closure(const Tree& t);

// Unique extension cl(f) : cl(S) -> cl(T); same edge map, cap vertices land on
// the unique nullary operations of the closed target.
TreeMorphism closure_morphism(const TreeMorphism& f);

struct Decalage {
    Tree tree;                 // D(t)
    TreeMorphism inclusion;    // u_t : t -> D(t), the outer face missing the new vertex
    TreeMorphism root_map;     // cl(eta) -> D(t), picks the new root edge
    std::string new_root_edge;
    std::string new_vertex;
};
// Requires a closed tree; throws NotClosedError otherwise.
Decalage decalage(const Tree& t);

// Unique root-preserving extension D(f) : D(S) -> D(T) for f between closed
// trees; throws NotClosedError otherwise.
TreeMorphism decalage_morphism(const TreeMorphism& f);

// Closure on morphisms for hot sweeps: caches the closed trees by identity so
// cl(f) reuses the edge map unchanged (the closure adds vertices only).
class ClosureCache {
  public:
    TreePtr closed(const TreePtr& t);
    TreeMorphism cl(const TreeMorphism& f);

  private:
    std::map<const Tree*, TreePtr> cache_;
};

// --- serialization -------------------------------------------------------------

std::string morphism_to_json(const TreeMorphism& f);
TreeMorphism morphism_from_json(const std::string& json_text);

}  // namespace omega
