#pragma once

// Finite subpresheaf calculus. Elements are stored as edge labellings of
// canonical shapes: for a representable ambient the label of an edge is its
// image edge, for a tensor ambient it is the pair label "s|t". Restriction
// along any morphism is label composition, degeneracy is a unary vertex with
// equal labels on both sides, so one mechanism serves both ambients.

#include <memory>
#include <mutex>

#include "omega/shuffle.hpp"

namespace omega {

struct AmbientMismatch : TreeError {
    using TreeError::TreeError;
};
struct NotInnerEdge : TreeError {
    using TreeError::TreeError;
};
struct NotASubobject : TreeError {
    using TreeError::TreeError;
};
struct BoundsTooLarge : TreeError {
    using TreeError::TreeError;
};

// --- canonical shape registry --------------------------------------------------

struct ShapeData {
    Tree tree;  // canonical representative
    struct FaceInto {
        std::string src_code;        // canonical code of the face source
        std::vector<int> edge_map;   // canonical source edge index -> shape edge index
        FaceKind kind;
        std::string name;
    };
    std::vector<FaceInto> faces;
    std::vector<std::vector<int>> auts;  // edge permutations of the shape
};

// Global, thread-safe registry of canonical shapes keyed by canonical code.
const ShapeData& shape_data(const Tree& canonical_tree);
const ShapeData& shape_data(const std::string& code);

// --- elements -------------------------------------------------------------------

struct Elem {
    std::string shape;                 // canonical code
    std::vector<std::string> labels;   // by canonical shape edge index

    std::string encode() const;
    bool operator<(const Elem& o) const {
        return shape != o.shape ? shape < o.shape : labels < o.labels;
    }
    bool operator==(const Elem&) const = default;
};

bool elem_degenerate(const Elem& e);
// Unique nondegenerate element the given one degenerates from.
Elem elem_core(const Elem& e);
// Restriction along a face or automorphism given as an edge map
// (source edge index -> shape edge index).
Elem restrict_elem(const Elem& e, const std::string& src_code,
                   const std::vector<int>& edge_map);
// Element of a representable ambient given by a morphism into its tree.
Elem elem_of_morphism(const TreeMorphism& f);
// Element with explicitly named labels on an arbitrarily-named shape.
Elem elem_of_labelling(const Tree& shape, const std::map<std::string, std::string>& labels);

// --- ambients -------------------------------------------------------------------

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

class Ambient {
  public:
    enum class Kind { Representable, Tensor };

    static AmbientPtr representable(const Tree& t);
    // The tensor ambient is the union of its percolation schemes.
    static AmbientPtr tensor(const Tree& s, const Tree& t);

    Kind kind() const { return kind_; }
    const Tree& rep() const { return rep_; }
    const Tree& left() const { return left_; }
    const Tree& right() const { return right_; }
    const std::vector<ShuffleTree>& shuffle_list() const { return shuffles_; }
    const std::string& code() const { return code_; }

    // All η-element labels of the ambient.
    std::vector<std::string> eta_labels() const;
    // Every element at the given canonical shape, degenerate ones included.
    const std::vector<Elem>& elements_at(const Tree& canonical_shape) const;
    // Arity cap for shape scans: the largest vertex arity occurring in the
    // underlying trees.
    int scan_arity() const;

  private:
    Kind kind_ = Kind::Representable;
    Tree rep_, left_, right_;
    std::vector<ShuffleTree> shuffles_;
    std::string code_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::string, std::vector<Elem>> elem_cache_;
};

// True iff the labelling factors through the given percolation scheme; the
// edge map is forced by the labels, only validity is checked.
bool labelling_in_shuffle(const ShuffleTree& sh, const Tree& shape,
                          const std::vector<std::string>& labels);

// --- subpresheaves ----------------------------------------------------------------

inline constexpr long long kSaturationBudget = 200000;

class SubPresheaf {
  public:
    explicit SubPresheaf(AmbientPtr a) : ambient_(std::move(a)) {}

    const AmbientPtr& ambient() const { return ambient_; }
    // Nondegenerate elements, keyed by shape code.
    const std::map<std::string, std::set<std::string>>& elements() const { return elems_; }
    long long size() const;
    bool empty() const { return elems_.empty(); }

    bool contains(const Elem& e) const;
    std::set<std::string> eta_set() const;
    std::vector<Elem> all_elems() const;

    // Inserts the element's nondegenerate core together with its closure under
    // shape automorphisms and elementary-face restrictions.
    void insert_saturate(const Elem& e, long long budget = kSaturationBudget);

    bool subset_of(const SubPresheaf& y) const;
    bool operator==(const SubPresheaf& o) const {
        return ambient_->code() == o.ambient_->code() && elems_ == o.elems_;
    }

  private:
    AmbientPtr ambient_;
    std::map<std::string, std::set<std::string>> elems_;
};

SubPresheaf generated_by(AmbientPtr a, const std::vector<Elem>& gens,
                         long long budget = kSaturationBudget);
// The whole ambient as a subobject of itself (representable: the identity
// element; tensor: all percolation scheme tops).
SubPresheaf full_subpresheaf(AmbientPtr a, long long budget = kSaturationBudget);

SubPresheaf boundary(const Tree& t);
SubPresheaf inner_horn(const Tree& t, const std::string& inner_edge);
SubPresheaf segal_core(const Tree& t);

SubPresheaf union_(const std::vector<SubPresheaf>& xs);
SubPresheaf intersection(const std::vector<SubPresheaf>& xs);

// X full in Y: an element of Y lies in X iff all its η-faces do.
bool is_full(const SubPresheaf& x, const SubPresheaf& y);

struct ReprWitness {
    Tree object;      // tree representing the subobject
    Elem generator;
};
// Searches for a generator along which the Yoneda map is bijective; the
// bijectivity scan runs over the shapes stored in x plus all canonical shapes
// with at most shape_bound vertices.
std::optional<ReprWitness> is_representable(const SubPresheaf& x, int shape_bound = 3);

// Freeness of the shape-automorphism action on (relative) elements. Scans
// shapes up to one vertex beyond the largest stored shape by default.
bool is_normal(const SubPresheaf& x, int extra_vertices = 1);
bool is_normal_mono(const SubPresheaf& x, const SubPresheaf& y, int extra_vertices = 1);

// All subobjects of the representable presheaf of t.
std::vector<SubPresheaf> sieves(const Tree& t, long long budget = 1000000);

// --- shuffle subobjects -------------------------------------------------------------

Elem shuffle_top_elem(const ShuffleTree& sh);
// Materialized F_sigma (budgeted; large schemes exceed the budget by design,
// the verify sweeps then use the label-set calculus instead).
SubPresheaf shuffle_subobject(AmbientPtr a, const ShuffleTree& sh,
                              long long budget = kSaturationBudget);

// Bounded fullness scan of F_sigma inside its ambient: checks the fullness
// biconditional on every ambient element whose shape has at most max_vertices
// vertices.
bool shuffle_full_bounded(const AmbientPtr& a, const ShuffleTree& sh, int max_vertices,
                          std::string* fail_detail = nullptr);

// Contracts every edge of the scheme whose label is outside keep_labels,
// verifying each contracted edge is inner; this is the iterated-inner-face
// route to the representability of an intersection of shuffle subobjects.
std::optional<Tree> inner_face_contraction(const ShuffleTree& sh,
                                           const std::set<std::string>& keep_labels);

// --- cylinder maps -------------------------------------------------------------------

struct CylinderMaps {
    AmbientPtr ambient;           // tensor of the 1-simplex with x
    Tree interval;                // the 1-simplex tree used
    Tree object;                  // x
    // end(i, z): image of a representable element z of x under the i-th end
    // inclusion (i = 0 top end, 1 root end); project(e): second-coordinate
    // projection back to an element of x.
    Elem end(int i, const Elem& z) const;
    std::optional<Elem> project(const Elem& e) const;
};
CylinderMaps cylinder_maps(const Tree& x);

}  // namespace omega
