#pragma once

// Generic finite presheaves (products, quotients), categories of elements,
// and small-category utilities: composition tables, nerves, components.

#include <functional>

#include "omega/presheaf.hpp"

namespace omega {

Elem decode_elem(const std::string& encoding);

// A presheaf described by its element sets at canonical shapes and the
// restriction action along morphisms of the tree category. Elements are
// opaque encodings.
struct FinitePresheaf {
    std::string name;
    std::function<std::vector<std::string>(const Tree& shape)> elements_at;
    // m : V -> U between canonical shapes, elem at U; result is at V.
    std::function<std::string(const TreeMorphism& m, const std::string& elem)> restrict;
};

FinitePresheaf presheaf_of(AmbientPtr a);
FinitePresheaf presheaf_of(std::shared_ptr<const SubPresheaf> x);
// Level-wise pairs with the diagonal action.
FinitePresheaf product_presheaf(const FinitePresheaf& a, const FinitePresheaf& b);

std::string encode_pair_elem(const std::string& a, const std::string& b);
std::pair<std::string, std::string> decode_pair_elem(const std::string& e);

// Degeneracy of a generic presheaf element: it is the image of some element
// under an elementary degeneracy of its shape.
bool finite_elem_degenerate(const FinitePresheaf& p, const Tree& shape,
                            const std::string& elem);

// Freeness of the shape-automorphism action over the given shapes.
bool finite_is_normal(const FinitePresheaf& p, const std::vector<Tree>& shapes);

// --- small categories -----------------------------------------------------------

struct SmallCategory {
    std::vector<std::string> objects;
    struct Mor {
        int src, dst;
        std::string key;
    };
    std::vector<Mor> morphisms;
    std::vector<int> identities;                         // per object
    std::map<std::pair<int, int>, int> composition;      // (g, f) -> g.f

    bool verify_axioms(std::string* why = nullptr) const;
    std::optional<int> terminal_object() const;
};

// Objects are pairs (shape with at most max_vertices vertices, element);
// morphisms over the presheaf are morphisms of shapes compatible with the
// restriction.
SmallCategory category_of_elements(const FinitePresheaf& p, int max_vertices,
                                   int max_arity);

int connected_components(const SmallCategory& c);

// Numbers of nondegenerate nerve simplices (chains of composable non-identity
// morphisms) per dimension, up to dim_bound.
std::vector<long long> nerve_counts(const SmallCategory& c, int dim_bound);

}  // namespace omega
