#pragma once

// Percolation schemes: the shuffle decomposition of a tensor product of two
// trees, and the simplicial (m,n)-shuffles of a product of simplices.

#include <set>

#include "omega/morphism.hpp"
#include "omega/tree.hpp"

namespace omega {

// A tree whose edges are labelled by pairs (edge of S, edge of T); edge names
// are "s|t" so labels are readable off the names and are pairwise distinct.
// Vertices are S-type (a vertex of S applied at a fixed T-edge) or T-type.
struct ShuffleTree {
    Tree tree;
    std::map<std::string, std::pair<std::string, std::string>> label;
    std::map<std::string, char> vertex_tag;  // 'S' or 'T'
    std::string code;                        // canonical labelled code, used for dedup/sorting
};

std::string pair_label(const std::string& s_edge, const std::string& t_edge);
std::pair<std::string, std::string> split_label(const std::string& label);

// All percolation schemes of (s, t): grow from the root pair (root s, root t);
// at an edge (a, b), branch on applying the S-vertex above a or the T-vertex
// above b; an edge whose coordinates are both leaves terminates. Exhaustive
// and duplicate-free, sorted by labelled code. The parallel kernel expands a
// frontier of partial schemes and finishes them concurrently; the serial
// recursion is the reference.
std::vector<ShuffleTree> shuffles(const Tree& s, const Tree& t);
std::vector<ShuffleTree> shuffles_serial(const Tree& s, const Tree& t);
std::vector<ShuffleTree> shuffles_parallel(const Tree& s, const Tree& t);

// --- simplicial shuffles ------------------------------------------------------

struct EmptyIndexSet : TreeError {
    using TreeError::TreeError;
};

// A maximal chain in the grid poset [m] x [n] from (0,0) to (m,n), encoded as
// the sequence of unit steps (false = first coordinate, true = second).
struct SimplicialShuffle {
    int m = 0, n = 0;
    std::vector<bool> steps;  // length m+n

    std::vector<std::pair<int, int>> points() const;
};

std::vector<SimplicialShuffle> simplex_shuffles(int m, int n);

struct PosetIntersection {
    std::vector<std::pair<int, int>> points;  // sorted
    bool nonempty = false;
    bool contains_origin = false;
    bool linear = false;  // every pair of points comparable in the product order
};

PosetIntersection simplex_shuffle_intersection(const std::vector<SimplicialShuffle>& J);

// Lattice path of a percolation scheme of two linear trees, in the coordinates
// of the grid poset (distance from the root in each factor).
std::vector<std::pair<int, int>> linear_shuffle_points(const ShuffleTree& sh,
                                                       const Tree& s, const Tree& t);

// Canonical code of a tree with its edge names taken as labels (rigid:
// equality means label-preserving isomorphism).
std::string labelled_tree_code(const Tree& t);

}  // namespace omega
