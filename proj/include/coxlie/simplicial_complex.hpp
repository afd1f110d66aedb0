#pragma once

// Abstract simplicial complexes on a labeled vertex set {1..m}, with faces
// stored as bitmasks (bit i-1 = vertex i).  Every label in 1..m counts as a
// vertex of the ambient complex; full subcomplexes keep the original labels,
// so their ground set can be any subset of {1..m}.

#include <cstdint>
#include <utility>
#include <vector>

namespace coxlie {

using FaceMask = std::uint32_t;

class SimplicialComplex {
public:
    // The complex with no vertices at all (its only face is the empty one).
    SimplicialComplex() = default;

    int m() const { return m_; }
    FaceMask ground() const { return ground_; }
    int vertex_count() const;
    bool is_empty() const { return ground_ == 0; }
    // Dimension of the complex; -1 if there are no vertices.
    int dim() const;

    // Nonempty faces, sorted by (cardinality, mask value).
    const std::vector<FaceMask>& faces() const { return faces_; }
    std::vector<FaceMask> faces_of_card(int card) const;
    bool has_face(FaceMask f) const;

    std::vector<std::pair<int, int>> edges() const;  // pairs (i, j), i < j

    bool operator==(const SimplicialComplex&) const = default;

    // Internal: faces must be closed, sorted, and restricted to ground.
    SimplicialComplex(int m, FaceMask ground, std::vector<FaceMask> faces)
        : m_(m), ground_(ground), faces_(std::move(faces)) {}

private:
    int m_ = 0;
    FaceMask ground_ = 0;
    std::vector<FaceMask> faces_;
};

// Downward closure of the given faces plus all singletons 1..m.
// Vertex labels must lie in 1..m; m must be between 0 and 31.
SimplicialComplex make_complex(int m, const std::vector<std::vector<int>>& generating_faces);

// All cliques of the graph become faces (m <= 24 to keep the mask sweep sane).
SimplicialComplex flag_complex_of_graph(int m, const std::vector<std::pair<int, int>>& edges);

// Faces of k contained in j; labels are preserved.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, FaceMask j);

// Vertex sets of the connected components of the 1-skeleton, sorted by their
// smallest vertex.
std::vector<FaceMask> connected_components(const SimplicialComplex& k);

// Every simplicial complex on the labeled vertex set {1..m} (all singletons
// present, faces downward closed).  Exhaustive, so capped at m <= 4.
std::vector<SimplicialComplex> all_complexes(int m);

// True if every set of pairwise adjacent vertices is a face.
bool is_flag(const SimplicialComplex& k);

FaceMask vertex_mask(const std::vector<int>& vertices);
std::vector<int> mask_vertices(FaceMask f);  // ascending labels

}  // namespace coxlie
