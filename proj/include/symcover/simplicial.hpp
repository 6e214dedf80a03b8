#ifndef SYMCOVER_SIMPLICIAL_HPP
#define SYMCOVER_SIMPLICIAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcover/gf2.hpp"

// Finite simplicial complexes on vertex sets {0,...,m-1}, stored as facet
// bitmasks.  Everything here is exact: rational homology ranks come from
// fraction-free integer elimination, never floating point.

namespace symcover {

struct NonPureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Facets are deduplicated, containment-normalized and sorted
    /// lexicographically (as ascending vertex lists).
    static SimplicialComplex from_masks(int m, std::vector<std::uint64_t> facets);
    static SimplicialComplex from_faces(int m, const std::vector<std::vector<int>>& facets);

    static SimplicialComplex boundary_of_simplex(int n);       // ∂Δ^n on n+1 vertices
    static SimplicialComplex polygon_dual(int q);              // ∂P_q*: the q-cycle
    static SimplicialComplex two_points();                     // S^0 = ∂I*
    /// ∂(P_{m1} x P_{m2})*: vertices 0..m1-1 are the first polygon block.
    static SimplicialComplex polygon_product_dual(int m1, int m2);

    int m() const { return m_; }
    int dim() const { return dim_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }

    bool has_face(std::uint64_t sigma) const;
    bool has_face(std::span<const int> sigma) const;

    /// Edge mask per vertex: bit j of adjacency(i) means {i,j} is an edge.
    const std::vector<std::uint64_t>& adjacency() const { return adjacency_; }
    std::uint64_t vertex_support() const { return vertex_support_; }
    long long face_count(int d) const;  // number of d-faces, d = -1..dim

    bool operator==(const SimplicialComplex& other) const = default;

private:
    int m_ = 0;
    int dim_ = -1;
    std::vector<std::uint64_t> facets_;
    std::vector<std::uint64_t> adjacency_;
    std::uint64_t vertex_support_ = 0;

    void build_adjacency();
};

struct InducedSubcomplex {
    SimplicialComplex complex;      // re-indexed to 0..|omega|-1
    std::vector<int> vertex_map;    // new index -> original vertex
};

/// Full subcomplex K_omega: the faces of K contained in omega.
InducedSubcomplex full_subcomplex(const SimplicialComplex& k, std::uint64_t omega);
InducedSubcomplex full_subcomplex(const SimplicialComplex& k, const Gf2Vector& omega);

struct FaceCensus {
    std::vector<long long> f_vector;                        // f_{-1}, f_0, ..., f_dim
    std::map<int, std::vector<std::uint64_t>> missing_faces;  // cardinality -> minimal non-faces
    bool flag = false;
};

/// Minimal non-faces up to cardinality dim+2; flag iff all have cardinality 2.
FaceCensus missing_face_census(const SimplicialComplex& k);

/// Reduced rational Betti numbers (b~_{-1}, b~_0, b~_1, b~_2, b~_3).
/// b~_{-1} = 1 exactly for the empty complex.  Requires dim <= 3.
using ReducedBetti = std::array<long long, 5>;
ReducedBetti reduced_betti_q(const SimplicialComplex& k);

struct FHVectors {
    std::vector<long long> f;  // f_{-1}..f_{n-1}
    std::vector<long long> h;  // h_0..h_n
};

/// f- and h-vector of a pure (n-1)-complex via the binomial transform.
FHVectors f_and_h_vector(const SimplicialComplex& k);

/// q >= 3 when K is exactly a q-cycle graph, std::nullopt otherwise.
std::optional<int> is_induced_cycle(const SimplicialComplex& k);

/// Simplicial join; the second factor's vertices are shifted by k1.m().
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// Connected sum along the facet sigma1 of k1 and sigma2 of k2; sigma2[i] is
/// glued to sigma1[i].  Vertices of k1 keep their labels.
SimplicialComplex connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                std::span<const int> sigma1, std::span<const int> sigma2);

struct PolygonProductRecognition {
    int m1 = 0;
    int m2 = 0;                 // m1 <= m2
    std::uint64_t factor1 = 0;  // vertex mask of the m1-cycle
    std::uint64_t factor2 = 0;
};

/// Detects K = join of two induced cycles (lengths >= 3), i.e. ∂(P_{m1} x P_{m2})*.
std::optional<PolygonProductRecognition> recognize_polygon_product_dual(const SimplicialComplex& k);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Certifies a closed 3-manifold complex with the rational homology of S^3
/// (pure, pseudomanifold, connected, surface vertex links, S^3 Betti numbers).
/// PL-sphericity itself is not decided.
ValidationReport validate_closed_3sphere_like(const SimplicialComplex& k);

/// The dimension-2 analogue: a closed surface with S^2 homology.
ValidationReport validate_closed_2sphere_like(const SimplicialComplex& k);

}  // namespace symcover

#endif
