#ifndef SYMCOVER_COHOMOLOGY_HPP
#define SYMCOVER_COHOMOLOGY_HPP

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcover/charmap.hpp"
#include "symcover/gf2.hpp"
#include "symcover/simplicial.hpp"

// Cohomological invariants of real toric spaces M = RZ_K / ker(lambda):
// rational Betti numbers through the weight decomposition
//     H^i(M;Q) = ⊕_{omega in row(lambda)} H~^{i-1}(K_omega;Q),
// mod 2 Betti numbers through the h-vector, and the degree-one squaring rank
// of the mod 2 cohomology ring.

namespace symcover {

struct InternalInconsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Memoizes reduced Betti vectors of full subcomplexes of a fixed complex,
/// keyed by the weight's support mask.  Shared across profile computations.
class SubcomplexBettiCache {
public:
    explicit SubcomplexBettiCache(const SimplicialComplex& k) : k_(&k) {}

    const ReducedBetti& get(std::uint64_t omega);
    const SimplicialComplex& complex() const { return *k_; }

private:
    const SimplicialComplex* k_;
    std::unordered_map<std::uint64_t, ReducedBetti> cache_;
};

struct HochsterProfile {
    // weight -> reduced Betti vector of K_omega, in enumeration order
    std::vector<std::pair<Gf2Vector, ReducedBetti>> entries;
    std::array<long long, 5> manifold_betti{};  // b_0..b_4 of M

    std::vector<std::pair<Gf2Vector, ReducedBetti>> nonzero_entries() const;
};

/// Iterates row(lambda) and sums reduced Betti vectors of the K_omega.
/// Preconditions: lambda characteristic over K, rank(lambda) <= 24.
HochsterProfile hochster_profile(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                 SubcomplexBettiCache* cache = nullptr);

/// Betti numbers of the real moment-angle manifold (lambda = identity):
/// the profile runs over the full power set of the vertex set.  m <= 14.
std::array<long long, 5> rz_betti(const SimplicialComplex& k);

/// b_1(RZ_K) alone, by counting connected components of induced subgraphs.
/// Works for m <= 20.
long long rz_b1(const SimplicialComplex& k);

/// Mod 2 Betti numbers b_i(M;Z_2) = h_i of the dual simple polytope.
std::vector<long long> mod2_betti(const SimplicialComplex& k);

/// Euler characteristic of any small cover over the 3-sphere K, computed two
/// ways (alternating h-sum and f_1 - 5 f_0 + 16); throws on disagreement.
long long euler_characteristic(const SimplicialComplex& k);

struct SquaringRank {
    int dim_h1 = 0;  // = h_1
    int dim_h2 = 0;  // = h_2
    int rank = 0;    // rank of x -> x^2 : H^1 -> H^2 over Z_2
};

/// Degree <= 2 slice of H^*(M;Z_2) = Z_2[v_1..v_m]/(I_K + J_lambda) with the
/// rank of the (linear, char 2) squaring map.  Internal dimension checks
/// against the h-vector raise InternalInconsistencyError on failure.
SquaringRank squaring_rank(const SimplicialComplex& k, const Gf2Matrix& lambda);

}  // namespace symcover

#endif
