#ifndef SYMCOVER_ENUMERATION_HPP
#define SYMCOVER_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symcover/obstructions.hpp"

// Isomorph-free enumeration of characteristic matrices over a fixed K up to
// D–J equivalence.  Canonicity is enforced during the search: scanning
// columns left to right, each rank-increasing column must be the next
// standard basis vector, so exactly the RREF representative of every class
// is generated, with no post-hoc deduplication.

namespace symcover {

enum class EnumFilter {
    None,
    Orientable,
    CSymplectic,
    SymplecticProduct,  // recognized product of polygons with chi_1, chi_2 in row(lambda)
    FactorCompatible,   // the §5 Definition (three delta-pairings at (4,4))
};

EnumFilter parse_filter(const std::string& name);  // orientable | csymplectic | symplectic | ...

struct SearchConfig {
    int target_rank = 4;
    EnumFilter filter = EnumFilter::None;
    int jobs = 1;
    bool count_only = false;
};

struct EnumerationResult {
    long long count = 0;
    // canonical matrices as column-code sequences, sorted; empty if count_only
    std::vector<std::vector<std::uint32_t>> matrices;
};

/// All D–J classes of characteristic maps over K passing the filter.
/// Deterministic: the output is independent of the job count.
EnumerationResult enumerate_char_maps(const SimplicialComplex& k, const SearchConfig& config);

/// Independent oracle: every column assignment in (Z_2^n \ 0)^m, filtered by
/// the characteristic condition and deduplicated by RREF.  Only for m <= 7.
long long brute_force_class_count(const SimplicialComplex& k, int target_rank = 4);

/// The disjoint work units at the given prefix depth: partial column
/// assignments whose subtree results partition the full search.
std::vector<std::vector<std::uint32_t>> partition_search(const SimplicialComplex& k,
                                                         const SearchConfig& config,
                                                         int prefix_depth);

}  // namespace symcover

#endif
