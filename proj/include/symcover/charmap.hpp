#ifndef SYMCOVER_CHARMAP_HPP
#define SYMCOVER_CHARMAP_HPP

#include <cstdint>
#include <optional>

#include "symcover/gf2.hpp"
#include "symcover/simplicial.hpp"

// Mod 2 characteristic maps over simplicial spheres: columns of an n x m
// matrix color the vertices of K, and every face must receive linearly
// independent colors.

namespace symcover {

struct InvalidCharMapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CharCheck {
    bool ok = false;
    std::optional<std::uint64_t> failing_face;  // first facet (or vertex) violating independence
};

/// True iff every facet's column set is linearly independent; checking
/// maximal faces suffices.  A zero column fails at its vertex.
CharCheck is_characteristic(const SimplicialComplex& k, const Gf2Matrix& lambda);

/// Columns indexed by a facet mask are linearly independent.
bool columns_independent(const Gf2Matrix& lambda, std::uint64_t face);

/// The unique RREF representative of the left-GL_n(Z_2) orbit; two maps are
/// D–J equivalent (fixed facet labels) iff their canonical forms agree.
/// Throws InvalidCharMapError when rank < nrows.
Gf2Matrix dj_canonical(const Gf2Matrix& lambda);

/// Orientability of M^R(K,lambda): the all-one vector lies in row(lambda).
bool is_orientable(const SimplicialComplex& k, const Gf2Matrix& lambda);

/// Block-diagonal product matrix of size (n1+n2) x (m1+m2).
Gf2Matrix block_product(const Gf2Matrix& a, const Gf2Matrix& b);

struct BlockProductResult {
    SimplicialComplex complex;  // join(k1, k2)
    Gf2Matrix matrix;
};

/// The product characteristic map over join(k1,k2); verified characteristic.
BlockProductResult block_product_over(const SimplicialComplex& k1, const Gf2Matrix& a,
                                      const SimplicialComplex& k2, const Gf2Matrix& b);

/// The normal form
///     ( 1_{m1}   0      )
///     ( eps_{m1} 0      )
///     ( 0        1_{m2} )
///     ( beta     eps_{m2} )
/// over ∂(P_{m1} x P_{m2})*, for even m1, m2 >= 4.
Gf2Matrix normal_form_lambda_beta(int m1, int m2, const Gf2Vector& beta);

}  // namespace symcover

#endif
