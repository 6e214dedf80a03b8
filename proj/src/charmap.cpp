#include "symcover/charmap.hpp"

#include <bit>

namespace symcover {

bool columns_independent(const Gf2Matrix& lambda, std::uint64_t face) {
    // eliminate the small column set over Z_2; codes fit in a word
    std::uint32_t basis[8];
    int size = 0;
    for (std::uint64_t b = face; b; b &= b - 1) {
        std::uint32_t c = lambda.column_code(std::countr_zero(b));
        for (int i = 0; i < size; ++i) c = std::min(c, c ^ basis[i]);
        if (c == 0) return false;
        basis[size++] = c;
    }
    return true;
}

CharCheck is_characteristic(const SimplicialComplex& k, const Gf2Matrix& lambda) {
    if (lambda.ncols() != k.m())
        throw DimensionError("matrix has " + std::to_string(lambda.ncols()) +
                             " columns but complex has " + std::to_string(k.m()) + " vertices");
    for (int v = 0; v < k.m(); ++v)
        if (lambda.column_code(v) == 0) return CharCheck{false, 1ULL << v};
    for (std::uint64_t f : k.facets())
        if (!columns_independent(lambda, f)) return CharCheck{false, f};
    return CharCheck{true, std::nullopt};
}

Gf2Matrix dj_canonical(const Gf2Matrix& lambda) {
    RrefResult r = rref(lambda);
    if (r.rank < lambda.nrows())
        throw InvalidCharMapError("rank-deficient matrix is not a valid characteristic map");
    return r.r;
}

bool is_orientable(const SimplicialComplex& k, const Gf2Matrix& lambda) {
    if (lambda.ncols() != k.m())
        throw DimensionError("matrix/complex size mismatch in is_orientable");
    return in_row_space(lambda, Gf2Vector::ones(lambda.ncols()));
}

Gf2Matrix block_product(const Gf2Matrix& a, const Gf2Matrix& b) {
    const int n = a.nrows() + b.nrows();
    const int m = a.ncols() + b.ncols();
    Gf2Matrix out(n, m);
    for (int i = 0; i < a.nrows(); ++i)
        for (int j = 0; j < a.ncols(); ++j)
            if (a.get(i, j)) out.set(i, j, true);
    for (int i = 0; i < b.nrows(); ++i)
        for (int j = 0; j < b.ncols(); ++j)
            if (b.get(i, j)) out.set(a.nrows() + i, a.ncols() + j, true);
    return out;
}

BlockProductResult block_product_over(const SimplicialComplex& k1, const Gf2Matrix& a,
                                      const SimplicialComplex& k2, const Gf2Matrix& b) {
    BlockProductResult out{join(k1, k2), block_product(a, b)};
    CharCheck check = is_characteristic(out.complex, out.matrix);
    if (!check.ok)
        throw InvalidCharMapError("block product is not characteristic over the join");
    return out;
}

Gf2Matrix normal_form_lambda_beta(int m1, int m2, const Gf2Vector& beta) {
    if (m1 % 2 != 0 || m2 % 2 != 0)
        throw InvalidCharMapError(
            "normal form needs even polygon sizes (odd factors admit no factor-compatible map)");
    if (m1 < 4 || m2 < 4) throw InvalidCharMapError("normal form needs m1, m2 >= 4");
    if (beta.len() != m1) throw DimensionError("beta must have length m1");

    const int m = m1 + m2;
    Gf2Matrix out(4, m);
    for (int j = 0; j < m1; ++j) {
        out.set(0, j, true);
        if (j % 2 == 0) out.set(1, j, true);
        if (beta.get(j)) out.set(3, j, true);
    }
    for (int j = 0; j < m2; ++j) {
        out.set(2, m1 + j, true);
        if (j % 2 == 0) out.set(3, m1 + j, true);
    }
    return out;
}

}  // namespace symcover
