#include "symcover/cohomology.hpp"

#include <algorithm>
#include <bit>

namespace symcover {

const ReducedBetti& SubcomplexBettiCache::get(std::uint64_t omega) {
    auto it = cache_.find(omega);
    if (it != cache_.end()) return it->second;
    InducedSubcomplex sub = full_subcomplex(*k_, omega);
    return cache_.emplace(omega, reduced_betti_q(sub.complex)).first->second;
}

std::vector<std::pair<Gf2Vector, ReducedBetti>> HochsterProfile::nonzero_entries() const {
    std::vector<std::pair<Gf2Vector, ReducedBetti>> out;
    for (const auto& e : entries) {
        bool nonzero = false;
        for (long long b : e.second) nonzero |= (b != 0);
        if (nonzero) out.push_back(e);
    }
    return out;
}

HochsterProfile hochster_profile(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                 SubcomplexBettiCache* cache) {
    CharCheck check = is_characteristic(k, lambda);
    if (!check.ok)
        throw InvalidCharMapError("hochster_profile requires a characteristic matrix");

    SubcomplexBettiCache local(k);
    SubcomplexBettiCache& betti = cache ? *cache : local;

    HochsterProfile profile;
    for (const Gf2Vector& omega : RowSpaceRange(lambda)) {
        const ReducedBetti& b = betti.get(omega.bits());
        profile.entries.emplace_back(omega, b);
        for (int i = 0; i < 5; ++i) profile.manifold_betti[i] += b[i];
    }
    return profile;
}

std::array<long long, 5> rz_betti(const SimplicialComplex& k) {
    if (k.m() > 14)
        throw CapacityError("full RZ Betti profile is reserved for m <= 14; use rz_b1");
    SubcomplexBettiCache cache(k);
    std::array<long long, 5> out{};
    for (std::uint64_t omega = 0; omega < (1ULL << k.m()); ++omega) {
        const ReducedBetti& b = cache.get(omega);
        for (int i = 0; i < 5; ++i) out[i] += b[i];
    }
    return out;
}

long long rz_b1(const SimplicialComplex& k) {
    if (k.m() > 20) throw CapacityError("rz_b1 is capped at m <= 20");
    const int m = k.m();
    long long total = 0;
    std::vector<int> comp(m);
    for (std::uint64_t omega = 1; omega < (1ULL << m); ++omega) {
        // count connected components of the induced subgraph on omega's
        // actual vertices; b~_0 = components - 1
        std::uint64_t present = omega & k.vertex_support();
        if (!present) continue;
        int components = 0;
        std::uint64_t unseen = present;
        while (unseen) {
            ++components;
            std::uint64_t frontier = unseen & (~unseen + 1);
            std::uint64_t reached = frontier;
            while (frontier) {
                std::uint64_t next = 0;
                for (std::uint64_t b = frontier; b; b &= b - 1)
                    next |= k.adjacency()[std::countr_zero(b)];
                frontier = next & present & ~reached;
                reached |= frontier;
            }
            unseen &= ~reached;
        }
        total += components - 1;
    }
    return total;
}

std::vector<long long> mod2_betti(const SimplicialComplex& k) {
    return f_and_h_vector(k).h;
}

long long euler_characteristic(const SimplicialComplex& k) {
    if (k.dim() != 3) throw DimensionError("euler_characteristic expects a 3-sphere complex");
    FHVectors fh = f_and_h_vector(k);
    long long chi_h = 0;
    for (int i = 0; i < static_cast<int>(fh.h.size()); ++i)
        chi_h += (i % 2 == 0 ? 1 : -1) * fh.h[i];
    long long f0 = fh.f[1];
    long long f1 = fh.f[2];
    long long chi_f = f1 - 5 * f0 + 16;
    if (chi_h != chi_f)
        throw InternalInconsistencyError(
            "Euler characteristic mismatch: h-sum " + std::to_string(chi_h) + " vs f-formula " +
            std::to_string(chi_f) + " (input is not a simplicial 3-sphere?)");
    return chi_h;
}

namespace {

// Wide bit rows for the degree-2 monomial space (can exceed 64 bits).
struct WideRow {
    std::vector<std::uint64_t> words;

    explicit WideRow(int nbits) : words((nbits + 63) / 64, 0) {}
    bool get(int i) const { return (words[i / 64] >> (i % 64)) & 1; }
    void flip(int i) { words[i / 64] ^= (1ULL << (i % 64)); }
    void operator^=(const WideRow& o) {
        for (size_t i = 0; i < words.size(); ++i) words[i] ^= o.words[i];
    }
    bool zero() const {
        for (std::uint64_t w : words)
            if (w) return false;
        return true;
    }
    int leading() const {
        for (size_t i = 0; i < words.size(); ++i)
            if (words[i]) return static_cast<int>(i) * 64 + std::countr_zero(words[i]);
        return -1;
    }
};

// Row-reduce rows in place; returns the reduced basis (pivotized).
std::vector<WideRow> gf2_reduce(std::vector<WideRow> rows) {
    std::vector<WideRow> basis;
    for (auto& row : rows) {
        for (const auto& b : basis) {
            int p = b.leading();
            if (p >= 0 && row.get(p)) row ^= b;
        }
        if (!row.zero()) basis.push_back(row);
    }
    // back-substitute for uniqueness
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            if (i != j && basis[i].get(basis[j].leading())) basis[i] ^= basis[j];
    std::sort(basis.begin(), basis.end(),
              [](const WideRow& a, const WideRow& b) { return a.leading() < b.leading(); });
    return basis;
}

WideRow reduce_against(WideRow v, const std::vector<WideRow>& basis) {
    for (const auto& b : basis) {
        int p = b.leading();
        if (p >= 0 && v.get(p)) v ^= b;
    }
    return v;
}

}  // namespace

SquaringRank squaring_rank(const SimplicialComplex& k, const Gf2Matrix& lambda) {
    CharCheck check = is_characteristic(k, lambda);
    if (!check.ok) throw InvalidCharMapError("squaring_rank requires a characteristic matrix");

    const int m = k.m();
    RrefResult r = rref(lambda);
    std::vector<bool> is_pivot(m, false);
    for (int p : r.pivots) is_pivot[p] = true;

    std::vector<int> free_vars;
    for (int j = 0; j < m; ++j)
        if (!is_pivot[j]) free_vars.push_back(j);
    const int nf = static_cast<int>(free_vars.size());
    std::vector<int> free_index(m, -1);
    for (int i = 0; i < nf; ++i) free_index[free_vars[i]] = i;

    // each variable as a linear form in the free variables (J_lambda eliminated)
    std::vector<std::uint64_t> linear(m, 0);
    for (int i = 0; i < nf; ++i) linear[free_vars[i]] = 1ULL << i;
    for (int i = 0; i < r.rank; ++i) {
        std::uint64_t form = 0;
        for (int j : free_vars)
            if (r.r.get(i, j)) form |= 1ULL << free_index[j];
        linear[r.pivots[i]] = form;
    }

    // monomial basis of degree 2: pairs (a <= b) over free variables
    const int nmono = nf * (nf + 1) / 2;
    auto mono_index = [nf](int a, int b) {
        if (a > b) std::swap(a, b);
        return a * nf - a * (a - 1) / 2 + (b - a);
    };

    auto expand_product = [&](std::uint64_t la, std::uint64_t lb) {
        WideRow row(nmono);
        for (std::uint64_t x = la; x; x &= x - 1) {
            int a = std::countr_zero(x);
            for (std::uint64_t y = lb; y; y &= y - 1) {
                int b = std::countr_zero(y);
                row.flip(mono_index(a, b));
            }
        }
        return row;
    };

    // degree-2 Stanley–Reisner relations: one per missing edge; larger missing
    // faces cannot contribute below degree 3
    std::vector<WideRow> relations;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!((k.adjacency()[a] >> b) & 1)) relations.push_back(expand_product(linear[a], linear[b]));
    std::vector<WideRow> rel_basis = gf2_reduce(std::move(relations));

    SquaringRank out;
    out.dim_h1 = nf;
    out.dim_h2 = nmono - static_cast<int>(rel_basis.size());

    std::vector<long long> h = mod2_betti(k);
    if (out.dim_h1 != h[1] || out.dim_h2 != h[2])
        throw InternalInconsistencyError(
            "mod 2 ring slice dimensions (" + std::to_string(out.dim_h1) + "," +
            std::to_string(out.dim_h2) + ") disagree with h-vector (" + std::to_string(h[1]) +
            "," + std::to_string(h[2]) + ")");

    // squaring is Z_2-linear on degree one; rank of the images of the basis
    std::vector<WideRow> squares;
    for (int i = 0; i < nf; ++i) {
        WideRow sq(nmono);
        sq.flip(mono_index(i, i));
        squares.push_back(reduce_against(std::move(sq), rel_basis));
    }
    out.rank = static_cast<int>(gf2_reduce(std::move(squares)).size());
    return out;
}

}  // namespace symcover
