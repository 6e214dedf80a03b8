#include "symcover/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <set>

namespace symcover {

namespace {

using boost::multiprecision::cpp_int;

// Lexicographic order on ascending vertex lists.  The lowest set bits are
// compared first, so this is not plain numeric order on masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::vector<int> mask_to_list(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t b = mask; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

}  // namespace

void SimplicialComplex::build_adjacency() {
    adjacency_.assign(m_, 0);
    vertex_support_ = 0;
    for (std::uint64_t f : facets_) {
        vertex_support_ |= f;
        for (std::uint64_t b = f; b; b &= b - 1) {
            int v = std::countr_zero(b);
            adjacency_[v] |= f & ~(1ULL << v);
        }
    }
    // only real edges: adjacency via faces of size >= 2 is exactly pairs
    // inside facets, which is what the loop collects.
}

SimplicialComplex SimplicialComplex::from_masks(int m, std::vector<std::uint64_t> facets) {
    if (m < 0 || m > 64) throw DimensionError("vertex count must be in [0,64]");
    for (std::uint64_t f : facets)
        if (f >> m) throw DimensionError("facet contains a vertex >= m");

    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // containment normalization: drop any facet contained in another
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t f : facets) {
        bool contained = false;
        for (std::uint64_t g : facets)
            if (f != g && (f & g) == f) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), lex_less);

    SimplicialComplex k;
    k.m_ = m;
    k.facets_ = std::move(maximal);
    k.dim_ = -1;
    for (std::uint64_t f : k.facets_) k.dim_ = std::max(k.dim_, std::popcount(f) - 1);
    k.build_adjacency();
    return k;
}

SimplicialComplex SimplicialComplex::from_faces(int m, const std::vector<std::vector<int>>& facets) {
    std::vector<std::uint64_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        std::uint64_t mask = 0;
        for (int v : f) {
            if (v < 0 || v >= m) throw DimensionError("vertex index out of range");
            mask |= 1ULL << v;
        }
        masks.push_back(mask);
    }
    return from_masks(m, std::move(masks));
}

SimplicialComplex SimplicialComplex::boundary_of_simplex(int n) {
    int m = n + 1;
    std::uint64_t full = (m >= 64) ? ~0ULL : ((1ULL << m) - 1);
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < m; ++i) facets.push_back(full & ~(1ULL << i));
    return from_masks(m, std::move(facets));
}

SimplicialComplex SimplicialComplex::polygon_dual(int q) {
    if (q < 3) throw DimensionError("polygon needs at least 3 sides");
    std::vector<std::uint64_t> facets;
    for (int i = 0; i < q; ++i) facets.push_back((1ULL << i) | (1ULL << ((i + 1) % q)));
    return from_masks(q, std::move(facets));
}

SimplicialComplex SimplicialComplex::two_points() {
    return from_masks(2, {1ULL, 2ULL});
}

SimplicialComplex SimplicialComplex::polygon_product_dual(int m1, int m2) {
    return join(polygon_dual(m1), polygon_dual(m2));
}

bool SimplicialComplex::has_face(std::uint64_t sigma) const {
    if (m_ < 64 && (sigma >> m_)) throw DimensionError("vertex out of range in has_face");
    for (std::uint64_t f : facets_)
        if ((sigma & f) == sigma) return true;
    return sigma == 0;
}

bool SimplicialComplex::has_face(std::span<const int> sigma) const {
    std::uint64_t mask = 0;
    for (int v : sigma) {
        if (v < 0 || v >= m_) throw DimensionError("vertex out of range in has_face");
        mask |= 1ULL << v;
    }
    return has_face(mask);
}

long long SimplicialComplex::face_count(int d) const {
    if (d == -1) return 1;
    std::set<std::uint64_t> faces;
    std::vector<int> verts;
    for (std::uint64_t f : facets_) {
        verts = mask_to_list(f);
        int k = static_cast<int>(verts.size());
        if (d + 1 > k) continue;
        // all (d+1)-subsets of this facet
        std::vector<int> idx(d + 1);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= 1ULL << verts[i];
            faces.insert(mask);
            int i = d;
            while (i >= 0 && idx[i] == k - (d + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return static_cast<long long>(faces.size());
}

InducedSubcomplex full_subcomplex(const SimplicialComplex& k, std::uint64_t omega) {
    std::vector<int> verts = mask_to_list(omega);
    std::vector<int> old_to_new(k.m(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) old_to_new[verts[i]] = i;

    std::vector<std::uint64_t> facets;
    for (std::uint64_t f : k.facets()) {
        std::uint64_t g = f & omega;
        if (!g) continue;
        std::uint64_t remapped = 0;
        for (std::uint64_t b = g; b; b &= b - 1)
            remapped |= 1ULL << old_to_new[std::countr_zero(b)];
        facets.push_back(remapped);
    }
    return InducedSubcomplex{
        SimplicialComplex::from_masks(static_cast<int>(verts.size()), std::move(facets)),
        std::move(verts)};
}

InducedSubcomplex full_subcomplex(const SimplicialComplex& k, const Gf2Vector& omega) {
    if (omega.len() != k.m()) throw DimensionError("weight length does not match vertex count");
    return full_subcomplex(k, omega.bits());
}

FaceCensus missing_face_census(const SimplicialComplex& k) {
    FaceCensus census;
    const int m = k.m();

    // face set up to the sizes we need (dim+2)
    std::set<std::uint64_t> faces;
    faces.insert(0);
    for (std::uint64_t f : k.facets()) {
        // subsets of f
        std::uint64_t sub = f;
        while (true) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }

    census.f_vector.assign(k.dim() + 2, 0);
    census.f_vector[0] = 1;  // f_{-1}
    for (std::uint64_t f : faces)
        if (f) ++census.f_vector[std::popcount(f)];

    const int max_card = k.dim() + 2;
    // cardinality-1 non-faces are ghost vertices
    for (int v = 0; v < m; ++v)
        if (!(k.vertex_support() >> v & 1)) census.missing_faces[1].push_back(1ULL << v);

    // build candidates by cardinality: sigma is a minimal non-face iff
    // sigma is not a face and all its (|sigma|-1)-subsets are faces
    std::vector<std::uint64_t> current;  // faces of cardinality c-1 restricted to real vertices
    for (int c = 2; c <= max_card; ++c) {
        std::vector<std::uint64_t> cands;
        if (c == 2) {
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    if ((k.vertex_support() >> a & 1) && (k.vertex_support() >> b & 1))
                        cands.push_back((1ULL << a) | (1ULL << b));
        } else {
            // extend each (c-1)-face by a larger vertex; the remaining subset
            // checks below enforce minimality
            std::set<std::uint64_t> seen;
            for (std::uint64_t f : faces) {
                if (std::popcount(f) != c - 1) continue;
                int top = 63 - std::countl_zero(f | 1);
                for (int v = top + 1; v < m; ++v)
                    if (k.vertex_support() >> v & 1) seen.insert(f | (1ULL << v));
            }
            cands.assign(seen.begin(), seen.end());
        }
        for (std::uint64_t sigma : cands) {
            if (faces.count(sigma)) continue;
            bool minimal = true;
            for (std::uint64_t b = sigma; b; b &= b - 1) {
                if (!faces.count(sigma & ~(1ULL << std::countr_zero(b)))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) census.missing_faces[c].push_back(sigma);
        }
    }
    for (auto& [card, list] : census.missing_faces) std::sort(list.begin(), list.end(), lex_less);

    census.flag = true;
    for (const auto& [card, list] : census.missing_faces)
        if (card != 2 && !list.empty()) census.flag = false;
    return census;
}

namespace {

// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
int integer_rank(std::vector<std::vector<cpp_int>> a) {
    if (a.empty() || a[0].empty()) return 0;
    const int nrows = static_cast<int>(a.size());
    const int ncols = static_cast<int>(a[0].size());
    cpp_int prev = 1;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = r + 1; i < nrows; ++i) {
            for (int j = c + 1; j < ncols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

ReducedBetti reduced_betti_q(const SimplicialComplex& k) {
    if (k.dim() > 3) throw CapacityError("reduced_betti_q supports dim <= 3");

    // collect faces by dimension
    std::set<std::uint64_t> all_faces;
    for (std::uint64_t f : k.facets()) {
        std::uint64_t sub = f;
        while (true) {
            if (sub) all_faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::array<std::vector<std::uint64_t>, 4> faces_by_dim;
    for (std::uint64_t f : all_faces) faces_by_dim[std::popcount(f) - 1].push_back(f);
    for (auto& v : faces_by_dim) std::sort(v.begin(), v.end());

    std::array<long long, 5> counts{};  // index d+1 holds f_d, d = -1..3
    counts[0] = 1;
    for (int d = 0; d <= 3; ++d) counts[d + 1] = static_cast<long long>(faces_by_dim[d].size());

    // boundary ranks: rank[d] = rank of d-th boundary map C_d -> C_{d-1}
    std::array<int, 5> ranks{};
    // augmentation C_0 -> C_{-1}
    ranks[0] = faces_by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= 3; ++d) {
        const auto& cd = faces_by_dim[d];
        const auto& cd1 = faces_by_dim[d - 1];
        if (cd.empty() || cd1.empty()) continue;
        std::map<std::uint64_t, int> index;
        for (int i = 0; i < static_cast<int>(cd1.size()); ++i) index[cd1[i]] = i;
        std::vector<std::vector<cpp_int>> mat(cd1.size(), std::vector<cpp_int>(cd.size(), 0));
        for (int j = 0; j < static_cast<int>(cd.size()); ++j) {
            std::vector<int> verts = mask_to_list(cd[j]);
            for (int t = 0; t < static_cast<int>(verts.size()); ++t) {
                std::uint64_t sub = cd[j] & ~(1ULL << verts[t]);
                mat[index.at(sub)][j] = (t % 2 == 0) ? 1 : -1;
            }
        }
        ranks[d] = integer_rank(std::move(mat));
    }

    // b~_d = f_d - rank ∂_d - rank ∂_{d+1}, with ∂_0 the augmentation
    ReducedBetti betti{};
    for (int d = -1; d <= 3; ++d) {
        long long rank_d = (d >= 0) ? ranks[d] : 0;
        long long rank_up = (d + 1 <= 3) ? ranks[d + 1] : 0;
        if (d == -1) rank_up = ranks[0];
        betti[d + 1] = counts[d + 1] - rank_d - rank_up;
    }
    return betti;
}

FHVectors f_and_h_vector(const SimplicialComplex& k) {
    const int n = k.dim() + 1;
    for (std::uint64_t f : k.facets())
        if (std::popcount(f) != n)
            throw NonPureError("complex is not pure of dimension " + std::to_string(k.dim()));

    FHVectors out;
    out.f.resize(n + 1);
    for (int d = -1; d < n; ++d) out.f[d + 1] = k.face_count(d);

    // sum_i h_i t^{n-i} = sum_i f_{i-1} (t-1)^{n-i}
    out.h.assign(n + 1, 0);
    std::vector<std::vector<long long>> binom(n + 1, std::vector<long long>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    for (int kk = 0; kk <= n; ++kk) {
        long long h = 0;
        for (int i = 0; i <= kk; ++i) {
            long long c = binom[n - i][n - kk];
            h += ((kk - i) % 2 == 0 ? 1 : -1) * c * out.f[i];
        }
        out.h[kk] = h;
    }
    return out;
}

std::optional<int> is_induced_cycle(const SimplicialComplex& k) {
    if (k.dim() != 1) return std::nullopt;
    std::uint64_t support = k.vertex_support();
    int q = std::popcount(support);
    if (q < 3) return std::nullopt;
    // every facet an edge, every vertex of degree exactly 2
    long long edges = 0;
    for (std::uint64_t f : k.facets()) {
        if (std::popcount(f) != 2) return std::nullopt;
        ++edges;
    }
    for (std::uint64_t b = support; b; b &= b - 1) {
        int v = std::countr_zero(b);
        if (std::popcount(k.adjacency()[v]) != 2) return std::nullopt;
    }
    if (edges != q) return std::nullopt;
    // connectivity
    std::uint64_t seen = support & (~support + 1);  // lowest vertex
    while (true) {
        std::uint64_t next = seen;
        for (std::uint64_t b = seen; b; b &= b - 1) next |= k.adjacency()[std::countr_zero(b)];
        next &= support;
        if (next == seen) break;
        seen = next;
    }
    if (seen != support) return std::nullopt;
    return q;
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    if (k1.m() + k2.m() > 64) throw DimensionError("join exceeds 64 vertices");
    std::vector<std::uint64_t> facets;
    facets.reserve(k1.facets().size() * k2.facets().size());
    for (std::uint64_t f1 : k1.facets())
        for (std::uint64_t f2 : k2.facets()) facets.push_back(f1 | (f2 << k1.m()));
    if (k1.facets().empty())
        for (std::uint64_t f2 : k2.facets()) facets.push_back(f2 << k1.m());
    if (k2.facets().empty()) facets = k1.facets();
    return SimplicialComplex::from_masks(k1.m() + k2.m(), std::move(facets));
}

SimplicialComplex connected_sum(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                std::span<const int> sigma1, std::span<const int> sigma2) {
    if (sigma1.size() != sigma2.size())
        throw DimensionError("glued facets must have equal cardinality");
    if (k1.dim() != k2.dim()) throw DimensionError("connected sum needs equal dimensions");

    std::uint64_t mask1 = 0, mask2 = 0;
    for (int v : sigma1) mask1 |= 1ULL << v;
    for (int v : sigma2) mask2 |= 1ULL << v;
    auto is_facet = [](const SimplicialComplex& k, std::uint64_t f) {
        return std::find(k.facets().begin(), k.facets().end(), f) != k.facets().end();
    };
    if (!is_facet(k1, mask1) || !is_facet(k2, mask2))
        throw std::invalid_argument("sigma is not a common facet of both summands");

    // vertex map for k2: sigma2[i] -> sigma1[i]; others appended after k1
    std::vector<int> map2(k2.m(), -1);
    for (size_t i = 0; i < sigma2.size(); ++i) map2[sigma2[i]] = sigma1[i];
    int next = k1.m();
    for (int v = 0; v < k2.m(); ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<std::uint64_t> facets;
    for (std::uint64_t f : k1.facets())
        if (f != mask1) facets.push_back(f);
    for (std::uint64_t f : k2.facets()) {
        if (f == mask2) continue;
        std::uint64_t g = 0;
        for (std::uint64_t b = f; b; b &= b - 1) g |= 1ULL << map2[std::countr_zero(b)];
        facets.push_back(g);
    }
    return SimplicialComplex::from_masks(next, std::move(facets));
}

std::optional<PolygonProductRecognition> recognize_polygon_product_dual(
    const SimplicialComplex& k) {
    if (k.dim() != 3 || k.m() > 16) return std::nullopt;
    const int m = k.m();
    if (k.vertex_support() != ((m >= 64) ? ~0ULL : (1ULL << m) - 1)) return std::nullopt;

    // components of the non-adjacency graph; in a join every cross pair is an
    // edge, so the factors are unions of these components
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int v = 0; v < m; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < m; ++y) {
                if (y == x || comp[y] >= 0) continue;
                bool non_adjacent = !((k.adjacency()[x] >> y) & 1);
                if (non_adjacent) {
                    comp[y] = comp[x];
                    stack.push_back(y);
                }
            }
        }
        ++ncomp;
    }
    if (ncomp < 2) return std::nullopt;

    std::vector<std::uint64_t> comp_mask(ncomp, 0);
    for (int v = 0; v < m; ++v) comp_mask[comp[v]] |= 1ULL << v;

    std::optional<PolygonProductRecognition> best;
    for (std::uint32_t sub = 1; sub + 1 < (1u << ncomp); ++sub) {
        if (!(sub & 1)) continue;  // fix component 0 on side A, halving the search
        std::uint64_t a_mask = 0;
        for (int c = 0; c < ncomp; ++c)
            if ((sub >> c) & 1) a_mask |= comp_mask[c];
        std::uint64_t b_mask = k.vertex_support() & ~a_mask;

        InducedSubcomplex ka = full_subcomplex(k, a_mask);
        InducedSubcomplex kb = full_subcomplex(k, b_mask);
        auto qa = is_induced_cycle(ka.complex);
        auto qb = is_induced_cycle(kb.complex);
        if (!qa || !qb) continue;
        // verify K really is the join (facet sets agree after remapping)
        SimplicialComplex j = join(ka.complex, kb.complex);
        std::vector<int> remap(j.m());
        for (int i = 0; i < ka.complex.m(); ++i) remap[i] = ka.vertex_map[i];
        for (int i = 0; i < kb.complex.m(); ++i) remap[ka.complex.m() + i] = kb.vertex_map[i];
        std::vector<std::uint64_t> mapped;
        for (std::uint64_t f : j.facets()) {
            std::uint64_t g = 0;
            for (std::uint64_t b = f; b; b &= b - 1) g |= 1ULL << remap[std::countr_zero(b)];
            mapped.push_back(g);
        }
        if (SimplicialComplex::from_masks(m, std::move(mapped)) != k) continue;

        PolygonProductRecognition rec;
        if (*qa <= *qb) {
            rec = {*qa, *qb, a_mask, b_mask};
        } else {
            rec = {*qb, *qa, b_mask, a_mask};
        }
        // deterministic choice: smallest m1, then lexicographically least factor1
        if (!best || rec.m1 < best->m1 ||
            (rec.m1 == best->m1 && lex_less(rec.factor1, best->factor1)))
            best = rec;
    }
    return best;
}

namespace {

bool complex_connected(const SimplicialComplex& k) {
    std::uint64_t support = k.vertex_support();
    if (!support) return false;
    std::uint64_t seen = support & (~support + 1);
    while (true) {
        std::uint64_t next = seen;
        for (std::uint64_t b = seen; b; b &= b - 1) next |= k.adjacency()[std::countr_zero(b)];
        next &= support;
        if (next == seen) break;
        seen = next;
    }
    return seen == support;
}

// Link of v: faces tau with tau ∪ {v} in K, v not in tau (re-indexed).
InducedSubcomplex vertex_link(const SimplicialComplex& k, int v) {
    std::vector<std::uint64_t> facets;
    for (std::uint64_t f : k.facets())
        if ((f >> v) & 1) facets.push_back(f & ~(1ULL << v));
    std::vector<int> verts;
    std::uint64_t support = 0;
    for (std::uint64_t f : facets) support |= f;
    verts = mask_to_list(support);
    std::vector<int> old_to_new(k.m(), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) old_to_new[verts[i]] = i;
    std::vector<std::uint64_t> remapped;
    for (std::uint64_t f : facets) {
        std::uint64_t g = 0;
        for (std::uint64_t b = f; b; b &= b - 1) g |= 1ULL << old_to_new[std::countr_zero(b)];
        remapped.push_back(g);
    }
    return InducedSubcomplex{
        SimplicialComplex::from_masks(static_cast<int>(verts.size()), std::move(remapped)),
        std::move(verts)};
}

// every (d-1)-face in exactly two facets of a pure d-complex
bool ridges_in_two_facets(const SimplicialComplex& k) {
    std::map<std::uint64_t, int> ridge_count;
    for (std::uint64_t f : k.facets())
        for (std::uint64_t b = f; b; b &= b - 1) ++ridge_count[f & ~(1ULL << std::countr_zero(b))];
    for (const auto& [ridge, count] : ridge_count)
        if (count != 2) return false;
    return true;
}

long long surface_euler(const SimplicialComplex& k) {
    return k.face_count(0) - k.face_count(1) + k.face_count(2);
}

}  // namespace

ValidationReport validate_closed_3sphere_like(const SimplicialComplex& k) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    if (k.dim() != 3) {
        fail("dimension is " + std::to_string(k.dim()) + ", expected 3");
        return report;
    }
    for (std::uint64_t f : k.facets())
        if (std::popcount(f) != 4) {
            fail("complex is not pure 3-dimensional");
            return report;
        }
    if (!ridges_in_two_facets(k)) fail("some triangle is not in exactly two facets");
    if (!complex_connected(k)) fail("complex is not connected");
    if (std::popcount(k.vertex_support()) != k.m()) fail("unused vertex indices present");

    for (int v = 0; v < k.m(); ++v) {
        if (!((k.vertex_support() >> v) & 1)) continue;
        InducedSubcomplex link = vertex_link(k, v);
        ValidationReport surface = validate_closed_2sphere_like(link.complex);
        if (!surface.ok) {
            fail("link of vertex " + std::to_string(v) + " is not a 2-sphere-like surface");
        }
    }

    ReducedBetti betti = reduced_betti_q(k);
    if (!(betti[0] == 0 && betti[1] == 0 && betti[2] == 0 && betti[3] == 0 && betti[4] == 1))
        fail("rational homology differs from S^3");
    return report;
}

ValidationReport validate_closed_2sphere_like(const SimplicialComplex& k) {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    if (k.dim() != 2) {
        fail("dimension is " + std::to_string(k.dim()) + ", expected 2");
        return report;
    }
    for (std::uint64_t f : k.facets())
        if (std::popcount(f) != 3) {
            fail("complex is not pure 2-dimensional");
            return report;
        }
    if (!ridges_in_two_facets(k)) fail("some edge is not in exactly two triangles");
    if (!complex_connected(k)) fail("complex is not connected");
    if (surface_euler(k) != 2) fail("Euler characteristic differs from 2");

    // vertex links must be circles
    for (int v = 0; v < k.m(); ++v) {
        if (!((k.vertex_support() >> v) & 1)) continue;
        InducedSubcomplex link = vertex_link(k, v);
        if (!is_induced_cycle(link.complex))
            fail("link of vertex " + std::to_string(v) + " is not a circle");
    }

    ReducedBetti betti = reduced_betti_q(k);
    if (!(betti[0] == 0 && betti[1] == 0 && betti[2] == 0 && betti[3] == 1 && betti[4] == 0))
        fail("rational homology differs from S^2");
    return report;
}

}  // namespace symcover
