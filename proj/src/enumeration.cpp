#include "symcover/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

namespace symcover {

EnumFilter parse_filter(const std::string& name) {
    if (name.empty() || name == "none") return EnumFilter::None;
    if (name == "orientable") return EnumFilter::Orientable;
    if (name == "csymplectic" || name == "c-symplectic") return EnumFilter::CSymplectic;
    if (name == "symplectic" || name == "symplectic-product") return EnumFilter::SymplecticProduct;
    if (name == "factor-compatible" || name == "factorcompatible")
        return EnumFilter::FactorCompatible;
    throw std::invalid_argument("unknown filter: " + name);
}

namespace {

// shared search context: facet readiness index, filter closures, betti cache
struct SearchContext {
    const SimplicialComplex& k;
    int n;
    int m;
    std::vector<std::vector<std::uint64_t>> ready;  // facets whose max vertex is j

    EnumFilter filter;
    std::optional<PolygonProductRecognition> recognition;

    // lazy b~1 cache shared across threads
    mutable std::unordered_map<std::uint64_t, long long> b1_cache;
    mutable std::mutex b1_mutex;

    explicit SearchContext(const SimplicialComplex& complex, const SearchConfig& config)
        : k(complex), n(config.target_rank), m(complex.m()), filter(config.filter) {
        ready.resize(m);
        for (std::uint64_t f : k.facets()) {
            int top = 63 - std::countl_zero(f);
            ready[top].push_back(f);
        }
        if (filter == EnumFilter::SymplecticProduct || filter == EnumFilter::FactorCompatible)
            recognition = recognize_polygon_product_dual(k);
    }

    long long b1(std::uint64_t omega) const {
        {
            std::lock_guard<std::mutex> lock(b1_mutex);
            auto it = b1_cache.find(omega);
            if (it != b1_cache.end()) return it->second;
        }
        long long value = reduced_betti_q(full_subcomplex(k, omega).complex)[2];
        std::lock_guard<std::mutex> lock(b1_mutex);
        return b1_cache.emplace(omega, value).first->second;
    }

    bool passes_filter(const std::vector<std::uint32_t>& cols) const {
        if (filter == EnumFilter::None) return true;

        // row masks from column codes
        std::uint64_t rows[8] = {};
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < n; ++i)
                if ((cols[j] >> i) & 1) rows[i] |= 1ULL << j;

        std::uint64_t row_space[1 << 8];
        const int count = 1 << n;
        for (int sub = 0; sub < count; ++sub) {
            std::uint64_t v = 0;
            for (int i = 0; i < n; ++i)
                if ((sub >> i) & 1) v ^= rows[i];
            row_space[sub] = v;
        }
        auto in_rows = [&](std::uint64_t mask) {
            for (int sub = 0; sub < count; ++sub)
                if (row_space[sub] == mask) return true;
            return false;
        };
        const std::uint64_t all = (m >= 64) ? ~0ULL : (1ULL << m) - 1;

        switch (filter) {
            case EnumFilter::None:
                return true;
            case EnumFilter::Orientable:
                return in_rows(all);
            case EnumFilter::CSymplectic: {
                if (!in_rows(all)) return false;
                for (int sub = 1; sub < count; ++sub)
                    if (b1(row_space[sub]) > 0) return true;
                return false;
            }
            case EnumFilter::SymplecticProduct: {
                if (!recognition) return false;
                return in_rows(recognition->factor1) && in_rows(recognition->factor2);
            }
            case EnumFilter::FactorCompatible: {
                if (!recognition) return false;
                Gf2Matrix lambda =
                    Gf2Matrix::from_column_codes(n, std::span<const std::uint32_t>(cols));
                return factor_compatible_on(k, lambda, *recognition).compatible;
            }
        }
        return false;
    }
};

bool columns_independent_codes(const std::vector<std::uint32_t>& cols, std::uint64_t face) {
    std::uint32_t basis[8];
    int size = 0;
    for (std::uint64_t b = face; b; b &= b - 1) {
        std::uint32_t c = cols[std::countr_zero(b)];
        for (int i = 0; i < size; ++i) c = std::min(c, c ^ basis[i]);
        if (c == 0) return false;
        basis[size++] = c;
    }
    return true;
}

// depth-first extension of a partial assignment; candidates in increasing
// column-code order so the emission order is lexicographic
template <typename Emit>
void extend(const SearchContext& ctx, std::vector<std::uint32_t>& cols, int rank, int depth,
            Emit&& emit) {
    if (depth == ctx.m) {
        if (rank == ctx.n) emit(cols);
        return;
    }
    const std::uint32_t upper = (rank < ctx.n) ? (1u << rank) : ((1u << ctx.n) - 1);
    for (std::uint32_t c = 1; c <= upper; ++c) {
        const bool rank_up = (c == (1u << rank));
        const int new_rank = rank + (rank_up ? 1 : 0);
        if (new_rank + (ctx.m - depth - 1) < ctx.n) continue;
        cols.push_back(c);
        bool ok = true;
        for (std::uint64_t f : ctx.ready[depth])
            if (!columns_independent_codes(cols, f)) {
                ok = false;
                break;
            }
        if (ok) extend(ctx, cols, new_rank, depth + 1, emit);
        cols.pop_back();
    }
}

int rank_of_prefix(const SearchContext& ctx, const std::vector<std::uint32_t>& prefix) {
    int rank = 0;
    for (std::uint32_t c : prefix)
        if (c == (1u << rank)) ++rank;
    return rank;
}

std::vector<std::vector<std::uint32_t>> prefixes_at_depth(const SearchContext& ctx, int depth) {
    std::vector<std::vector<std::uint32_t>> units;
    std::vector<std::uint32_t> cols;
    // the same candidate rule and pruning as extend(), stopping at `depth`
    auto rec = [&](auto&& self, int rank, int d) -> void {
        if (d == depth) {
            units.push_back(cols);
            return;
        }
        const std::uint32_t upper = (rank < ctx.n) ? (1u << rank) : ((1u << ctx.n) - 1);
        for (std::uint32_t c = 1; c <= upper; ++c) {
            const bool rank_up = (c == (1u << rank));
            const int new_rank = rank + (rank_up ? 1 : 0);
            if (new_rank + (ctx.m - d - 1) < ctx.n) continue;
            cols.push_back(c);
            bool ok = true;
            for (std::uint64_t f : ctx.ready[d])
                if (!columns_independent_codes(cols, f)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, new_rank, d + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0, 0);
    return units;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> partition_search(const SimplicialComplex& k,
                                                         const SearchConfig& config,
                                                         int prefix_depth) {
    if (prefix_depth < 1 || prefix_depth > k.m())
        throw std::invalid_argument("prefix depth must be in [1, m]");
    SearchContext ctx(k, config);
    return prefixes_at_depth(ctx, prefix_depth);
}

EnumerationResult enumerate_char_maps(const SimplicialComplex& k, const SearchConfig& config) {
    if (k.m() > 14) throw CapacityError("enumeration is capped at m <= 14");
    if (config.target_rank < 1 || config.target_rank > 8)
        throw DimensionError("target rank must be in [1,8]");

    SearchContext ctx(k, config);
    EnumerationResult result;

    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        std::vector<std::uint32_t> cols;
        cols.reserve(k.m());
        extend(ctx, cols, 0, 0, [&](const std::vector<std::uint32_t>& matrix) {
            if (!ctx.passes_filter(matrix)) return;
            ++result.count;
            if (!config.count_only) result.matrices.push_back(matrix);
        });
    } else {
        // split the tree into work units; a fixed unit -> results mapping
        // makes the merged output independent of scheduling
        int depth = 1;
        std::vector<std::vector<std::uint32_t>> units = prefixes_at_depth(ctx, depth);
        while (depth < k.m() && static_cast<int>(units.size()) < 4 * jobs) {
            ++depth;
            units = prefixes_at_depth(ctx, depth);
        }

        std::vector<long long> unit_counts(units.size(), 0);
        std::vector<std::vector<std::vector<std::uint32_t>>> unit_matrices(units.size());
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t u = next.fetch_add(1);
                if (u >= units.size()) break;
                std::vector<std::uint32_t> cols = units[u];
                int rank = rank_of_prefix(ctx, cols);
                extend(ctx, cols, rank, static_cast<int>(cols.size()),
                       [&](const std::vector<std::uint32_t>& matrix) {
                           if (!ctx.passes_filter(matrix)) return;
                           ++unit_counts[u];
                           if (!config.count_only) unit_matrices[u].push_back(matrix);
                       });
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        for (size_t u = 0; u < units.size(); ++u) {
            result.count += unit_counts[u];
            for (auto& mat : unit_matrices[u]) result.matrices.push_back(std::move(mat));
        }
    }
    std::sort(result.matrices.begin(), result.matrices.end());
    return result;
}

long long brute_force_class_count(const SimplicialComplex& k, int target_rank) {
    if (k.m() > 7) throw CapacityError("brute-force oracle refuses m > 7");
    const int m = k.m();
    const int n = target_rank;

    std::vector<std::vector<std::uint64_t>> ready(m);
    for (std::uint64_t f : k.facets()) ready[63 - std::countl_zero(f)].push_back(f);

    std::set<std::uint64_t> classes;  // RREF column codes packed in nibbles
    std::vector<std::uint32_t> cols;

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            Gf2Matrix lambda = Gf2Matrix::from_column_codes(n, std::span<const std::uint32_t>(cols));
            RrefResult r = rref(lambda);
            if (r.rank != n) return;
            std::uint64_t key = 0;
            for (int j = 0; j < m; ++j) key |= static_cast<std::uint64_t>(r.r.column_code(j)) << (4 * j);
            classes.insert(key);
            return;
        }
        for (std::uint32_t c = 1; c < (1u << n); ++c) {
            cols.push_back(c);
            bool ok = true;
            for (std::uint64_t f : ready[depth])
                if (!columns_independent_codes(cols, f)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, depth + 1);
            cols.pop_back();
        }
    };
    rec(rec, 0);
    return static_cast<long long>(classes.size());
}

}  // namespace symcover
