#include "symcover/verify.hpp"

#include <bit>
#include <ostream>
#include <random>
#include <sstream>

#include "symcover/catalog.hpp"
#include "symcover/enumeration.hpp"
#include "symcover/fibering.hpp"

namespace symcover {

namespace {

struct Context {
    VerifyReport& report;
    std::string block;
    int jobs = 1;
    std::ostream* log = nullptr;

    void check(const std::string& name, const std::string& expected, const std::string& actual) {
        bool pass = expected == actual;
        report.checks.push_back(VerifyCheck{block, name, expected, actual, pass});
        if (!pass) ++report.failed;
        if (log) (*log) << "  [" << (pass ? "ok" : "FAIL") << "] " << name << ": expected "
                        << expected << ", got " << actual << "\n";
    }

    void check_true(const std::string& name, bool value, const std::string& detail = "") {
        check(name, "true", value ? "true" : (detail.empty() ? "false" : "false (" + detail + ")"));
    }

    void check_eq(const std::string& name, long long expected, long long actual) {
        check(name, std::to_string(expected), std::to_string(actual));
    }

    void note(const std::string& name, const std::string& detail) {
        // informational line that always passes; used for required logging
        report.checks.push_back(VerifyCheck{block, name, "logged", "logged", true});
        if (log) (*log) << "  [log] " << name << ": " << detail << "\n";
    }
};

std::string betti_to_string(const std::array<long long, 5>& b) {
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << b[i];
    return os.str();
}

std::string support_of(std::uint64_t mask) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (std::uint64_t b = mask; b; b &= b - 1) {
        if (!first) os << ",";
        os << std::countr_zero(b);
        first = false;
    }
    os << "}";
    return os.str();
}

// ---- criterion 1: genus formula -------------------------------------------

void block_genus(Context& ctx) {
    const long long expected_b1[6] = {0, 2, 10, 34, 98, 258};
    for (int m = 3; m <= 8; ++m) {
        auto betti = rz_betti(SimplicialComplex::polygon_dual(m));
        ctx.check_eq("b1(RZ_dP" + std::to_string(m) + "*) = 2g(" + std::to_string(m) + ")",
                     expected_b1[m - 3], betti[1]);
        ctx.check_eq("b0(RZ_dP" + std::to_string(m) + "*)", 1, betti[0]);
        ctx.check_eq("b2(RZ_dP" + std::to_string(m) + "*)", 1, betti[2]);
    }
}

// ---- criterion 2: orientability --------------------------------------------

void block_orientability(Context& ctx) {
    for (const std::string& id : {"boundary-simplex-4", "polygon-product-5-4", "lutz_m10_247880"}) {
        SimplicialComplex k = catalog_get(id).complex;
        ctx.check_true("RZ_" + id + " orientable (lambda = id)",
                       is_orientable(k, Gf2Matrix::identity(k.m())));
    }
    ctx.check_true("example-5.5 orientable",
                   is_orientable(catalog_get("polygon-product-5-4").complex,
                                 catalog_matrix("example-5.5")));
    ctx.check_true("mu-sec6 orientable",
                   is_orientable(catalog_get("L-fig1").complex, catalog_matrix("mu-sec6")));
}

// ---- criterion 3: Euler obstruction ----------------------------------------

void block_euler(Context& ctx) {
    SimplicialComplex l882 = catalog_get("lutz_m10_247882").complex;
    ctx.check_eq("f3(lutz_m10_247882)", 25, static_cast<long long>(l882.facets().size()));
    ctx.check_true("euler_mod4(lutz_m10_247882) = false", !euler_mod4(l882));

    SimplicialComplex p46 = catalog_get("polygon-product-4-6").complex;
    ctx.check_eq("f3(polygon-product-4-6)", 24, static_cast<long long>(p46.facets().size()));
    ctx.check_true("euler_mod4(polygon-product-4-6)", euler_mod4(p46));

    for (const std::string& id : catalog_complex_ids()) {
        SimplicialComplex k = catalog_get(id).complex;
        if (k.dim() != 3) continue;
        std::string outcome;
        try {
            euler_characteristic(k);
            outcome = "agree";
        } catch (const InternalInconsistencyError& e) {
            outcome = e.what();
        }
        ctx.check("chi formulas agree on " + id, "agree", outcome);
    }
}

// ---- criterion 4: flagness census ------------------------------------------

void block_flagness(Context& ctx) {
    SimplicialComplex simplex = catalog_get("boundary-simplex-4").complex;
    FaceCensus census = missing_face_census(simplex);
    ctx.check_eq("boundary-simplex-4 missing faces of cardinality 5", 1,
                 static_cast<long long>(census.missing_faces[5].size()));
    ctx.check("flagness_class(boundary-simplex-4)", "BoundaryOfSimplex",
              flagness_class(simplex).to_string());

    ctx.check("flagness_class(polygon-product-4-4)", "Flag",
              flagness_class(catalog_get("polygon-product-4-4").complex).to_string());
    ctx.check("flagness_class(lutz_m10_247880)", "Flag",
              flagness_class(catalog_get("lutz_m10_247880").complex).to_string());

    SimplicialComplex p36 = catalog_get("polygon-product-3-6").complex;
    FaceCensus c36 = missing_face_census(p36);
    ctx.check_true("polygon-product-3-6 has a missing triangle",
                   !c36.missing_faces[3].empty());
    ctx.check("flagness_class(polygon-product-3-6)", "PolygonTriangleJoin(6)",
              flagness_class(p36).to_string());
}

// ---- criterion 5: triangle-factor exclusion ---------------------------------

void block_prop52(Context& ctx) {
    SearchConfig config;
    config.filter = EnumFilter::CSymplectic;
    config.count_only = true;
    config.jobs = ctx.jobs;
    EnumerationResult result =
        enumerate_char_maps(catalog_get("polygon-product-3-4").complex, config);
    ctx.check_eq("c-symplectic classes over polygon-product-3-4", 0, result.count);
}

// ---- criterion 6: Cor 5.4 counting ------------------------------------------

void block_cor54(Context& ctx) {
    const std::pair<int, int> cases[3] = {{4, 4}, {4, 6}, {6, 6}};
    for (auto [m1, m2] : cases) {
        SearchConfig config;
        config.filter = EnumFilter::SymplecticProduct;
        config.count_only = true;
        config.jobs = ctx.jobs;
        std::string id = "polygon-product-" + std::to_string(m1) + "-" + std::to_string(m2);
        EnumerationResult result = enumerate_char_maps(catalog_get(id).complex, config);
        SymplecticCount formula = count_formula_symplectic(m1, m2);
        ctx.check_eq("symplectic count over " + id + " (formula " +
                         std::to_string(formula.count) + ")",
                     formula.count, result.count);
    }
}

// ---- criterion 7: Example 5.5 -----------------------------------------------

void block_ex55(Context& ctx) {
    SimplicialComplex k = catalog_get("polygon-product-5-4").complex;
    Gf2Matrix lambda = catalog_matrix("example-5.5");

    CSymplecticResult cs = c_symplectic(k, lambda);
    ctx.check_true("example-5.5 c-symplectic", cs.value);
    ctx.check("c-symplectic witness weight", "{0,2,5,7}",
              cs.witness ? support_of(cs.witness->bits()) : "none");

    FactorCompatibility fc = factor_compatible(5, 4, lambda);
    ctx.check_true("example-5.5 not factor-compatible", !fc.compatible);

    ObstructionReport verdict = symplectic_verdict(k, lambda);
    ctx.check("verdict", "NotSymplectic", to_string(verdict.verdict));
}

// ---- criterion 8: Lemma 5.7 squaring rank ------------------------------------

void block_lem57(Context& ctx) {
    const std::pair<int, int> cases[4] = {{4, 4}, {4, 6}, {6, 4}, {6, 8}};
    for (auto [m1, m2] : cases) {
        SimplicialComplex k = SimplicialComplex::polygon_product_dual(m1, m2);
        Gf2Vector ones = Gf2Vector::ones(m1);
        Gf2Vector eps = Gf2Vector::alternating(m1);
        bool all_ok = true;
        std::string first_failure;
        for (std::uint64_t bits = 0; bits < (1ULL << m1); ++bits) {
            Gf2Vector beta(m1, bits);
            bool trivial_class = beta.is_zero() || beta == ones || beta == eps ||
                                 beta == ones + eps;
            int expected = trivial_class ? 0 : m2 - 2;
            SquaringRank sq = squaring_rank(k, normal_form_lambda_beta(m1, m2, beta));
            if (sq.rank != expected && first_failure.empty()) {
                all_ok = false;
                first_failure = "beta=" + beta.to_string() + " rank " + std::to_string(sq.rank) +
                                " expected " + std::to_string(expected);
            }
        }
        ctx.check("squaring rank over (" + std::to_string(m1) + "," + std::to_string(m2) +
                      ") for all beta",
                  "all match", all_ok ? "all match" : first_failure);
    }
}

// ---- criterion 9: Cor 5.9 diffeomorphism counts -------------------------------

void block_cor59(Context& ctx) {
    ctx.check_eq("diffeo_class_count(4,4)", 2, diffeo_class_count(4, 4));
    ctx.check_eq("diffeo_class_count(4,6)", 3, diffeo_class_count(4, 6));
    ctx.check_eq("diffeo_class_count(8,8)", 2, diffeo_class_count(8, 8));
}

// ---- criterion 10: the section-6 certificate ----------------------------------

void block_sec6(Context& ctx) {
    SimplicialComplex l = catalog_get("L-fig1").complex;
    Gf2Matrix mu = catalog_matrix("mu-sec6");
    Gf2Vector eps = Gf2Vector(10, 0);
    {
        Gf2Matrix eps_matrix = catalog_matrix("epsilon-sec6");
        for (int j = 0; j < 10; ++j) eps.set(j, eps_matrix.get(0, j));
    }

    ctx.check_true("mu characteristic over L", is_characteristic(l, mu).ok);
    ctx.check_true("affine cocycle conditions", check_affine(l, mu, eps).ok);

    const char* expected_p[8] = {
        "{0,2,3,4,5,7,8,9}", "{1,2,3,5,7,8,9}", "{0,2,3,4,6,8,9}", "{1,2,3,6,8,9}",
        "{0,4,5,7}",         "{1,5,7}",         "{0,4,6}",         "{1,6}",
    };
    const char* expected_n[8] = {
        "{1,6}",         "{0,4,6}",         "{1,5,7}",         "{0,4,5,7}",
        "{1,2,3,6,8,9}", "{0,2,3,4,6,8,9}", "{1,2,3,5,7,8,9}", "{0,2,3,4,5,7,8,9}",
    };
    std::vector<LinkRow> table = links_table(l, mu, eps);
    bool layout_ok = table.size() == 8;
    std::string mismatch;
    for (size_t g = 0; layout_ok && g < table.size(); ++g) {
        std::uint64_t p = 0, n = 0;
        for (int i : table[g].ascending) p |= 1ULL << i;
        for (int i : table[g].descending) n |= 1ULL << i;
        if (support_of(p) != expected_p[g] || support_of(n) != expected_n[g]) {
            layout_ok = false;
            mismatch = "row g=" + std::to_string(g) + ": P=" + support_of(p) +
                       " N=" + support_of(n);
        }
        if (!table[g].ascending_connected || !table[g].descending_connected) {
            layout_ok = false;
            mismatch = "row g=" + std::to_string(g) + " disconnected";
        }
    }
    ctx.check("P_g/N_g table (8 rows, verbatim)", "match",
              layout_ok ? "match" : mismatch);

    ctx.check_eq("cocycle image divisor", 2, cocycle_image_divisor(l, mu, eps));
    FiberingCertificate cert = fibering_verdict(l, mu, eps);
    ctx.check("fibering verdict", "Fibers",
              cert.kind == FiberingKind::Fibers ? "Fibers" : "Inconclusive");

    ObstructionReport product = product_symplectic_certificate(l, mu, eps);
    ctx.check("product certificate verdict", "Symplectic", to_string(product.verdict));
    std::string recognition = "?";
    for (const TestRecord& t : product.tests)
        if (t.name == "product-recognition") recognition = t.evidence;
    ctx.check("product recognition over join(dI*, L)", "none", recognition);
    ctx.check_eq("facet count of I x Q", 12,
                 static_cast<long long>(catalog_get("IxQ-fig1").complex.m()));
}

// ---- criterion 11: the Appendix census ----------------------------------------

void block_census(Context& ctx) {
    SimplicialComplex k = catalog_get("lutz_m10_247880").complex;
    SearchConfig config;
    config.filter = EnumFilter::CSymplectic;
    config.jobs = 1;
    EnumerationResult sequential = enumerate_char_maps(k, config);
    ctx.check_eq("c-symplectic classes over lutz_m10_247880", 100, sequential.count);

    config.jobs = 8;
    EnumerationResult parallel = enumerate_char_maps(k, config);
    ctx.check_true("census deterministic under jobs=8",
                   parallel.count == sequential.count &&
                       parallel.matrices == sequential.matrices);
}

// ---- criterion 12: Example A.2 and the torus-weight log -------------------------

void block_exa2(Context& ctx) {
    SimplicialComplex k = catalog_get("lutz_m10_247880").complex;
    Gf2Matrix lambda = catalog_matrix("lambda-A.2");
    SubcomplexBettiCache cache(k);

    ctx.check_true("lambda-A.2 characteristic", is_characteristic(k, lambda).ok);
    ctx.check_true("lambda-A.2 orientable", is_orientable(k, lambda));

    HochsterProfile profile = hochster_profile(k, lambda, &cache);
    ctx.check_eq("b2(M)", 2, profile.manifold_betti[2]);
    ctx.check_eq("b1(RZ_K)", 32, rz_b1(k));

    TorusWeightCheck torus = torus_weight_check(k, lambda, &cache);
    ctx.note("torus_weight_check(lambda-A.2)",
             std::string("strict all-4-cycles = ") +
                 (torus.all_weights_are_4cycles ? "true" : "false") +
                 ", prop_a1_applies(strict) = " + (torus.prop_a1_applies ? "true" : "false") +
                 ", product-torus extension covers all weights = " +
                 (torus.extended_all_covered ? "true" : "false"));
    for (const std::string& line : torus.weight_log) ctx.note("  weight", line);

    ObstructionReport verdict = symplectic_verdict(k, lambda, {}, &cache);
    ctx.check("combined verdict for lambda-A.2", "NotSymplectic", to_string(verdict.verdict));

    // sufficient-condition outcome over the full census, logged; the strict
    // check is expected (by the source text) to pass everywhere, so any
    // failure is surfaced as a reported discrepancy rather than hidden
    SearchConfig config;
    config.filter = EnumFilter::CSymplectic;
    config.jobs = ctx.jobs;
    EnumerationResult census = enumerate_char_maps(k, config);
    int strict_pass = 0, extended_pass = 0;
    for (const auto& cols : census.matrices) {
        Gf2Matrix m = Gf2Matrix::from_column_codes(4, cols);
        TorusWeightCheck t = torus_weight_check(k, m, &cache);
        if (t.all_weights_are_4cycles) ++strict_pass;
        if (t.extended_all_covered) ++extended_pass;
    }
    ctx.check_eq("census matrices examined", 100,
                 static_cast<long long>(census.matrices.size()));
    ctx.note("census sufficient-condition outcomes",
             std::to_string(strict_pass) + "/100 pass the strict induced-4-cycle check, " +
                 std::to_string(extended_pass) +
                 "/100 are covered with the product-torus extension");
    if (strict_pass < 100)
        ctx.note("DISCREPANCY (reported per the open question)",
                 "the strict sufficient check does not certify " +
                     std::to_string(100 - strict_pass) +
                     "/100 census matrices; the source asserts torus spanning via a direct "
                     "cellular computation that is out of scope here, so those verdicts stay "
                     "Unknown unless the product-torus extension applies");
}

// ---- criterion 13: property suites ----------------------------------------------

void block_properties(Context& ctx) {
    std::mt19937 rng(20260809);

    // rref idempotence, 10^4 random cases
    bool idempotent = true;
    for (int trial = 0; trial < 10000 && idempotent; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % 12);
        Gf2Matrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (rng() & 1) a.set(i, j, true);
        RrefResult first = rref(a);
        RrefResult second = rref(first.r);
        idempotent = first.r == second.r && first.rank == second.rank;
    }
    ctx.check_true("rref idempotence (10^4 random matrices)", idempotent);

    // row-kernel duality, exhaustive over u for m <= 12
    bool duality = true;
    for (int trial = 0; trial < 50 && duality; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        int m = 1 + static_cast<int>(rng() % 12);
        Gf2Matrix a(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                if (rng() & 1) a.set(i, j, true);
        RrefResult r = rref(a);
        std::vector<Gf2Vector> kernel = kernel_basis(a);
        for (std::uint64_t bits = 0; bits < (1ULL << m) && duality; ++bits) {
            Gf2Vector u(m, bits);
            bool in_row = in_row_space(r, u);
            bool pairs_zero = true;
            for (const Gf2Vector& g : kernel) pairs_zero &= !u.dot(g);
            duality = (in_row == pairs_zero);
        }
        // row-space enumeration size and membership
        std::vector<Gf2Vector> space = enumerate_row_space(a);
        duality = duality && space.size() == (1ULL << r.rank) && space[0].is_zero();
        for (const Gf2Vector& v : space) duality = duality && in_row_space(r, v);
    }
    ctx.check_true("row-kernel duality (exhaustive u, m <= 12)", duality);

    // Alexander duality on catalog 3-spheres
    bool alexander = true;
    std::string alexander_failure;
    for (const std::string& id : catalog_complex_ids()) {
        SimplicialComplex k = catalog_get(id).complex;
        if (k.dim() != 3) continue;
        SubcomplexBettiCache cache(k);
        const std::uint64_t all = (1ULL << k.m()) - 1;
        std::vector<std::uint64_t> samples;
        if (k.m() <= 8) {
            for (std::uint64_t w = 0; w <= all; ++w) samples.push_back(w);
        } else {
            for (int t = 0; t < 512; ++t) samples.push_back(rng() & all);
        }
        for (std::uint64_t w : samples) {
            const ReducedBetti& b = cache.get(w);
            const ReducedBetti& bc = cache.get(all & ~w);
            if (b[1] != bc[3] || b[2] != bc[2]) {  // b~0 <-> b~2, b~1 <-> b~1
                alexander = false;
                alexander_failure = id + " omega=" + support_of(w);
                break;
            }
        }
        if (!alexander) break;
    }
    ctx.check("Alexander duality on catalog 3-spheres", "holds",
              alexander ? "holds" : alexander_failure);

    // Poincare duality symmetry for orientable instances
    bool poincare = true;
    const std::pair<std::string, std::string> instances[] = {
        {"polygon-product-5-4", "example-5.5"},
        {"lutz_m10_247880", "lambda-A.2"},
        {"IxQ-fig1", "lambda-IxQ"},
    };
    for (const auto& [kid, mid] : instances) {
        SimplicialComplex k = catalog_get(kid).complex;
        HochsterProfile profile = hochster_profile(k, catalog_matrix(mid));
        for (int i = 0; i <= 4; ++i)
            poincare = poincare && profile.manifold_betti[i] == profile.manifold_betti[4 - i];
    }
    ctx.check_true("Poincare duality b_i = b_{4-i} on catalog instances", poincare);

    // enumeration vs brute-force oracle for m <= 7
    {
        SimplicialComplex simplex = catalog_get("boundary-simplex-4").complex;
        long long oracle = brute_force_class_count(simplex);
        EnumerationResult fast = enumerate_char_maps(simplex, SearchConfig{});
        ctx.check_eq("boundary-simplex-4: oracle = enumeration", oracle, fast.count);
        ctx.check_eq("boundary-simplex-4 class count (pinned)", 1, fast.count);

        SimplicialComplex j33 =
            join(SimplicialComplex::polygon_dual(3), SimplicialComplex::polygon_dual(3));
        long long oracle33 = brute_force_class_count(j33);
        EnumerationResult fast33 = enumerate_char_maps(j33, SearchConfig{});
        ctx.check_eq("join(dP3*,dP3*): oracle = enumeration", oracle33, fast33.count);
        ctx.check_eq("join(dP3*,dP3*) class count (pinned)", 7, fast33.count);

        SimplicialComplex p34 = catalog_get("polygon-product-3-4").complex;
        long long oracle34 = brute_force_class_count(p34);
        EnumerationResult fast34 = enumerate_char_maps(p34, SearchConfig{});
        ctx.check_eq("polygon-product-3-4: oracle = enumeration", oracle34, fast34.count);
    }

    // partition-sum property: unit subtree counts add up to the total
    {
        SimplicialComplex simplex = catalog_get("boundary-simplex-4").complex;
        SearchConfig config;
        EnumerationResult total = enumerate_char_maps(simplex, config);
        config.jobs = 8;
        EnumerationResult split = enumerate_char_maps(simplex, config);
        ctx.check_eq("partition sum equals sequential total", total.count, split.count);
    }

    // connected-sum Betti consistency at n = 4 on two copies of the 4-simplex
    {
        SimplicialComplex simplex = catalog_get("boundary-simplex-4").complex;
        const std::vector<int> sigma = {0, 1, 2, 3};
        SimplicialComplex sum = connected_sum(simplex, simplex, sigma, sigma);
        auto betti_sum = rz_betti(sum);
        auto betti_piece = rz_betti(simplex);
        long long expected = 2 * betti_piece[1] + 2 * betti_piece[1] + 1;
        ctx.check_eq("b1(RZ of dDelta4 # dDelta4) = 2b1+2b1+1", expected, betti_sum[1]);
        auto rb = reduced_betti_q(sum);
        ctx.check("connected sum has S^3 homology", "0,0,0,0,1",
                  std::to_string(rb[0]) + "," + std::to_string(rb[1]) + "," +
                      std::to_string(rb[2]) + "," + std::to_string(rb[3]) + "," +
                      std::to_string(rb[4]));
    }

    // spanning-tree independence of the cocycle image divisor
    {
        SimplicialComplex l = catalog_get("L-fig1").complex;
        Gf2Matrix mu = catalog_matrix("mu-sec6");
        Gf2Vector eps(10);
        Gf2Matrix eps_matrix = catalog_matrix("epsilon-sec6");
        for (int j = 0; j < 10; ++j) eps.set(j, eps_matrix.get(0, j));
        long long bfs = cocycle_image_divisor(l, mu, eps, 1, 0);
        long long dfs = cocycle_image_divisor(l, mu, eps, 1, 1);
        ctx.check_eq("divisor independent of the spanning tree", bfs, dfs);
        ctx.check_eq("doubled slope magnitude doubles the divisor", 4,
                     cocycle_image_divisor(l, mu, eps, 2, 0));
    }
}

}  // namespace

std::vector<VerifyBlockInfo> verify_blocks() {
    return {
        {1, "genus", "genus formula for RZ over polygon duals"},
        {2, "orient", "orientability criteria"},
        {3, "euler", "Euler characteristic obstruction"},
        {4, "flag", "flagness census"},
        {5, "prop5.2", "triangle-factor exclusion"},
        {6, "cor5.4", "symplectic counting over polygon products"},
        {7, "ex5.5", "the c-symplectic non-symplectic example"},
        {8, "lem5.7", "squaring rank of the normal forms"},
        {9, "cor5.9", "diffeomorphism class counts"},
        {10, "sec6", "fibering certificate and product symplecticity"},
        {11, "census", "the 10-vertex c-symplectic census"},
        {12, "exA.2", "the adjunction pipeline example and census log"},
        {13, "props", "property suites"},
    };
}

VerifyReport run_verify_paper(const std::string& only, int jobs, std::ostream* log) {
    VerifyReport report;
    report.blocks = verify_blocks();

    using BlockFn = void (*)(Context&);
    const BlockFn fns[] = {
        block_genus, block_orientability, block_euler,  block_flagness, block_prop52,
        block_cor54, block_ex55,          block_lem57,  block_cor59,    block_sec6,
        block_census, block_exa2,         block_properties,
    };

    for (size_t i = 0; i < report.blocks.size(); ++i) {
        const VerifyBlockInfo& info = report.blocks[i];
        if (!only.empty() && only != info.alias && only != "crit" + std::to_string(info.number))
            continue;
        if (log)
            (*log) << "criterion " << info.number << " (" << info.alias << "): " << info.title
                   << "\n";
        Context ctx{report, info.alias, jobs, log};
        fns[i](ctx);
    }
    return report;
}

}  // namespace symcover
