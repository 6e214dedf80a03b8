#include "symcover/obstructions.hpp"

#include <bit>
#include <sstream>

#include "symcover/fibering.hpp"

namespace symcover {

std::string to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::Symplectic: return "Symplectic";
        case VerdictTag::NotSymplectic: return "NotSymplectic";
        case VerdictTag::Unknown: return "Unknown";
    }
    return "?";
}

std::string FlagnessClass::to_string() const {
    auto face_list = [](std::uint64_t mask) {
        std::ostringstream os;
        bool first = true;
        for (std::uint64_t b = mask; b; b &= b - 1) {
            if (!first) os << ",";
            os << std::countr_zero(b);
            first = false;
        }
        return os.str();
    };
    switch (kind) {
        case Kind::Flag: return "Flag";
        case Kind::MissingTriangle: return "MissingTriangle({" + face_list(witness_face) + "})";
        case Kind::MissingTetrahedron:
            return "MissingTetrahedron({" + face_list(witness_face) + "})";
        case Kind::BoundaryOfSimplex: return "BoundaryOfSimplex";
        case Kind::PolygonTriangleJoin:
            return "PolygonTriangleJoin(" + std::to_string(polygon) + ")";
    }
    return "?";
}

CSymplecticResult c_symplectic(const SimplicialComplex& k, const Gf2Matrix& lambda,
                               SubcomplexBettiCache* cache) {
    if (!is_orientable(k, lambda)) return CSymplecticResult{false, std::nullopt};

    SubcomplexBettiCache local(k);
    SubcomplexBettiCache& betti = cache ? *cache : local;
    for (const Gf2Vector& omega : RowSpaceRange(lambda)) {
        if (omega.is_zero()) continue;
        if (betti.get(omega.bits())[2] > 0) return CSymplecticResult{true, omega};
    }
    return CSymplecticResult{false, std::nullopt};
}

bool euler_mod4(const SimplicialComplex& k) {
    if (k.dim() != 3) throw DimensionError("euler_mod4 expects a 3-sphere complex");
    return static_cast<long long>(k.facets().size()) % 4 == 0;
}

FlagnessClass flagness_class(const SimplicialComplex& k) {
    if (k.dim() != 3) throw DimensionError("flagness_class expects a 3-sphere complex");
    FaceCensus census = missing_face_census(k);

    auto first_of = [&](int card) -> std::optional<std::uint64_t> {
        auto it = census.missing_faces.find(card);
        if (it == census.missing_faces.end() || it->second.empty()) return std::nullopt;
        return it->second.front();
    };

    if (first_of(5)) return FlagnessClass{FlagnessClass::Kind::BoundaryOfSimplex, *first_of(5), 0};
    if (auto rec = recognize_polygon_product_dual(k); rec && rec->m1 == 3)
        return FlagnessClass{FlagnessClass::Kind::PolygonTriangleJoin, 0, rec->m2};
    if (auto tri = first_of(3))
        return FlagnessClass{FlagnessClass::Kind::MissingTriangle, *tri, 0};
    if (auto tet = first_of(4))
        return FlagnessClass{FlagnessClass::Kind::MissingTetrahedron, *tet, 0};
    return FlagnessClass{FlagnessClass::Kind::Flag, 0, 0};
}

namespace {

std::string support_string(std::uint64_t mask) {
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

FactorCompatibility factor_compatible_masks(const Gf2Matrix& lambda, std::uint64_t factor1,
                                            std::uint64_t factor2,
                                            const std::vector<std::uint64_t>& delta1,
                                            const std::vector<std::uint64_t>& delta2) {
    const int m = lambda.ncols();
    RrefResult r = rref(lambda);
    auto member = [&](std::uint64_t mask) {
        return in_row_space(r, Gf2Vector(m, mask));
    };

    if (std::popcount(factor1) == 4 && std::popcount(factor2) == 4) {
        // the cube case: some pairing of the four opposite-pair vectors must
        // have both sums in the row space
        const std::uint64_t d11 = delta1[0], d12 = delta1[1];
        const std::uint64_t d21 = delta2[0], d22 = delta2[1];
        const std::pair<std::uint64_t, std::uint64_t> pairings[3] = {
            {d11 ^ d12, d21 ^ d22},
            {d11 ^ d21, d12 ^ d22},
            {d11 ^ d22, d12 ^ d21},
        };
        const char* names[3] = {"(d11+d12, d21+d22)", "(d11+d21, d12+d22)", "(d11+d22, d12+d21)"};
        for (int p = 0; p < 3; ++p) {
            if (member(pairings[p].first) && member(pairings[p].second))
                return FactorCompatibility{
                    true, std::string("pairing ") + names[p] + ": sums " +
                              support_string(pairings[p].first) + ", " +
                              support_string(pairings[p].second) + " in row(lambda)"};
        }
        return FactorCompatibility{false, "no opposite-pair pairing has both sums in row(lambda)"};
    }

    bool c1 = member(factor1);
    bool c2 = member(factor2);
    if (c1 && c2)
        return FactorCompatibility{true, "chi_1 " + support_string(factor1) + " and chi_2 " +
                                             support_string(factor2) + " in row(lambda)"};
    std::string missing = !c1 ? "chi_1 " + support_string(factor1) : "chi_2 " + support_string(factor2);
    return FactorCompatibility{false, missing + " not in row(lambda)"};
}

// opposite (non-adjacent) pairs of a 4-vertex induced cycle
std::vector<std::uint64_t> square_diagonals(const SimplicialComplex& k, std::uint64_t factor) {
    std::vector<int> verts;
    for (std::uint64_t b = factor; b; b &= b - 1) verts.push_back(std::countr_zero(b));
    std::vector<std::uint64_t> out;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!((k.adjacency()[verts[i]] >> verts[j]) & 1))
                out.push_back((1ULL << verts[i]) | (1ULL << verts[j]));
    return out;  // exactly the two diagonals for an induced 4-cycle
}

}  // namespace

FactorCompatibility factor_compatible(int m1, int m2, const Gf2Matrix& lambda) {
    if (lambda.ncols() != m1 + m2)
        throw DimensionError("facet labeling mismatch: matrix has " +
                             std::to_string(lambda.ncols()) + " columns, expected " +
                             std::to_string(m1 + m2));
    std::uint64_t factor1 = (1ULL << m1) - 1;
    std::uint64_t factor2 = ((1ULL << m2) - 1) << m1;
    std::vector<std::uint64_t> d1, d2;
    if (m1 == 4 && m2 == 4) {
        d1 = {(1ULL << 0) | (1ULL << 2), (1ULL << 1) | (1ULL << 3)};
        d2 = {(1ULL << 4) | (1ULL << 6), (1ULL << 5) | (1ULL << 7)};
    }
    return factor_compatible_masks(lambda, factor1, factor2, d1, d2);
}

FactorCompatibility factor_compatible_on(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                         const PolygonProductRecognition& rec) {
    std::vector<std::uint64_t> d1, d2;
    if (rec.m1 == 4 && rec.m2 == 4) {
        d1 = square_diagonals(k, rec.factor1);
        d2 = square_diagonals(k, rec.factor2);
    }
    return factor_compatible_masks(lambda, rec.factor1, rec.factor2, d1, d2);
}

TorusWeightCheck torus_weight_check(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                    SubcomplexBettiCache* cache) {
    SubcomplexBettiCache local(k);
    SubcomplexBettiCache& betti = cache ? *cache : local;

    TorusWeightCheck out;
    out.b1_rz = rz_b1(k);

    // product splitting: a suspension pair with equal columns whose
    // complementary columns span a hyperplane avoiding that column
    std::uint64_t pair_mask = 0;
    for (auto [a, b] : suspension_pairs(k)) {
        if (lambda.column_code(a) != lambda.column_code(b)) continue;
        std::uint32_t v = lambda.column_code(a);
        std::uint32_t basis[8];
        int size = 0;
        for (int j = 0; j < lambda.ncols(); ++j) {
            if (j == a || j == b) continue;
            std::uint32_t c = lambda.column_code(j);
            for (int i = 0; i < size; ++i) c = std::min(c, c ^ basis[i]);
            if (c) basis[size++] = c;
        }
        std::uint32_t vr = v;
        for (int i = 0; i < size; ++i) vr = std::min(vr, vr ^ basis[i]);
        if (size == lambda.nrows() - 1 && vr != 0) {
            pair_mask = (1ULL << a) | (1ULL << b);
            break;
        }
    }
    out.product_split_found = pair_mask != 0;

    out.all_weights_are_4cycles = true;
    out.extended_all_covered = true;
    for (const Gf2Vector& omega : RowSpaceRange(lambda)) {
        if (omega.is_zero()) continue;
        long long b1 = betti.get(omega.bits())[2];
        if (b1 <= 0) continue;
        InducedSubcomplex sub = full_subcomplex(k, omega.bits());
        bool four_cycle = is_induced_cycle(sub.complex) == std::optional<int>(4);
        bool product_torus = pair_mask && (omega.bits() & pair_mask) == pair_mask;
        if (!four_cycle) out.all_weights_are_4cycles = false;
        if (!four_cycle && !product_torus) out.extended_all_covered = false;
        std::ostringstream line;
        line << "omega=" << support_string(omega.bits()) << " b~1=" << b1 << " "
             << (four_cycle          ? "induced-4-cycle torus"
                 : product_torus     ? "product torus (suspension pair in omega)"
                                     : "no torus certificate");
        out.weight_log.push_back(line.str());
    }
    out.prop_a1_applies = out.all_weights_are_4cycles && out.b1_rz > 4;
    out.extended_applies = out.extended_all_covered && out.b1_rz > 4;
    return out;
}

ObstructionReport symplectic_verdict(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                     const VerdictOptions& options, SubcomplexBettiCache* cache) {
    CharCheck check = is_characteristic(k, lambda);
    if (!check.ok)
        throw InvalidCharMapError("symplectic_verdict requires a characteristic matrix");

    SubcomplexBettiCache local(k);
    SubcomplexBettiCache& betti = cache ? *cache : local;

    ObstructionReport report;
    bool decided = false;
    auto decide = [&](VerdictTag tag, const std::string& reason) {
        if (!decided) {
            report.verdict = tag;
            report.reason = reason;
            decided = true;
        }
    };
    auto record = [&](const std::string& name, const std::string& outcome,
                      const std::string& evidence) {
        report.tests.push_back(TestRecord{name, outcome, evidence});
    };

    // (1) orientability
    bool orientable = is_orientable(k, lambda);
    record("orientable", orientable ? "PASS" : "FAIL", "1_m in row(lambda): " +
                                                           std::string(orientable ? "yes" : "no"));
    if (!orientable) decide(VerdictTag::NotSymplectic, "not orientable (Cor 2.3)");

    // (2) c-symplecticity
    CSymplecticResult cs;
    if (!decided) {
        cs = c_symplectic(k, lambda, &betti);
        record("c-symplectic", cs.value ? "PASS" : "FAIL",
               cs.value ? "witness weight " + support_string(cs.witness->bits())
                        : "no row-space weight with b~1(K_omega) > 0");
        if (!cs.value) decide(VerdictTag::NotSymplectic, "not c-symplectic (Prop 2.5)");
    } else {
        record("c-symplectic", "SKIP", "");
    }

    // (3) Euler characteristic mod 4
    if (!decided) {
        bool mod4 = euler_mod4(k);
        record("chi mod 4", mod4 ? "PASS" : "FAIL",
               "f_3(K) = " + std::to_string(k.facets().size()));
        if (!mod4)
            decide(VerdictTag::NotSymplectic,
                   "chi(M) not divisible by 4: f_3 = " + std::to_string(k.facets().size()) +
                       " (Prop 3.2)");
    } else {
        record("chi mod 4", "SKIP", "");
    }

    // (4) flagness classification
    std::optional<FlagnessClass> flag_class;
    if (!decided) {
        flag_class = flagness_class(k);
        bool is_flag = flag_class->kind == FlagnessClass::Kind::Flag;
        record("flagness", is_flag ? "PASS" : "FAIL", flag_class->to_string());
        switch (flag_class->kind) {
            case FlagnessClass::Kind::BoundaryOfSimplex:
                decide(VerdictTag::NotSymplectic, "K = boundary of the 4-simplex (Thm 4.6)");
                break;
            case FlagnessClass::Kind::MissingTriangle:
                decide(VerdictTag::NotSymplectic,
                       "missing triangle, K not a triangle-polygon product dual (Thm 4.6)");
                break;
            case FlagnessClass::Kind::MissingTetrahedron:
                decide(VerdictTag::NotSymplectic, "missing tetrahedron (Thm 4.6)");
                break;
            case FlagnessClass::Kind::PolygonTriangleJoin:
                decide(VerdictTag::NotSymplectic,
                       "K = ∂(P_3 x P_" + std::to_string(flag_class->polygon) +
                           ")*: no c-symplectic small cover (Prop 5.2)");
                break;
            case FlagnessClass::Kind::Flag:
                break;
        }
    } else {
        record("flagness", "SKIP", "");
    }

    // (5) product of two polygons: Thm 5.3 decides both ways
    std::optional<PolygonProductRecognition> rec;
    if (!decided) {
        rec = recognize_polygon_product_dual(k);
        record("product-recognition", rec ? "PASS" : "FAIL",
               rec ? "(" + std::to_string(rec->m1) + "," + std::to_string(rec->m2) + ")"
                   : "not a product of two polygons");
        if (rec) {
            FactorCompatibility fc = factor_compatible_on(k, lambda, *rec);
            record("factor-compatible", fc.compatible ? "PASS" : "FAIL", fc.certificate);
            if (fc.compatible)
                decide(VerdictTag::Symplectic, "factor-compatible over ∂(P_" +
                                                   std::to_string(rec->m1) + " x P_" +
                                                   std::to_string(rec->m2) + ")* (Thm 5.3); " +
                                                   fc.certificate);
            else
                decide(VerdictTag::NotSymplectic, "not factor-compatible (Thm 5.3); " +
                                                      fc.certificate);
        } else {
            record("factor-compatible", "SKIP", "no product structure");
        }
    } else {
        record("product-recognition", "SKIP", "");
        record("factor-compatible", "SKIP", "");
    }

    // (6) product with an interval: fibering certificate route (Thm 6.6)
    if (!decided && options.try_interval_product) {
        auto cert = find_interval_product_certificate(k, lambda);
        if (cert) {
            record("interval-product fibering", "PASS",
                   "suspension pair {" + std::to_string(cert->vertex_a) + "," +
                       std::to_string(cert->vertex_b) + "}, " + cert->certificate.detail);
            decide(VerdictTag::Symplectic,
                   "M = S^1 x N with N fibering over S^1 (Prop 6.1, Thurston route); " +
                       cert->certificate.detail);
        } else {
            record("interval-product fibering", "FAIL", "no certificate found");
        }
    }

    // (7) Prop A.1 pipeline, then Unknown
    if (!decided) {
        TorusWeightCheck torus = torus_weight_check(k, lambda, &betti);
        bool applies = torus.prop_a1_applies || torus.extended_applies;
        std::ostringstream ev;
        ev << "b1(RZ) = " << torus.b1_rz << "; strict 4-cycle check "
           << (torus.all_weights_are_4cycles ? "holds" : "fails");
        if (!torus.all_weights_are_4cycles)
            ev << "; product-torus extension "
               << (torus.extended_all_covered ? "covers all weights" : "leaves weights uncovered");
        record("Prop A.1", applies ? "FAIL" : "PASS", ev.str());
        if (applies)
            decide(VerdictTag::NotSymplectic,
                   "H_2 spanned by square-zero tori and b1(RZ) = " + std::to_string(torus.b1_rz) +
                       " > 4 (Prop A.1 adjunction)");
    } else {
        record("Prop A.1", "SKIP", "");
    }

    if (!decided)
        decide(VerdictTag::Unknown, "all implemented obstructions passed; no constructive "
                                    "certificate applies");
    return report;
}

SymplecticCount count_formula_symplectic(int m1, int m2) {
    if (m1 < 3 || m2 < 3) throw DimensionError("polygon sizes must be >= 3");
    if (m1 % 2 != 0 || m2 % 2 != 0)
        return SymplecticCount{0, "odd polygon factor admits no factor-compatible map (Lemma 5.1)"};
    if (m1 < 4 || m2 < 4)
        return SymplecticCount{0, "polygon factors must have at least 4 sides"};
    return SymplecticCount{(1LL << (m1 - 2)) + (1LL << (m2 - 2)) - 1, ""};
}

int diffeo_class_count(int m1, int m2) {
    if (m1 % 2 != 0 || m2 % 2 != 0 || m1 < 4 || m2 < 4)
        throw DimensionError("diffeo_class_count expects even m1, m2 >= 4");
    return m1 == m2 ? 2 : 3;
}

}  // namespace symcover
