#ifndef SYMCOVER_OBSTRUCTIONS_HPP
#define SYMCOVER_OBSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symcover/cohomology.hpp"

// Decision procedures for symplecticity of 4-dimensional small covers.
// NotSymplectic verdicts cite a proved obstruction, Symplectic verdicts carry
// a constructive certificate, everything else stays Unknown.

namespace symcover {

enum class VerdictTag { Symplectic, NotSymplectic, Unknown };

std::string to_string(VerdictTag tag);

struct TestRecord {
    std::string name;
    std::string outcome;  // PASS / FAIL / SKIP
    std::string evidence;
};

struct ObstructionReport {
    VerdictTag verdict = VerdictTag::Unknown;
    std::string reason;
    std::vector<TestRecord> tests;
};

struct CSymplecticResult {
    bool value = false;
    std::optional<Gf2Vector> witness;  // first row-space weight with b~_1(K_omega) > 0
};

/// Prop 2.5: orientable and some row-space weight with H~^1(K_omega;Q) != 0.
CSymplecticResult c_symplectic(const SimplicialComplex& k, const Gf2Matrix& lambda,
                               SubcomplexBettiCache* cache = nullptr);

/// Prop 3.2: the facet count of K is divisible by 4.
bool euler_mod4(const SimplicialComplex& k);

struct FlagnessClass {
    enum class Kind {
        Flag,
        MissingTriangle,
        MissingTetrahedron,
        BoundaryOfSimplex,
        PolygonTriangleJoin,
    };
    Kind kind = Kind::Flag;
    std::uint64_t witness_face = 0;  // the missing face, when applicable
    int polygon = 0;                 // m-3 for PolygonTriangleJoin

    std::string to_string() const;
};

/// Classification of a simplicial 3-sphere by its minimal non-faces.
FlagnessClass flagness_class(const SimplicialComplex& k);

struct FactorCompatibility {
    bool compatible = false;
    std::string certificate;  // the pairing or the two row-space memberships
};

/// Factor-compatibility over ∂(P_{m1} x P_{m2})* with the block facet
/// labeling (columns 0..m1-1 = first polygon).  For (4,4) the three
/// opposite-pair pairings are tested; otherwise chi_1, chi_2 in row(lambda).
FactorCompatibility factor_compatible(int m1, int m2, const Gf2Matrix& lambda);

/// Same test driven by a recognized product partition of an arbitrary K.
FactorCompatibility factor_compatible_on(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                         const PolygonProductRecognition& rec);

struct TorusWeightCheck {
    bool all_weights_are_4cycles = false;  // the strict per-weight sufficient check
    long long b1_rz = 0;
    bool prop_a1_applies = false;          // strict check && b1_rz > 4

    // documented extension: weights containing a suspension pair {a,b} with
    // lambda(a) = lambda(b) and a 3-dimensional complement span are carried
    // by product tori gamma x S^1 of the S^1 x N splitting of M
    bool product_split_found = false;
    bool extended_all_covered = false;
    bool extended_applies = false;         // extended coverage && b1_rz > 4
    std::vector<std::string> weight_log;   // one line per contributing weight
};

/// The Prop A.1 pipeline data for an orientable c-symplectic lambda.
TorusWeightCheck torus_weight_check(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                    SubcomplexBettiCache* cache = nullptr);

struct VerdictOptions {
    bool try_interval_product = true;  // step (6): search for a fibering certificate
};

/// The full decision tree: orientability, c-symplecticity, Euler mod 4,
/// flagness, product-of-polygons classification, interval-product fibering
/// certificate, Prop A.1 pipeline; Unknown when nothing decides.
ObstructionReport symplectic_verdict(const SimplicialComplex& k, const Gf2Matrix& lambda,
                                     const VerdictOptions& options = {},
                                     SubcomplexBettiCache* cache = nullptr);

struct SymplecticCount {
    long long count = 0;
    std::string reason;  // set when the count is 0 for parity reasons
};

/// Cor 5.4: 2^{m1-2} + 2^{m2-2} - 1 for even m1, m2 >= 4; otherwise 0.
SymplecticCount count_formula_symplectic(int m1, int m2);

/// Cor 5.9: 2 when m1 = m2, else 3.
int diffeo_class_count(int m1, int m2);

}  // namespace symcover

#endif
