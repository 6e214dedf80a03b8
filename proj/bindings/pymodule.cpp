// Python bindings for the main operations: catalog access, characteristic-map
// checks, Betti profiles, the symplecticity verdict, enumeration, and the
// fibering certificate.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "symcover/catalog.hpp"
#include "symcover/enumeration.hpp"
#include "symcover/fibering.hpp"
#include "symcover/verify.hpp"

namespace py = pybind11;
using namespace symcover;

namespace {

SimplicialComplex complex_from_facets(int m, const std::vector<std::vector<int>>& facets) {
    return SimplicialComplex::from_faces(m, facets);
}

Gf2Matrix matrix_from_codes(int n, const std::vector<std::uint32_t>& codes) {
    return Gf2Matrix::from_column_codes(n, codes);
}

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t f : k.facets()) {
        std::vector<int> facet;
        for (std::uint64_t b = f; b; b &= b - 1) facet.push_back(std::countr_zero(b));
        out.push_back(std::move(facet));
    }
    return out;
}

Gf2Vector vector_from_bits(const std::vector<int>& bits) {
    Gf2Vector v(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) v.set(static_cast<int>(i), true);
    return v;
}

}  // namespace

PYBIND11_MODULE(_symcover, m) {
    m.doc() = "symplecticity obstructions for 4-dimensional small covers";

    py::register_exception<DimensionError>(m, "DimensionError");
    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init(&complex_from_facets), py::arg("m"), py::arg("facets"))
        .def_property_readonly("m", &SimplicialComplex::m)
        .def_property_readonly("dim", &SimplicialComplex::dim)
        .def_property_readonly("facets", &facet_lists)
        .def("has_face",
             [](const SimplicialComplex& k, const std::vector<int>& sigma) {
                 return k.has_face(std::span<const int>(sigma));
             })
        .def("__repr__", [](const SimplicialComplex& k) {
            return "<SimplicialComplex m=" + std::to_string(k.m()) + " facets=" +
                   std::to_string(k.facets().size()) + ">";
        });

    py::class_<Gf2Matrix>(m, "Gf2Matrix")
        .def(py::init(&matrix_from_codes), py::arg("n"), py::arg("column_codes"))
        .def_property_readonly("nrows", &Gf2Matrix::nrows)
        .def_property_readonly("ncols", &Gf2Matrix::ncols)
        .def_property_readonly("column_codes", &Gf2Matrix::column_codes)
        .def("__repr__", [](const Gf2Matrix& mat) {
            return "<Gf2Matrix " + std::to_string(mat.nrows()) + "x" +
                   std::to_string(mat.ncols()) + ">";
        });

    m.def("catalog_complex_ids", &catalog_complex_ids);
    m.def("catalog_matrix_ids", &catalog_matrix_ids);
    m.def("catalog_complex", [](const std::string& id) { return catalog_get(id).complex; });
    m.def("catalog_matrix", &catalog_matrix);
    m.def("parse_complex", [](const std::string& text) { return parse_complex(text).complex; });
    m.def("parse_matrix", &parse_matrix, py::arg("text"), py::arg("nrows"));
    m.def("serialize_complex", &serialize_complex);
    m.def("serialize_matrix", &serialize_matrix);

    m.def("is_characteristic", [](const SimplicialComplex& k, const Gf2Matrix& lambda) {
        return is_characteristic(k, lambda).ok;
    });
    m.def("is_orientable", &is_orientable);
    m.def("dj_canonical", &dj_canonical);
    m.def("reduced_betti_q",
          [](const SimplicialComplex& k) { return reduced_betti_q(k); });
    m.def("rz_betti", &rz_betti);
    m.def("rz_b1", &rz_b1);
    m.def("mod2_betti", &mod2_betti);
    m.def("euler_characteristic", &euler_characteristic);
    m.def("manifold_betti", [](const SimplicialComplex& k, const Gf2Matrix& lambda) {
        return hochster_profile(k, lambda).manifold_betti;
    });
    m.def("squaring_rank", [](const SimplicialComplex& k, const Gf2Matrix& lambda) {
        SquaringRank sq = squaring_rank(k, lambda);
        return py::make_tuple(sq.dim_h1, sq.dim_h2, sq.rank);
    });
    m.def("normal_form_lambda_beta", [](int m1, int m2, const std::vector<int>& beta) {
        return normal_form_lambda_beta(m1, m2, vector_from_bits(beta));
    });
    m.def("count_formula_symplectic",
          [](int m1, int m2) { return count_formula_symplectic(m1, m2).count; });
    m.def("diffeo_class_count", &diffeo_class_count);

    m.def("symplectic_verdict", [](const SimplicialComplex& k, const Gf2Matrix& lambda) {
        ObstructionReport report = symplectic_verdict(k, lambda);
        py::dict out;
        out["verdict"] = to_string(report.verdict);
        out["reason"] = report.reason;
        py::list tests;
        for (const TestRecord& t : report.tests) {
            py::dict row;
            row["name"] = t.name;
            row["outcome"] = t.outcome;
            row["evidence"] = t.evidence;
            tests.append(row);
        }
        out["tests"] = tests;
        return out;
    });

    m.def(
        "enumerate_char_maps",
        [](const SimplicialComplex& k, const std::string& filter, bool count_only, int jobs) {
            SearchConfig config;
            config.filter = parse_filter(filter);
            config.count_only = count_only;
            config.jobs = jobs;
            config.target_rank = k.dim() + 1;
            EnumerationResult result = enumerate_char_maps(k, config);
            return py::make_tuple(result.count, result.matrices);
        },
        py::arg("complex"), py::arg("filter") = "none", py::arg("count_only") = false,
        py::arg("jobs") = 1);

    m.def("fibering_verdict",
          [](const SimplicialComplex& l, const Gf2Matrix& mu, const std::vector<int>& eps) {
              FiberingCertificate cert = fibering_verdict(l, mu, vector_from_bits(eps));
              py::dict out;
              out["fibers"] = cert.kind == FiberingKind::Fibers;
              out["detail"] = cert.detail;
              out["divisor"] = cert.divisor;
              py::list links;
              for (const LinkRow& row : cert.links) {
                  py::dict r;
                  r["g"] = row.g;
                  r["P"] = row.ascending;
                  r["N"] = row.descending;
                  r["P_connected"] = row.ascending_connected;
                  r["N_connected"] = row.descending_connected;
                  links.append(r);
              }
              out["links"] = links;
              return out;
          });

    m.def("verify_paper", [](const std::string& only, int jobs) {
        VerifyReport report = run_verify_paper(only, jobs);
        py::list checks;
        for (const VerifyCheck& c : report.checks) {
            py::dict row;
            row["block"] = c.block;
            row["name"] = c.name;
            row["expected"] = c.expected;
            row["actual"] = c.actual;
            row["pass"] = c.pass;
            checks.append(row);
        }
        return py::make_tuple(report.failed, checks);
    }, py::arg("only") = "", py::arg("jobs") = 1);
}
