// symcover: combinatorial symplecticity analysis for 4-dimensional small
// covers and real moment-angle manifolds.
//
// Subcommands: analyze, enumerate, fiber-check, catalog, verify-paper.
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 input parse error.

#include <bit>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "symcover/catalog.hpp"
#include "symcover/enumeration.hpp"
#include "symcover/fibering.hpp"
#include "symcover/verify.hpp"

namespace {

using namespace symcover;
using nlohmann::json;

std::string support_csv(std::uint64_t mask) {
    std::string out;
    for (std::uint64_t b = mask; b; b &= b - 1) {
        if (!out.empty()) out += ",";
        out += std::to_string(std::countr_zero(b));
    }
    return out;
}

int cmd_analyze(const std::string& complex_arg, const std::string& matrix_arg, bool as_json,
                bool quiet, bool profile) {
    SimplicialComplex k = resolve_complex(complex_arg);
    Gf2Matrix lambda = resolve_matrix(matrix_arg, k.dim() + 1);

    CharCheck check = is_characteristic(k, lambda);
    if (!check.ok) {
        std::cerr << "matrix is not characteristic over the complex (failing face {"
                  << support_csv(*check.failing_face) << "})\n";
        return 1;
    }

    SubcomplexBettiCache cache(k);
    ObstructionReport report = symplectic_verdict(k, lambda, {}, &cache);

    if (as_json) {
        json out;
        out["complex"] = complex_arg;
        out["matrix"] = matrix_arg;
        out["verdict"] = to_string(report.verdict);
        out["reason"] = report.reason;
        out["tests"] = json::array();
        for (const TestRecord& t : report.tests)
            out["tests"].push_back({{"name", t.name}, {"outcome", t.outcome},
                                    {"evidence", t.evidence}});
        if (profile) {
            out["profile"] = json::array();
            for (const auto& [omega, betti] : hochster_profile(k, lambda, &cache).nonzero_entries())
                out["profile"].push_back(
                    {{"omega", support_csv(omega.bits())},
                     {"betti", {betti[0], betti[1], betti[2], betti[3], betti[4]}}});
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (!quiet) {
        for (const TestRecord& t : report.tests) {
            std::cout << "  " << t.name;
            for (size_t pad = t.name.size(); pad < 28; ++pad) std::cout << ' ';
            std::cout << t.outcome;
            if (!t.evidence.empty()) std::cout << "  " << t.evidence;
            std::cout << "\n";
        }
    }
    if (profile) {
        for (const auto& [omega, betti] : hochster_profile(k, lambda, &cache).nonzero_entries()) {
            std::cout << "omega=" << support_csv(omega.bits()) << " betti=";
            for (int i = 0; i < 5; ++i) std::cout << (i ? "," : "") << betti[i];
            std::cout << "\n";
        }
    }
    std::cout << "VERDICT: " << to_string(report.verdict) << " — " << report.reason << "\n";
    return 0;
}

int cmd_enumerate(const std::string& complex_arg, const std::string& filter, bool count_only,
                  int jobs, bool as_json, bool quiet) {
    SimplicialComplex k = resolve_complex(complex_arg);
    SearchConfig config;
    config.filter = parse_filter(filter);
    config.count_only = count_only;
    config.jobs = jobs;
    config.target_rank = k.dim() + 1;

    EnumerationResult result = enumerate_char_maps(k, config);

    if (as_json) {
        json out;
        out["total"] = result.count;
        if (!count_only) {
            out["matrices"] = json::array();
            for (const auto& cols : result.matrices) out["matrices"].push_back(cols);
        }
        std::cout << out.dump() << "\n";
        return 0;
    }
    if (!count_only && !quiet) {
        for (const auto& cols : result.matrices) {
            for (size_t j = 0; j < cols.size(); ++j)
                std::cout << (j ? "," : "") << cols[j];
            std::cout << "\n";
        }
    }
    std::cout << "TOTAL: " << result.count << "\n";
    return 0;
}

int cmd_fiber_check(const std::string& complex_arg, const std::string& matrix_arg,
                    const std::string& epsilon, bool as_json) {
    SimplicialComplex l = resolve_complex(complex_arg);
    Gf2Matrix mu = resolve_matrix(matrix_arg, l.dim() + 1);
    if (static_cast<int>(epsilon.size()) != l.m())
        throw ParseError("epsilon bitstring must have length " + std::to_string(l.m()));
    Gf2Vector eps(l.m());
    for (int i = 0; i < l.m(); ++i) {
        if (epsilon[i] != '0' && epsilon[i] != '1')
            throw ParseError("epsilon must be a bitstring of 0s and 1s");
        eps.set(i, epsilon[i] == '1');
    }

    FiberingCertificate cert = fibering_verdict(l, mu, eps);

    if (as_json) {
        json out;
        out["verdict"] = cert.kind == FiberingKind::Fibers ? "Fibers" : "Inconclusive";
        out["detail"] = cert.detail;
        out["affine"] = cert.affine_ok;
        out["divisor"] = cert.divisor;
        out["links"] = json::array();
        for (const LinkRow& row : cert.links)
            out["links"].push_back({{"g", row.g},
                                    {"P", row.ascending},
                                    {"N", row.descending},
                                    {"P_connected", row.ascending_connected},
                                    {"N_connected", row.descending_connected}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (!cert.links.empty()) {
        std::cout << " g | P_g | N_g\n";
        for (const LinkRow& row : cert.links) {
            std::string p, n;
            for (int i : row.ascending) p += (p.empty() ? "" : ",") + std::to_string(i);
            for (int i : row.descending) n += (n.empty() ? "" : ",") + std::to_string(i);
            std::cout << " " << row.g << " | " << p << " | " << n;
            if (!row.ascending_connected || !row.descending_connected)
                std::cout << "   (disconnected)";
            std::cout << "\n";
        }
    }
    std::cout << "affine: " << (cert.affine_ok ? "yes" : "no") << "\n";
    if (cert.divisor) std::cout << "image divisor: " << cert.divisor << "\n";
    std::cout << "VERDICT: " << (cert.kind == FiberingKind::Fibers ? "Fibers" : "Inconclusive")
              << " — " << cert.detail << "\n";
    return 0;
}

int cmd_catalog(const std::string& action, const std::string& id, bool as_json) {
    if (action == "list") {
        if (as_json) {
            json out;
            out["complexes"] = catalog_complex_ids();
            out["matrices"] = catalog_matrix_ids();
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << "complexes:\n";
        for (const auto& cid : catalog_complex_ids()) {
            CatalogEntry entry = catalog_get(cid);
            std::cout << "  " << cid << "  (m=" << entry.complex.m()
                      << ", facets=" << entry.complex.facets().size() << ")  "
                      << entry.provenance << "\n";
        }
        std::cout << "matrices:\n";
        for (const auto& mid : catalog_matrix_ids()) std::cout << "  " << mid << "\n";
        return 0;
    }
    // show
    try {
        CatalogEntry entry = catalog_get(id);
        std::cout << "# " << entry.id << ": " << entry.provenance << "\n"
                  << serialize_complex(entry.complex);
        return 0;
    } catch (const UnknownIdError&) {
        Gf2Matrix m = catalog_matrix(id);  // throws UnknownIdError if absent
        std::cout << "# " << id << " (n=" << m.nrows() << ")\n" << serialize_matrix(m);
        return 0;
    }
}

int cmd_verify_paper(const std::string& only, int jobs, bool as_json, bool quiet) {
    std::ostream* log = quiet || as_json ? nullptr : &std::cout;
    VerifyReport report = run_verify_paper(only, jobs, log);

    if (as_json) {
        json out;
        out["failed"] = report.failed;
        out["checks"] = json::array();
        for (const VerifyCheck& c : report.checks)
            out["checks"].push_back({{"block", c.block},
                                     {"name", c.name},
                                     {"expected", c.expected},
                                     {"actual", c.actual},
                                     {"pass", c.pass}});
        std::cout << out.dump(2) << "\n";
    } else {
        int total = 0, passed = 0;
        for (const VerifyCheck& c : report.checks) {
            ++total;
            if (c.pass) ++passed;
        }
        std::cout << passed << "/" << total << " checks passed\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial symplecticity toolkit for 4-dimensional small covers"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int jobs = 1;
    bool as_json = false, quiet = false;
    app.add_option("--jobs", jobs, "parallel worker count")->capture_default_str();
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--quiet", quiet, "suppress per-test output");

    std::string analyze_complex, analyze_matrix;
    bool analyze_profile = false;
    CLI::App* analyze = app.add_subcommand("analyze", "obstruction table and verdict");
    analyze->add_option("complex", analyze_complex, "catalog id or facet-list file")->required();
    analyze->add_option("matrix", analyze_matrix, "catalog id or matrix file")->required();
    analyze->add_flag("--profile", analyze_profile, "dump nonzero Hochster entries");

    std::string enum_complex, enum_filter = "none";
    bool enum_count_only = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "census of characteristic matrices");
    enumerate->add_option("complex", enum_complex, "catalog id or facet-list file")->required();
    enumerate->add_option("--filter", enum_filter,
                          "orientable|csymplectic|symplectic|factor-compatible");
    enumerate->add_flag("--count-only", enum_count_only, "print only the total");

    std::string fiber_complex, fiber_matrix, fiber_epsilon;
    CLI::App* fiber = app.add_subcommand("fiber-check", "Bestvina–Brady fibering certificate");
    fiber->add_option("complex", fiber_complex, "flag 2-sphere (catalog id or file)")->required();
    fiber->add_option("matrix", fiber_matrix, "characteristic matrix")->required();
    fiber->add_option("--epsilon", fiber_epsilon, "slope offset bitstring")->required();

    std::string catalog_action, catalog_id;
    CLI::App* catalog = app.add_subcommand("catalog", "built-in complexes and matrices");
    catalog->add_option("action", catalog_action, "list | show")->required();
    catalog->add_option("id", catalog_id, "entry id for show");

    std::string verify_only;
    CLI::App* verify = app.add_subcommand("verify-paper", "run the acceptance checks");
    verify->add_option("--only", verify_only, "run a single block (e.g. cor5.4 or crit6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze)
            return cmd_analyze(analyze_complex, analyze_matrix, as_json, quiet, analyze_profile);
        if (*enumerate)
            return cmd_enumerate(enum_complex, enum_filter, enum_count_only, jobs, as_json, quiet);
        if (*fiber) return cmd_fiber_check(fiber_complex, fiber_matrix, fiber_epsilon, as_json);
        if (*catalog) {
            if (catalog_action != "list" && catalog_action != "show") {
                std::cerr << "catalog action must be list or show\n";
                return 2;
            }
            if (catalog_action == "show" && catalog_id.empty()) {
                std::cerr << "catalog show needs an id\n";
                return 2;
            }
            return cmd_catalog(catalog_action, catalog_id, as_json);
        }
        if (*verify) return cmd_verify_paper(verify_only, jobs, as_json, quiet);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownIdError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
