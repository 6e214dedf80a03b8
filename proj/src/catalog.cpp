#include "symcover/catalog.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace symcover {

namespace {

// facet lists from the source constructions, 0-based
const std::vector<std::vector<int>> kLFig1Facets = {
    {0, 6, 8}, {0, 6, 9}, {0, 7, 8}, {0, 7, 9}, {1, 2, 5}, {1, 2, 6},
    {1, 3, 5}, {1, 3, 7}, {1, 6, 8}, {1, 7, 8}, {2, 4, 5}, {2, 4, 6},
    {3, 4, 5}, {3, 4, 7}, {4, 6, 9}, {4, 7, 9},
};

std::vector<std::vector<int>> digits(const std::vector<std::string>& words) {
    std::vector<std::vector<int>> out;
    for (const auto& w : words) {
        std::vector<int> f;
        for (char c : w) f.push_back(c - '0');
        out.push_back(std::move(f));
    }
    return out;
}

const std::vector<std::vector<int>> kLutz247882Facets = digits({
    "0123", "0124", "0135", "0146", "0156", "0237", "0247", "0357", "0467",
    "0567", "1238", "1248", "1358", "1468", "1568", "2379", "2389", "2479",
    "2489", "3579", "3589", "4679", "4689", "5679", "5689",
});

const std::vector<std::vector<int>> kLutz247880Facets = digits({
    "0123", "0124", "0135", "0146", "0156", "0237", "0247", "0357", "0468",
    "0478", "0568", "0578", "1239", "1249", "1359", "1469", "1569", "2379",
    "2479", "3579", "4689", "4789", "5689", "5789",
});

SimplicialComplex build_fixed_complex(const std::string& id) {
    if (id == "boundary-simplex-4") return SimplicialComplex::boundary_of_simplex(4);
    if (id == "L-fig1") return SimplicialComplex::from_faces(10, kLFig1Facets);
    if (id == "IxQ-fig1")
        return join(SimplicialComplex::two_points(), SimplicialComplex::from_faces(10, kLFig1Facets));
    if (id == "lutz_m10_247880") return SimplicialComplex::from_faces(10, kLutz247880Facets);
    if (id == "lutz_m10_247882") return SimplicialComplex::from_faces(10, kLutz247882Facets);
    throw UnknownIdError("unknown catalog id: " + id);
}

std::string provenance_of(const std::string& id) {
    if (id == "boundary-simplex-4") return "boundary of the 4-simplex";
    if (id == "L-fig1") return "dual of the 10-facet simple 3-polytope Q (Fig. 1)";
    if (id == "IxQ-fig1") return "dual of I x Q, the join of S^0 with L-fig1";
    if (id == "lutz_m10_247880") return "Lutz 3-sphere list, m=10, #247880 (dual of I x Q')";
    if (id == "lutz_m10_247882") return "Lutz 3-sphere list, m=10, #247882 (25 facets)";
    if (id.rfind("polygon-product-", 0) == 0) return "dual of a product of two polygons";
    return "";
}

void validate_entry(const CatalogEntry& entry) {
    ValidationReport report = entry.complex.dim() == 3
                                  ? validate_closed_3sphere_like(entry.complex)
                                  : validate_closed_2sphere_like(entry.complex);
    if (!report.ok)
        throw std::runtime_error("catalog entry " + entry.id +
                                 " failed validation: " + report.failures.front());
}

std::vector<std::uint32_t> codes(std::initializer_list<std::uint32_t> list) {
    return std::vector<std::uint32_t>(list);
}

}  // namespace

CatalogEntry catalog_get(const std::string& id) {
    static std::map<std::string, CatalogEntry> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(id);
    if (it != cache.end()) return it->second;

    CatalogEntry entry;
    entry.id = id;
    if (id.rfind("polygon-product-", 0) == 0) {
        std::istringstream tail(id.substr(std::string("polygon-product-").size()));
        int m1 = 0, m2 = 0;
        char dash = 0;
        if (!(tail >> m1 >> dash >> m2) || dash != '-' || m1 < 3 || m2 < 3)
            throw UnknownIdError("malformed polygon-product id: " + id);
        entry.complex = SimplicialComplex::polygon_product_dual(m1, m2);
    } else {
        entry.complex = build_fixed_complex(id);
    }
    entry.provenance = provenance_of(id);
    validate_entry(entry);
    cache.emplace(id, entry);
    return entry;
}

std::vector<std::string> catalog_complex_ids() {
    return {
        "boundary-simplex-4", "polygon-product-4-4", "polygon-product-5-4",
        "polygon-product-4-6", "polygon-product-6-6", "polygon-product-3-4",
        "polygon-product-3-6", "L-fig1",             "IxQ-fig1",
        "lutz_m10_247880",    "lutz_m10_247882",
    };
}

Gf2Matrix catalog_matrix(const std::string& id) {
    if (id == "example-5.5")
        return Gf2Matrix::from_column_codes(4, codes({1, 2, 1, 2, 7, 4, 8, 4, 8}));
    if (id == "mu-sec6")
        return Gf2Matrix::from_column_codes(3, codes({1, 1, 4, 4, 1, 2, 2, 2, 4, 4}));
    if (id == "lambda-A.2")
        return Gf2Matrix::from_column_codes(4, codes({1, 2, 4, 8, 14, 14, 4, 2, 8, 1}));
    if (id == "epsilon-sec6")
        return Gf2Matrix::from_column_codes(1, codes({0, 1, 0, 0, 0, 0, 1, 0, 0, 0}));
    if (id == "lambda-IxQ")
        return block_product(Gf2Matrix::from_column_codes(1, codes({1, 1})),
                             catalog_matrix("mu-sec6"));
    throw UnknownIdError("unknown catalog matrix id: " + id);
}

std::vector<std::string> catalog_matrix_ids() {
    return {"example-5.5", "mu-sec6", "lambda-A.2", "epsilon-sec6", "lambda-IxQ"};
}

namespace {

ParsedComplex complex_from_facets(int m, const std::vector<std::vector<int>>& facets) {
    ParsedComplex out;
    // detect containment normalization for the warning before canonicalizing
    std::vector<std::uint64_t> masks;
    for (const auto& f : facets) {
        std::uint64_t mask = 0;
        for (int v : f) mask |= 1ULL << v;
        masks.push_back(mask);
    }
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = 0; j < masks.size(); ++j)
            if (i != j && masks[i] != masks[j] && (masks[i] & masks[j]) == masks[i]) {
                out.warnings.push_back("facet " + std::to_string(i + 1) +
                                       " is contained in another facet; dropped");
                break;
            }
    out.complex = SimplicialComplex::from_faces(m, facets);
    return out;
}

}  // namespace

ParsedComplex parse_complex(const std::string& text) {
    // JSON mirror
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            nlohmann::json j = nlohmann::json::parse(text);
            int m = j.at("m").get<int>();
            std::vector<std::vector<int>> facets = j.at("facets").get<std::vector<std::vector<int>>>();
            return complex_from_facets(m, facets);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON complex: ") + e.what());
        }
    }

    std::vector<std::vector<int>> facets;
    int declared_m = -1;
    int max_vertex = -1;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        if (token.rfind("m=", 0) == 0) {
            try {
                declared_m = std::stoi(token.substr(2));
            } catch (...) {
                throw ParseError("line " + std::to_string(line_no) + ": bad m= header");
            }
            continue;
        }
        std::vector<int> facet;
        ls.clear();
        ls.str(line);
        while (ls >> token) {
            try {
                size_t pos = 0;
                int v = std::stoi(token, &pos);
                if (pos != token.size() || v < 0) throw std::invalid_argument("");
                facet.push_back(v);
                max_vertex = std::max(max_vertex, v);
            } catch (...) {
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex index '" +
                                 token + "'");
            }
        }
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError("no facets in input");
    int m = declared_m >= 0 ? declared_m : max_vertex + 1;
    if (max_vertex >= m) throw ParseError("vertex index exceeds declared m");
    return complex_from_facets(m, facets);
}

ParsedComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_complex(buffer.str());
}

Gf2Matrix parse_matrix(const std::string& text, int nrows) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r,") != std::string::npos) lines.push_back(line);
        }
    }
    if (lines.empty()) throw ParseError("empty matrix input");

    bool single_token = false;
    if (lines.size() == 1) {
        std::istringstream probe(lines[0]);
        std::string first, second;
        single_token = static_cast<bool>(probe >> first) && !(probe >> second);
    }
    bool comma_codes = text.find(',') != std::string::npos || (single_token && nrows > 1);
    if (comma_codes) {
        std::vector<std::uint32_t> column_codes;
        std::string joined = lines[0];
        std::replace(joined.begin(), joined.end(), ',', ' ');
        std::istringstream ls(joined);
        std::string token;
        while (ls >> token) {
            try {
                column_codes.push_back(static_cast<std::uint32_t>(std::stoul(token)));
            } catch (...) {
                throw ParseError("bad column code '" + token + "'");
            }
        }
        if (column_codes.empty()) throw ParseError("no column codes in input");
        try {
            return Gf2Matrix::from_column_codes(nrows, column_codes);
        } catch (const DimensionError& e) {
            throw ParseError(e.what());
        }
    }

    if (static_cast<int>(lines.size()) != nrows)
        throw ParseError("expected " + std::to_string(nrows) + " bit rows, got " +
                         std::to_string(lines.size()));
    std::vector<Gf2Vector> rows;
    int m = -1;
    for (int i = 0; i < nrows; ++i) {
        std::istringstream ls(lines[i]);
        std::vector<int> bits;
        std::string token;
        while (ls >> token) {
            if (token == "0")
                bits.push_back(0);
            else if (token == "1")
                bits.push_back(1);
            else
                throw ParseError("row " + std::to_string(i + 1) + ": bad bit '" + token + "'");
        }
        if (m < 0) m = static_cast<int>(bits.size());
        if (static_cast<int>(bits.size()) != m)
            throw ParseError("row " + std::to_string(i + 1) + ": ragged row length");
        Gf2Vector row(m);
        for (int j = 0; j < m; ++j)
            if (bits[j]) row.set(j, true);
        rows.push_back(row);
    }
    return Gf2Matrix(std::move(rows));
}

Gf2Matrix load_matrix(const std::string& path, int nrows) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix(buffer.str(), nrows);
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::ostringstream out;
    out << "m=" << k.m() << "\n";
    for (std::uint64_t f : k.facets()) {
        bool first = true;
        for (std::uint64_t b = f; b; b &= b - 1) {
            if (!first) out << " ";
            out << std::countr_zero(b);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

std::string serialize_matrix(const Gf2Matrix& m) {
    std::ostringstream out;
    if (m.nrows() <= 4) {
        for (int j = 0; j < m.ncols(); ++j) {
            if (j) out << ",";
            out << m.column_code(j);
        }
        out << "\n";
    } else {
        for (int i = 0; i < m.nrows(); ++i) {
            for (int j = 0; j < m.ncols(); ++j) {
                if (j) out << " ";
                out << (m.get(i, j) ? "1" : "0");
            }
            out << "\n";
        }
    }
    return out.str();
}

SimplicialComplex resolve_complex(const std::string& id_or_path) {
    try {
        return catalog_get(id_or_path).complex;
    } catch (const UnknownIdError&) {
        return load_complex(id_or_path).complex;
    }
}

Gf2Matrix resolve_matrix(const std::string& id_or_path, int nrows) {
    try {
        return catalog_matrix(id_or_path);
    } catch (const UnknownIdError&) {
        return load_matrix(id_or_path, nrows);
    }
}

}  // namespace symcover
