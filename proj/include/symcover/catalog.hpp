#ifndef SYMCOVER_CATALOG_HPP
#define SYMCOVER_CATALOG_HPP

#include <string>
#include <vector>

#include "symcover/charmap.hpp"
#include "symcover/gf2.hpp"
#include "symcover/simplicial.hpp"

// Built-in library of every complex and matrix used in the constructions,
// plus the facet-list and matrix text formats.

namespace symcover {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownIdError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
    std::string id;
    SimplicialComplex complex;
    std::string provenance;
};

/// Fixed ids: boundary-simplex-4, L-fig1, IxQ-fig1, lutz_m10_247880,
/// lutz_m10_247882; parametric: polygon-product-<m1>-<m2>.
/// Every entry is validated (3-sphere-like or 2-sphere-like) on first access.
CatalogEntry catalog_get(const std::string& id);

/// Ids of the fixed complexes plus the polygon products used in the text.
std::vector<std::string> catalog_complex_ids();

/// Named matrices: example-5.5, mu-sec6, lambda-A.2, epsilon-sec6,
/// lambda-IxQ (the block product of Thm 6.6).
Gf2Matrix catalog_matrix(const std::string& id);
std::vector<std::string> catalog_matrix_ids();

struct ParsedComplex {
    SimplicialComplex complex;
    std::vector<std::string> warnings;  // facet containment normalizations
};

/// Facet-list format: one facet per line of whitespace-separated 0-based
/// vertex indices; `#` comments; optional `m=<int>` header; or the JSON
/// mirror {"m": int, "facets": [[int]]}.
ParsedComplex parse_complex(const std::string& text);
ParsedComplex load_complex(const std::string& path);

/// Matrix format: one line of comma-separated column codes (n <= 4), or
/// n lines of space-separated bits.
Gf2Matrix parse_matrix(const std::string& text, int nrows);
Gf2Matrix load_matrix(const std::string& path, int nrows);

std::string serialize_complex(const SimplicialComplex& k);
std::string serialize_matrix(const Gf2Matrix& m);

/// Resolves a CLI argument: a catalog id (complex or matrix) or a file path.
SimplicialComplex resolve_complex(const std::string& id_or_path);
Gf2Matrix resolve_matrix(const std::string& id_or_path, int nrows);

}  // namespace symcover

#endif
