#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "ncmod/algebra.hpp"
#include "ncmod/amodule.hpp"
#include "ncmod/genmatrix.hpp"
#include "ncmod/hom.hpp"

namespace ncmod {

using Json = nlohmann::ordered_json;

/// Resolves a builtin name first, then a structure-constants JSON file path.
Algebra::Ptr resolve_algebra(const std::string& name_or_path);

/// Structure-constants file:
/// { "name", "dim", "basis", "unit": index|null,
///   "constants": [ {"i", "j", "k", "c"}, ... ] }
/// Omitted triples are zero; duplicate triples are an error.
Algebra::Ptr algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra::Ptr& algebra);

/// Matrix file: { "rows", "cols", "algebra": name|null, "entries": [[...]] };
/// entries are coordinate strings for algebra matrices, rational strings for
/// plain rational matrices.
struct LoadedMatrix {
    std::optional<AlgMatrix> algebra_matrix;
    std::optional<DMatrix> rational_matrix;
    Algebra::Ptr algebra; // null for rational matrices
};
LoadedMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const AlgMatrix& m, const Algebra::Ptr& algebra);
Json matrix_to_json(const DMatrix& m);

/// Vector/basis file: { "algebra", "orientation", "vectors": [[elem,...],...] }.
struct LoadedVectors {
    Algebra::Ptr algebra;
    Orientation orientation;
    std::vector<OrientedVector> vectors;
};
LoadedVectors vectors_from_json(const Json& j);
Json vectors_to_json(const LoadedVectors& v);

/// Hom file: { "algebra", "orientation", "matrix": [[elem,...]],
///             "alg_hom": [[rational,...]] (optional),
///             "source_algebra": name (optional) }.
ModuleHom hom_from_json(const Json& j);
Json hom_to_json(const ModuleHom& h);

/// Reads and parses a JSON file; every failure maps to FileError.
Json read_json_file(const std::string& path);
Algebra::Ptr load_algebra_file(const std::string& path);
LoadedMatrix load_matrix_file(const std::string& path);
LoadedVectors load_vectors_file(const std::string& path);
ModuleHom load_hom_file(const std::string& path);

} // namespace ncmod
