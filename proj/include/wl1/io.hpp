#pragma once

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "wl1/bounds.hpp"
#include "wl1/rip.hpp"
#include "wl1/sharpness.hpp"
#include "wl1/solvers.hpp"
#include "wl1/types.hpp"

namespace wl1::io {

/// Matrices are plain CSV, row-major, one row per line, no header.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const Matrix& m);

/// Vectors are one value per line.
Vector read_vector(const std::string& path);
void write_vector(const std::string& path, const Vector& v);

/// Index sets are one line of comma-separated 0-based integers.
IndexSet parse_index_set(const std::string& text);
IndexSet read_index_set(const std::string& path);
std::string format_index_set(const IndexSet& s);

/// Deterministic float formatting (17 significant digits) used everywhere a
/// file is compared byte-for-byte.
std::string format_double(double v);

nlohmann::ordered_json to_json(const SolverResult& r);
nlohmann::ordered_json to_json(const GuaranteeReport& r);
nlohmann::ordered_json to_json(const Prop1Report& r);
nlohmann::ordered_json to_json(const RicValue& r);
nlohmann::ordered_json to_json(const RocValue& r);
nlohmann::ordered_json to_json(const SharpnessReport& r);

}  // namespace wl1::io
