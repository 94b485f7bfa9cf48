#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Serializes to the ring JSON format:
///   {"name":..,"order":n,"zero":z,"one":o,"add":[[..]],"mul":[[..]],"labels":[..]?}
/// Tables are row-major (add[i][j] = i + j). Output is deterministic, so
/// load followed by re-serialization reproduces the same bytes.
std::string ring_to_json(const FiniteRing& ring);

/// Parses and validates. Throws FormatError for malformed JSON or missing
/// keys, then whatever validate_ring throws.
FiniteRing ring_from_json(std::string_view text);

FiniteRing load_ring(const std::filesystem::path& path);
void save_ring(const FiniteRing& ring, const std::filesystem::path& path);

/// Bimodule format:
///   {"name":..,"order":k,"zero":z,"add":[[..]],"left":[[..]],"right":[[..]]}
/// with left[s][m] = s.m (|S| rows) and right[m][t] = m.t (k rows). Shape
/// only; call validate_bimodule against the acting rings.
Bimodule bimodule_from_json(std::string_view text);
Bimodule load_bimodule(const std::filesystem::path& path);
std::string bimodule_to_json(const Bimodule& m, std::size_t left_order, std::size_t right_order);

}  // namespace ringlab
