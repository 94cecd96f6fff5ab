// Copyright 2026 The optpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file povm_file.hpp
 * JSON interchange format for measurements (schema_version "1"):
 *
 *   {
 *     "schema_version": "1",
 *     "rep": {"kind": "SU2_COSET" | "U1", "n_copies": N, "dim": N+1},
 *     "grid": "...",                       (optional)
 *     "elements": [
 *       {"weight": w,
 *        "guess": {"theta": t, "psi": p},  (theta omitted for U1)
 *        "seed_state": [[re, im], ...],
 *        "matrix": [[re, im], ...]}        (row-major, dim*dim entries)
 *     ]
 *   }
 *
 * Doubles are written with the shortest representation that round-trips,
 * so parse(serialize(p)) reproduces every entry bit for bit.
 */

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "optpovm/povm.hpp"

namespace optpovm::cli {

/// Malformed or schema-violating input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[nodiscard]] nlohmann::json povm_to_json(const POVM& p);
/// Throws FormatError.
[[nodiscard]] POVM povm_from_json(const nlohmann::json& j);

[[nodiscard]] std::string serialize_povm(const POVM& p);
/// Throws FormatError.
[[nodiscard]] POVM parse_povm(const std::string& text);

/// Throws FormatError if the file cannot be read or parsed.
[[nodiscard]] POVM read_povm_file(const std::filesystem::path& path);

/// Writes `contents` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace optpovm::cli
