// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "polytile/assembler.hpp"
#include "polytile/voxel.hpp"

namespace polytile {

/// One "x y z" triple per line, sorted.
std::string cellsText(const CellSet& c);
CellSet parseCellsText(const std::string& text);  // throws std::runtime_error

/// ASCII art per z-slice: '#' filled, '.' empty, north up.
std::string layersText(const CellSet& c);

/// Wavefront OBJ of the voxel surface; shared corner vertices deduplicated.
std::string objText(const CellSet& c);

std::string reduceManifestJson(const WangTileSet& s, const ReducedTriple& triple);
std::string assemblyManifestJson(const Assembly& a);
std::string assemblyReportJson(const Assembly& a);

/// Materialized union of all placement cells (desk-scale assemblies only).
CellSet assemblyCells(const Assembly& a);

} // namespace polytile
