// SPDX-License-Identifier: Apache-2.0
#include "polytile/export.hpp"

#include <array>
#include <map>
#include <sstream>

#include <json.hpp>

namespace polytile {

std::string cellsText(const CellSet& c) {
    std::ostringstream out;
    for (const auto& cc : c.cells()) out << cc.x << ' ' << cc.y << ' ' << cc.z << '\n';
    return out.str();
}

CellSet parseCellsText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<Cell> cells;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        long long x, y, z;
        if (!(ls >> x)) continue;
        std::string extra;
        if (!(ls >> y >> z) || (ls >> extra))
            throw std::runtime_error("cell list parse error at line " + std::to_string(line_no));
        cells.push_back({static_cast<std::int32_t>(x), static_cast<std::int32_t>(y),
                         static_cast<std::int32_t>(z)});
    }
    if (cells.empty()) throw std::runtime_error("cell list parse error: no cells");
    return CellSet::fromCells(std::move(cells));
}

std::string layersText(const CellSet& c) {
    std::ostringstream out;
    if (c.empty()) return "";
    const Box b = *c.boundingBox();
    for (int z = b.lo.z; z <= b.hi.z; ++z) {
        out << "z=" << z << '\n';
        for (int y = b.hi.y; y >= b.lo.y; --y) {
            for (int x = b.lo.x; x <= b.hi.x; ++x) out << (c.contains({x, y, z}) ? '#' : '.');
            out << '\n';
        }
        if (z != b.hi.z) out << '\n';
    }
    return out.str();
}

std::string objText(const CellSet& c) {
    std::ostringstream vs, fs;
    std::map<std::array<int, 3>, int> vertex_ids;
    auto vid = [&](int x, int y, int z) {
        auto [it, inserted] = vertex_ids.try_emplace(std::array<int, 3>{x, y, z},
                                                     static_cast<int>(vertex_ids.size()) + 1);
        if (inserted) vs << "v " << x << ' ' << y << ' ' << z << '\n';
        return it->second;
    };
    auto quad = [&](std::array<std::array<int, 3>, 4> q) {
        fs << 'f';
        for (const auto& v : q) fs << ' ' << vid(v[0], v[1], v[2]);
        fs << '\n';
    };
    for (const auto& cc : c.cells()) {
        const int x = cc.x, y = cc.y, z = cc.z;
        if (!c.contains({x - 1, y, z}))
            quad({{{x, y, z}, {x, y, z + 1}, {x, y + 1, z + 1}, {x, y + 1, z}}});
        if (!c.contains({x + 1, y, z}))
            quad({{{x + 1, y, z}, {x + 1, y + 1, z}, {x + 1, y + 1, z + 1}, {x + 1, y, z + 1}}});
        if (!c.contains({x, y - 1, z}))
            quad({{{x, y, z}, {x + 1, y, z}, {x + 1, y, z + 1}, {x, y, z + 1}}});
        if (!c.contains({x, y + 1, z}))
            quad({{{x, y + 1, z}, {x, y + 1, z + 1}, {x + 1, y + 1, z + 1}, {x + 1, y + 1, z}}});
        if (!c.contains({x, y, z - 1}))
            quad({{{x, y, z}, {x, y + 1, z}, {x + 1, y + 1, z}, {x + 1, y, z}}});
        if (!c.contains({x, y, z + 1}))
            quad({{{x, y, z + 1}, {x + 1, y, z + 1}, {x + 1, y + 1, z + 1}, {x, y + 1, z + 1}}});
    }
    return vs.str() + fs.str();
}

std::string reduceManifestJson(const WangTileSet& s, const ReducedTriple& triple) {
    nlohmann::json j;
    j["tiles"] = s.tileCount();
    j["colors"] = s.colorCount();
    j["bits_per_color"] = triple.bits;
    j["total_levels"] = triple.plan.total_levels;
    j["encoding_levels"] = triple.plan.encoding_levels;
    nlohmann::json tile_levels = nlohmann::json::array();
    for (int i = 0; i < s.tileCount(); ++i) {
        nlohmann::json tl = nlohmann::json::array();
        for (int slot = 0; slot < 3; ++slot)
            tl.push_back(std::int64_t{1} << triple.plan.exponentFor(i, slot));
        tile_levels.push_back(tl);
    }
    j["tile_encoding_levels"] = tile_levels;
    j["volumes"] = {{"filler", volume(triple.filler.cells())},
                    {"encoder", volume(triple.encoder.cells())},
                    {"linker", volume(triple.linker.cells())}};
    j["files"] = {{"filler", "filler.cells"}, {"encoder", "encoder.cells"}, {"linker", "linker.cells"}};
    return j.dump(2) + "\n";
}

static nlohmann::json cellJson(const Cell& c) { return nlohmann::json::array({c.x, c.y, c.z}); }

std::string assemblyManifestJson(const Assembly& a) {
    nlohmann::json j;
    j["basis"] = {cellJson(a.domain.b1), cellJson(a.domain.b2), cellJson(a.domain.b3)};
    j["bits_per_color"] = a.bits;
    j["total_levels"] = a.plan.total_levels;
    j["torus"] = {{"width", a.torus.width}, {"height", a.torus.height}, {"grid", a.torus.grid}};
    nlohmann::json offs = nlohmann::json::array();
    for (int v = 0; v < a.offsets.height; ++v) {
        nlohmann::json row = nlohmann::json::array();
        for (int u = 0; u < a.offsets.width; ++u) row.push_back(a.offsets.at(u, v));
        offs.push_back(row);
    }
    j["offset_exponents"] = offs;
    nlohmann::json ps = nlohmann::json::array();
    for (const auto& p : a.placements) {
        const char* kind = p.kind == TileKind::Filler ? "filler"
                          : p.kind == TileKind::Encoder ? "encoder" : "linker";
        nlohmann::json pj = {{"kind", kind}, {"offset", cellJson(p.offset)}};
        if (p.faulted) pj["faulted"] = true;
        ps.push_back(pj);
    }
    j["placements"] = ps;
    return j.dump(2) + "\n";
}

std::string assemblyReportJson(const Assembly& a) {
    nlohmann::json j;
    j["verified"] = a.verified;
    j["failure_stage"] = a.failure_stage;
    j["torus_valid"] = a.torus_valid;
    j["decode_ok"] = a.decode_ok;
    j["domain_cells"] = a.partition.det;
    j["covered_cells"] = a.partition.covered;
    j["overlap_count"] = a.partition.overlap_count;
    j["hole_count"] = a.partition.hole_count;
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& c : a.partition.overlap_samples) samples.push_back(cellJson(c));
    j["overlap_samples"] = samples;
    std::int64_t counts[3] = {0, 0, 0};
    for (const auto& p : a.placements) ++counts[static_cast<int>(p.kind)];
    j["placements"] = {{"filler", counts[0]}, {"encoder", counts[1]}, {"linker", counts[2]}};
    return j.dump(2) + "\n";
}

CellSet assemblyCells(const Assembly& a) {
    std::vector<Cell> cells;
    for (const auto& sh : assemblyShapes(a))
        for (const auto& c : sh.shape->cells()) cells.push_back(c + sh.offset);
    return CellSet::fromCellsDedup(std::move(cells));
}

} // namespace polytile
