// SPDX-License-Identifier: Apache-2.0
#include "polytile/blocks.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace polytile {

bool isClass1(BlockKind k) {
    switch (k) {
        case BlockKind::N: case BlockKind::F: case BlockKind::E:
        case BlockKind::M: case BlockKind::MPlus: return true;
        default: return false;
    }
}

namespace {

// ---------------------------------------------------------------------------
// Layer-4 decoration tables, north-facing, block-local coordinates.
// Body box: x in [0,28), y in [0,7); the facing edge is y = 7. Bumps reach
// into y >= 7 (up to 14 voxels of the facing band pair); dents are carved
// from the body. Everything lives at z = kDecorZ.
//
// The compound bump is an L (legs 7 and 4) plus one cross whose near (N) and
// far (F) positions are exact z-180-rotation partners inside the band, which
// is what makes a mixed N/F pair collide on a full cross while N/N and F/F
// exactly fill the back-to-back M cavity.
// ---------------------------------------------------------------------------

std::vector<Cell> plusCells(int cx, int cy, int z) {
    std::vector<Cell> v;
    for (int d = -2; d <= 2; ++d) v.push_back({cx + d, cy, z});
    for (int d = -2; d <= 2; ++d)
        if (d != 0) v.push_back({cx, cy + d, z});
    return v;
}

void append(std::vector<Cell>& out, const std::vector<Cell>& more) {
    out.insert(out.end(), more.begin(), more.end());
}

// L bump shared by E, N, F: leg of 7 along y, foot of 4 along x at the root.
std::vector<Cell> lBumpCells() {
    std::vector<Cell> v;
    for (int y = 7; y <= 13; ++y) v.push_back({13, y, kDecorZ});
    for (int x = 14; x <= 16; ++x) v.push_back({x, 7, kDecorZ});
    return v;
}

std::vector<Cell> crossBumpNear() { return plusCells(16, 13, kDecorZ); }  // N
std::vector<Cell> crossBumpFar() { return plusCells(11, 14, kDecorZ); }   // F

// Side cross dents of N and F, mirror-symmetric pair.
std::vector<Cell> sideDentCells() {
    std::vector<Cell> v = plusCells(3, 4, kDecorZ);
    append(v, plusCells(24, 4, kDecorZ));
    return v;
}

// Side cross bumps of MPlus; they flush-fill the side dents of the facing
// N/F block across the row seam.
std::vector<Cell> sideBumpCells() {
    std::vector<Cell> v = plusCells(3, 9, kDecorZ);
    append(v, plusCells(24, 9, kDecorZ));
    return v;
}

// Joint cavity of one M block (north-facing): the half of the back-to-back
// band cavity that this block carries. Receives the facing block's L, the
// far chamber of the upward bump and the tail of the near chamber.
std::vector<Cell> mCavityCells() {
    std::vector<Cell> v;
    for (int y = 0; y <= 6; ++y) v.push_back({14, y, kDecorZ});          // facing L leg
    for (int x = 11; x <= 13; ++x) v.push_back({x, 6, kDecorZ});         // facing L foot
    for (int y = 0; y <= 2; ++y) v.push_back({11, y, kDecorZ});          // far chamber arm
    for (int x = 9; x <= 13; ++x)
        if (x != 11) v.push_back({x, 0, kDecorZ});                       // far chamber bar
    v.push_back({16, 0, kDecorZ});                                       // near chamber tail
    v.push_back({16, 1, kDecorZ});
    return v;
}

std::vector<Cell> xPlusBumpCells() {
    return {{7, 2, 3}, {7, 3, 3}, {7, 4, 3}, {8, 2, 3}, {8, 3, 3}};
}
std::vector<Cell> xMinusDentCells() {
    return {{0, 2, 3}, {0, 3, 3}, {0, 4, 3}, {1, 2, 3}, {1, 3, 3}};
}

std::vector<Cell> rotateCells(const std::vector<Cell>& cells, Axis axis, int turns,
                              Cell normalize_by) {
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (Cell c : cells) {
        for (int i = 0; i < turns; ++i) {
            switch (axis) {
                case Axis::Z: c = {-c.y, c.x, c.z}; break;
                case Axis::X: c = {c.x, -c.z, c.y}; break;
                case Axis::Y: c = {-c.z, c.y, c.x}; break;
            }
        }
        out.push_back(c + normalize_by);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Axis construct tables are derived from the X pair by the rotations that
// carry the east bump to north (Y) and up (Z). The cube is renormalized to
// [0,7)^3; rotating cell boxes about z maps cell (x,y) to (-y-1, x), hence
// the +6 shifts.
std::vector<Cell> axisCellsFor(BlockKind k, bool bump) {
    switch (k) {
        case BlockKind::XPlus: return bump ? xPlusBumpCells() : std::vector<Cell>{};
        case BlockKind::XMinus: return bump ? std::vector<Cell>{} : xMinusDentCells();
        case BlockKind::YPlus:
            return bump ? rotateCells(xPlusBumpCells(), Axis::Z, 1, {6, 0, 0}) : std::vector<Cell>{};
        case BlockKind::YMinus:
            return bump ? std::vector<Cell>{} : rotateCells(xMinusDentCells(), Axis::Z, 1, {6, 0, 0});
        case BlockKind::ZPlus:
            return bump ? rotateCells(xPlusBumpCells(), Axis::Y, 1, {6, 0, 0}) : std::vector<Cell>{};
        case BlockKind::ZMinus:
            return bump ? std::vector<Cell>{} : rotateCells(xMinusDentCells(), Axis::Y, 1, {6, 0, 0});
        default: throw std::invalid_argument("axisCellsFor: not an axis kind");
    }
}

std::vector<Cell> class1Bumps(BlockKind k) {
    std::vector<Cell> v;
    switch (k) {
        case BlockKind::E: v = lBumpCells(); break;
        case BlockKind::N: v = lBumpCells(); append(v, crossBumpNear()); break;
        case BlockKind::F: v = lBumpCells(); append(v, crossBumpFar()); break;
        case BlockKind::M: break;
        case BlockKind::MPlus: v = sideBumpCells(); break;
        default: throw std::invalid_argument("class1Bumps: not class 1");
    }
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Cell> class1Dents(BlockKind k) {
    std::vector<Cell> v;
    switch (k) {
        case BlockKind::N: case BlockKind::F: v = sideDentCells(); break;
        case BlockKind::M: case BlockKind::MPlus: v = mCavityCells(); break;
        case BlockKind::E: break;
        default: throw std::invalid_argument("class1Dents: not class 1");
    }
    std::sort(v.begin(), v.end());
    return v;
}

Cell rotate180InBlockFrame(Cell c) {
    // z-rotation by 180 degrees about the body box center, cube-exact.
    return {kBlockW - 1 - c.x, kBlockD - 1 - c.y, c.z};
}

} // namespace

std::vector<Cell> blockBumpCells(BlockKind kind) {
    if (isClass1(kind)) return class1Bumps(kind);
    if (kind == BlockKind::Cross) return {};
    return axisCellsFor(kind, true);
}

std::vector<Cell> blockDentCells(BlockKind kind) {
    if (isClass1(kind)) return class1Dents(kind);
    if (kind == BlockKind::Cross) return {};
    return axisCellsFor(kind, false);
}

Polycube buildCross() {
    std::vector<Cell> v;
    for (int x = 0; x <= 4; ++x) v.push_back({x, 2, 0});
    for (int y = 0; y <= 4; ++y)
        if (y != 2) v.push_back({2, y, 0});
    return Polycube(CellSet::fromCells(std::move(v)));
}

void emitClass1Block(std::vector<Cell>& out, BlockKind kind, Facing facing, Cell origin) {
    const auto dents = class1Dents(kind);
    std::unordered_set<std::int64_t> skip;
    auto key = [](const Cell& c) {
        return (static_cast<std::int64_t>(c.x) << 20) ^ (static_cast<std::int64_t>(c.y) << 10) ^ c.z;
    };
    for (const auto& d : dents)
        skip.insert(key(facing == Facing::North ? d : rotate180InBlockFrame(d)));
    for (int z = 0; z < kBlockH; ++z)
        for (int y = 0; y < kBlockD; ++y)
            for (int x = 0; x < kBlockW; ++x) {
                if (z == kDecorZ && skip.count(key({x, y, z}))) continue;
                out.push_back(Cell{x, y, z} + origin);
            }
    for (const auto& b : class1Bumps(kind)) {
        const Cell c = facing == Facing::North ? b : rotate180InBlockFrame(b);
        out.push_back(c + origin);
    }
}

void emitAxisConstruct(std::vector<Cell>& out, BlockKind kind, Cell origin) {
    const auto dents = axisCellsFor(kind, false);
    auto contains = [&](const Cell& c) {
        return std::find(dents.begin(), dents.end(), c) != dents.end();
    };
    for (int z = 0; z < 7; ++z)
        for (int y = 0; y < 7; ++y)
            for (int x = 0; x < 7; ++x)
                if (!contains({x, y, z})) out.push_back(Cell{x, y, z} + origin);
    for (const auto& b : axisCellsFor(kind, true)) out.push_back(b + origin);
}

Polycube buildBlock(BlockKind kind, Facing facing) {
    if (!isClass1(kind) && facing == Facing::South)
        throw std::invalid_argument("buildBlock: facing applies to class-1 kinds only");
    if (kind == BlockKind::Cross) return buildCross();
    std::vector<Cell> v;
    if (isClass1(kind)) {
        emitClass1Block(v, kind, facing, {0, 0, 0});
    } else {
        emitAxisConstruct(v, kind, {0, 0, 0});
    }
    return Polycube(canonicalized(CellSet::fromCells(std::move(v))));
}

std::string geometryTableText() {
    std::ostringstream out;
    out << "# layer-4 bump/dent cells per block kind\n";
    out << "# class-1 kinds listed north-facing, block origin at the south-west body corner\n";
    const std::pair<BlockKind, const char*> kinds[] = {
        {BlockKind::Cross, "cross"}, {BlockKind::N, "N"},          {BlockKind::F, "F"},
        {BlockKind::E, "E"},         {BlockKind::M, "M"},          {BlockKind::MPlus, "M+"},
        {BlockKind::XPlus, "X+"},    {BlockKind::XMinus, "X-"},    {BlockKind::YPlus, "Y+"},
        {BlockKind::YMinus, "Y-"},   {BlockKind::ZPlus, "Z+"},     {BlockKind::ZMinus, "Z-"},
    };
    for (const auto& [kind, name] : kinds) {
        for (const auto& c : blockBumpCells(kind))
            out << name << " bump " << c.x << ' ' << c.y << ' ' << c.z << '\n';
        for (const auto& c : blockDentCells(kind))
            out << name << " dent " << c.x << ' ' << c.y << ' ' << c.z << '\n';
    }
    return out.str();
}

std::vector<Cell> matingOffsets(const CellSet& a, std::span<const Cell> cavity, const CellSet& b,
                                const Box& window) {
    std::vector<Cell> out;
    for (int z = window.lo.z; z <= window.hi.z; ++z)
        for (int y = window.lo.y; y <= window.hi.y; ++y)
            for (int x = window.lo.x; x <= window.hi.x; ++x) {
                const Cell v{x, y, z};
                bool flush = true;
                for (const auto& c : cavity)
                    if (!b.contains(c - v)) { flush = false; break; }
                if (!flush) continue;
                if (a.intersects(b.translated(v))) continue;
                out.push_back(v);
            }
    return out;
}

} // namespace polytile
