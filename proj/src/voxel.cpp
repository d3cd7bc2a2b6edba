// SPDX-License-Identifier: Apache-2.0
#include "polytile/voxel.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace polytile {

CellSet CellSet::fromCells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw std::invalid_argument("CellSet: duplicate cell");
    CellSet s;
    s.cells_ = std::move(cells);
    return s;
}

CellSet CellSet::fromCellsDedup(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    CellSet s;
    s.cells_ = std::move(cells);
    return s;
}

bool CellSet::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

CellSet CellSet::translated(const Cell& v) const {
    CellSet out;
    out.cells_.reserve(cells_.size());
    for (const auto& c : cells_) out.cells_.push_back(c + v);
    return out;  // translation preserves order
}

bool CellSet::intersects(const CellSet& other) const {
    auto a = cells_.begin();
    auto b = other.cells_.begin();
    while (a != cells_.end() && b != other.cells_.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

CellSet CellSet::intersection(const CellSet& other) const {
    CellSet out;
    std::set_intersection(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                          std::back_inserter(out.cells_));
    return out;
}

CellSet CellSet::unionWith(const CellSet& other) const {
    std::vector<Cell> merged;
    merged.reserve(size() + other.size());
    std::set_union(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end(),
                   std::back_inserter(merged));
    CellSet out;
    out.cells_ = std::move(merged);
    return out;
}

std::optional<Box> CellSet::boundingBox() const {
    if (cells_.empty()) return std::nullopt;
    Box b{cells_.front(), cells_.front()};
    for (const auto& c : cells_) {
        b.lo.x = std::min(b.lo.x, c.x); b.hi.x = std::max(b.hi.x, c.x);
        b.lo.y = std::min(b.lo.y, c.y); b.hi.y = std::max(b.hi.y, c.y);
        b.lo.z = std::min(b.lo.z, c.z); b.hi.z = std::max(b.hi.z, c.z);
    }
    return b;
}

std::int64_t volume(const CellSet& c) { return static_cast<std::int64_t>(c.size()); }

bool isConnected(const CellSet& c) {
    if (c.empty()) return true;
    const Box box = *c.boundingBox();
    const std::int64_t nx = box.hi.x - box.lo.x + 1;
    const std::int64_t ny = box.hi.y - box.lo.y + 1;
    const std::int64_t nz = box.hi.z - box.lo.z + 1;
    const std::int64_t nvox = nx * ny * nz;
    if (nvox > (std::int64_t{1} << 31))
        throw std::invalid_argument("isConnected: bounding box too large");
    auto idx = [&](const Cell& cc) {
        return ((std::int64_t)(cc.z - box.lo.z) * ny + (cc.y - box.lo.y)) * nx + (cc.x - box.lo.x);
    };
    std::vector<std::uint8_t> grid(static_cast<std::size_t>(nvox), 0);
    for (const auto& cc : c.cells()) grid[static_cast<std::size_t>(idx(cc))] = 1;

    std::vector<std::int64_t> stack{idx(c.cells().front())};
    grid[static_cast<std::size_t>(stack[0])] = 2;
    std::size_t seen = 1;
    while (!stack.empty()) {
        const std::int64_t cur = stack.back();
        stack.pop_back();
        const std::int64_t x = cur % nx, y = (cur / nx) % ny, z = cur / (nx * ny);
        const std::int64_t steps[6] = {+1, -1, +nx, -nx, +nx * ny, -nx * ny};
        const bool ok[6] = {x + 1 < nx, x > 0, y + 1 < ny, y > 0, z + 1 < nz, z > 0};
        for (int d = 0; d < 6; ++d) {
            if (!ok[d]) continue;
            const std::int64_t nb = cur + steps[d];
            if (grid[static_cast<std::size_t>(nb)] == 1) {
                grid[static_cast<std::size_t>(nb)] = 2;
                ++seen;
                stack.push_back(nb);
            }
        }
    }
    return seen == c.size();
}

Polycube::Polycube(CellSet cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw std::invalid_argument("Polycube: empty cell set");
    if (!isConnected(cells_)) throw std::invalid_argument("Polycube: cells not 6-connected");
}

CellSet canonicalized(const CellSet& c) {
    if (c.empty()) return c;
    const Box b = *c.boundingBox();
    return c.translated({-b.lo.x, -b.lo.y, -b.lo.z});
}

CellSet rotatedZ180(const CellSet& c) {
    std::vector<Cell> out;
    out.reserve(c.size());
    for (const auto& cc : c.cells()) out.push_back({-cc.x, -cc.y, cc.z});
    return canonicalized(CellSet::fromCells(std::move(out)));
}

CellSet rotated90(const CellSet& c, Axis axis, int quarter_turns) {
    int t = ((quarter_turns % 4) + 4) % 4;
    std::vector<Cell> cur(c.cells().begin(), c.cells().end());
    for (int i = 0; i < t; ++i) {
        for (auto& cc : cur) {
            switch (axis) {
                case Axis::Z: cc = {-cc.y, cc.x, cc.z}; break;   // +x -> +y
                case Axis::X: cc = {cc.x, -cc.z, cc.y}; break;   // +y -> +z
                case Axis::Y: cc = {-cc.z, cc.y, cc.x}; break;   // +x -> +z
            }
        }
    }
    return canonicalized(CellSet::fromCells(std::move(cur)));
}

namespace {
struct CellKeyHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t h = (std::uint64_t)(std::uint32_t)c.x * 0x9E3779B185EBCA87ull;
        h ^= (std::uint64_t)(std::uint32_t)c.y * 0xC2B2AE3D27D4EB4Full + (h << 6);
        h ^= (std::uint64_t)(std::uint32_t)c.z * 0x165667B19E3779F9ull + (h >> 3);
        return static_cast<std::size_t>(h);
    }
};
} // namespace

PackingReport verifyPacking(std::span<const PlacedShape> placements, const std::optional<Box>& window) {
    std::unordered_map<Cell, std::uint32_t, CellKeyHash> counts;
    for (const auto& p : placements) {
        for (const auto& c : p.shape->cells()) {
            const Cell g = c + p.offset;
            if (window && !window->contains(g)) continue;
            ++counts[g];
        }
    }
    std::vector<Cell> over;
    for (const auto& [cell, n] : counts)
        if (n >= 2) over.push_back(cell);
    PackingReport rep;
    rep.overlap_cells = CellSet::fromCellsDedup(std::move(over));
    rep.multiplicity_ok = rep.overlap_cells.empty();
    return rep;
}

namespace {

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

struct Vec3 {
    std::int64_t x, y, z;
};

} // namespace

ResidueMap::ResidueMap(const LatticeBasis& basis) {
    Vec3 v[3] = {{basis.b1.x, basis.b1.y, basis.b1.z},
                 {basis.b2.x, basis.b2.y, basis.b2.z},
                 {basis.b3.x, basis.b3.y, basis.b3.z}};
    // Triangularize by integer column operations: v[2] keeps the only nonzero z,
    // then v[1] the only nonzero y among the rest.
    auto reduce = [&](int i, int j, auto get) {
        // Euclid on components get(v[i]), get(v[j]); zero out get(v[i]).
        while (get(v[i]) != 0) {
            std::int64_t q = get(v[j]) != 0 ? floorDiv(get(v[j]), get(v[i])) : 0;
            if (get(v[j]) != 0) {
                v[j].x -= q * v[i].x; v[j].y -= q * v[i].y; v[j].z -= q * v[i].z;
            }
            std::swap(v[i], v[j]);
        }
    };
    auto getz = [](const Vec3& a) { return a.z; };
    reduce(0, 2, getz);
    reduce(1, 2, getz);
    auto gety = [](const Vec3& a) { return a.y; };
    reduce(0, 1, gety);
    if (v[2].z == 0 || v[1].y == 0 || v[0].x == 0)
        throw std::invalid_argument("ResidueMap: degenerate basis");
    if (v[2].z < 0) { v[2].x = -v[2].x; v[2].y = -v[2].y; v[2].z = -v[2].z; }
    if (v[1].y < 0) { v[1].x = -v[1].x; v[1].y = -v[1].y; }
    if (v[0].x < 0) { v[0].x = -v[0].x; }
    g1_ = v[0].x;
    g2_ = v[1].y; s21_ = v[1].x;
    g3_ = v[2].z; s31_ = v[2].x; s32_ = v[2].y;
    det_ = g1_ * g2_ * g3_;
}

std::int64_t ResidueMap::index(const Cell& c) const {
    const std::int64_t k3 = floorDiv(c.z, g3_);
    const std::int64_t zr = c.z - k3 * g3_;
    const std::int64_t y1 = c.y - k3 * s32_;
    const std::int64_t k2 = floorDiv(y1, g2_);
    const std::int64_t yr = y1 - k2 * g2_;
    const std::int64_t x1 = c.x - k3 * s31_ - k2 * s21_;
    std::int64_t xr = x1 % g1_;
    if (xr < 0) xr += g1_;
    return (zr * g2_ + yr) * g1_ + xr;
}

Cell ResidueMap::representative(std::int64_t index) const {
    const std::int64_t x = index % g1_;
    const std::int64_t y = (index / g1_) % g2_;
    const std::int64_t z = index / (g1_ * g2_);
    return {static_cast<std::int32_t>(x), static_cast<std::int32_t>(y), static_cast<std::int32_t>(z)};
}

PartitionReport verifyPeriodicPartition(std::span<const PlacedShape> placements,
                                        const LatticeBasis& basis) {
    const ResidueMap map(basis);
    PartitionReport rep;
    rep.det = map.det();
    std::vector<std::uint8_t> counts(static_cast<std::size_t>(map.det()), 0);
    constexpr std::size_t kSampleCap = 32;
    for (const auto& p : placements) {
        for (const auto& c : p.shape->cells()) {
            const std::int64_t i = map.index(c + p.offset);
            auto& n = counts[static_cast<std::size_t>(i)];
            if (n < 255) ++n;
            ++rep.covered;
            if (n == 2) {
                ++rep.overlap_count;
                if (rep.overlap_samples.size() < kSampleCap)
                    rep.overlap_samples.push_back(map.representative(i));
            }
        }
    }
    for (std::int64_t i = 0; i < map.det(); ++i) {
        if (counts[static_cast<std::size_t>(i)] == 0) {
            ++rep.hole_count;
            if (rep.hole_samples.size() < kSampleCap)
                rep.hole_samples.push_back(map.representative(i));
        }
    }
    rep.exact = rep.overlap_count == 0 && rep.hole_count == 0 && rep.covered == rep.det;
    return rep;
}

} // namespace polytile
