// SPDX-License-Identifier: Apache-2.0
#include "polytile/assembler.hpp"

#include <algorithm>
#include <utility>
#include <sstream>

namespace polytile {

int OffsetAssignment::at(int u, int v) const {
    u %= width; if (u < 0) u += width;
    v %= height; if (v < 0) v += height;
    return exponents[static_cast<std::size_t>(v) * width + u];
}

namespace {

struct OffsetSolver {
    const TorusTiling& torus;
    const WangTileSet& set;
    const LevelPlan plan;
    bool ew_free, ns_free;
    std::vector<int> slots;  // -1 = unassigned; else 0..2

    int tileAt(int u, int v) const { return torus.at(u, v); }

    bool constrained(int u1, int v1, int u2, int v2, bool ew) const {
        if (ew && ew_free) return false;
        if (!ew && ns_free) return false;
        return tileAt(u1, v1) == tileAt(u2, v2);
    }

    bool conflicts(int u, int v, int slot) const {
        const int w = torus.width, h = torus.height;
        struct Nb { int du, dv; bool ew; };
        const Nb nbs[4] = {{1, 0, true}, {-1, 0, true}, {0, 1, false}, {0, -1, false}};
        for (const auto& nb : nbs) {
            int uu = (u + nb.du + w) % w, vv = (v + nb.dv + h) % h;
            if (!constrained(u, v, uu, vv, nb.ew)) continue;
            if (uu == u && vv == v) return true;  // self-adjacent and constrained
            const int other = slots[static_cast<std::size_t>(vv) * w + uu];
            if (other == slot) return true;
        }
        return false;
    }

    bool solve(int pos) {
        const int w = torus.width, h = torus.height;
        if (pos == w * h) return true;
        const int u = pos % w, v = pos / w;
        for (int slot = 0; slot < 3; ++slot) {
            if (conflicts(u, v, slot)) continue;
            slots[static_cast<std::size_t>(pos)] = slot;
            if (solve(pos + 1)) return true;
            slots[static_cast<std::size_t>(pos)] = -1;
        }
        return false;
    }
};

} // namespace

OffsetAssignment chooseOffsets(const TorusTiling& torus, const WangTileSet& s) {
    OffsetSolver solver{torus, s, makeLevelPlan(s.tileCount()), s.allEastEqualsWest(),
                        s.allNorthEqualsSouth(),
                        std::vector<int>(static_cast<std::size_t>(torus.width) * torus.height, -1)};
    if (!solver.solve(0))
        throw StageError("offsets",
                         "cannot close the torus cycles without fully aligning two adjacent "
                         "encoder columns");
    OffsetAssignment out{torus.width, torus.height, {}};
    out.exponents.resize(solver.slots.size());
    for (int v = 0; v < torus.height; ++v)
        for (int u = 0; u < torus.width; ++u) {
            const std::size_t i = static_cast<std::size_t>(v) * torus.width + u;
            out.exponents[i] = solver.plan.exponentFor(torus.at(u, v), solver.slots[i]);
        }
    return out;
}

LinkerLattice linkerLattice(int t, std::int64_t total_levels) {
    return LinkerLattice{{56 * t, 0, 0},
                         {28 * t, 28, 0},
                         {0, 0, static_cast<std::int32_t>(7 * total_levels)}};
}

namespace {

// Asserts that construct `plus` flush-fills construct `minus` exactly at
// `expected` (and nowhere else nearby), via the mating oracle.
void checkConstructMating(BlockKind plus, BlockKind minus, Cell expected, const char* label) {
    std::vector<Cell> a_cells, b_cells;
    emitAxisConstruct(a_cells, minus, {0, 0, 0});
    emitAxisConstruct(b_cells, plus, {0, 0, 0});
    const CellSet a = CellSet::fromCells(std::move(a_cells));
    const CellSet b = CellSet::fromCells(std::move(b_cells));
    const auto cavity = blockDentCells(minus);
    const Box window{expected + Cell{-2, -2, -2}, expected + Cell{2, 2, 2}};
    const auto offsets = matingOffsets(a, cavity, b, window);
    if (offsets.size() != 1 || !(offsets[0] == expected))
        throw StageError("linker-frame", std::string("mating check failed for ") + label);
}

} // namespace

LinkerFrame linkerFrame(const WangTileSet& s, int repeats) {
    if (repeats < 1) throw std::invalid_argument("linkerFrame: repeats must be >= 1");
    const LevelPlan plan = makeLevelPlan(s.tileCount());
    const int t = s.bitsPerColor();
    const LinkerLattice lat = linkerLattice(t, plan.total_levels);

    // The X/Y/Z interlocks force exactly these neighbor offsets; fail loudly
    // if the construct tables ever drift. The bump cube sits one 7-cube
    // before the dented cube along the facing axis.
    checkConstructMating(BlockKind::XPlus, BlockKind::XMinus, {-7, 0, 0}, "X+ against X-");
    checkConstructMating(BlockKind::YPlus, BlockKind::YMinus, {0, -7, 0}, "Y+ against Y-");
    checkConstructMating(BlockKind::ZPlus, BlockKind::ZMinus, {0, 0, -7}, "Z+ against Z-");

    LinkerFrame frame{buildLinker(s), lat, {}};
    for (int a = 0; a < repeats; ++a)
        for (int b = 0; b < repeats; ++b)
            for (int c = 0; c < repeats; ++c)
                frame.offsets.push_back({lat.east.x * a + lat.north.x * b,
                                         lat.north.y * b,
                                         lat.up.z * c});
    return frame;
}

namespace {

Cell addScaled(Cell base, Cell v, int k) {
    return {base.x + v.x * k, base.y + v.y * k, base.z + v.z * k};
}

struct DomainContext {
    int t = 1;
    std::int64_t H = 0;
    LinkerLattice lat;
    LatticeBasis domain;
    int w = 0, h = 0;
};

DomainContext makeDomain(const WangTileSet& s, const TorusTiling& torus, const LevelPlan& plan) {
    DomainContext ctx;
    ctx.t = s.bitsPerColor();
    ctx.H = plan.total_levels;
    ctx.lat = linkerLattice(ctx.t, ctx.H);
    ctx.w = torus.width;
    ctx.h = torus.height;
    // Least common refinement of the linker lattice and the torus period:
    // w sheared row steps, h row steps minus h east steps, one full height.
    ctx.domain.b1 = {ctx.lat.north.x * ctx.w, ctx.lat.north.y * ctx.w, 0};
    ctx.domain.b2 = {ctx.lat.north.x * ctx.h - ctx.lat.east.x * ctx.h, ctx.lat.north.y * ctx.h, 0};
    ctx.domain.b3 = ctx.lat.up;
    return ctx;
}

// Torus cell simulated by encoder column (k, b): NE diagonal steps advance
// east, NW steps advance north.
std::pair<int, int> columnCell(int k, int b, int w, int h) {
    int u = (k + b) % w; if (u < 0) u += w;
    int v = (-k) % h; if (v < 0) v += h;
    return {u, v};
}

const std::vector<Cell>& crossShapeCells() {
    static const std::vector<Cell> cells = buildCross().cells().cells();
    return cells;
}

} // namespace

std::vector<PlacedShape> assemblyShapes(const Assembly& a) {
    std::vector<PlacedShape> shapes;
    shapes.reserve(a.placements.size());
    for (const auto& p : a.placements) {
        const CellSet* cs = nullptr;
        switch (p.kind) {
            case TileKind::Filler: cs = &a.filler.cells(); break;
            case TileKind::Linker: cs = &a.linker.cells(); break;
            case TileKind::Encoder:
                cs = p.faulted ? &a.faulted_encoder->cells() : &a.encoder.cells();
                break;
        }
        shapes.push_back({cs, p.offset});
    }
    return shapes;
}

namespace {

void fillGaps(Assembly& asm_out, const ResidueMap& map) {
    std::vector<std::uint8_t> counts(static_cast<std::size_t>(map.det()), 0);
    const auto shapes = assemblyShapes(asm_out);
    for (const auto& sh : shapes)
        for (const auto& c : sh.shape->cells()) {
            auto& n = counts[static_cast<std::size_t>(map.index(c + sh.offset))];
            if (n < 255) ++n;
        }

    const auto& cross = crossShapeCells();
    std::vector<Cell> component;
    std::vector<Cell> stack;
    for (std::int64_t i = 0; i < map.det(); ++i) {
        if (counts[static_cast<std::size_t>(i)] != 0) continue;
        // Collect the connected component of uncovered cells around i by
        // walking in Z^3 from the canonical representative.
        component.clear();
        stack.assign(1, map.representative(i));
        counts[static_cast<std::size_t>(i)] = 200;  // claimed marker
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            component.push_back(c);
            if (component.size() > cross.size() + 1) break;  // already not a cross
            const Cell nbs[6] = {{c.x + 1, c.y, c.z}, {c.x - 1, c.y, c.z}, {c.x, c.y + 1, c.z},
                                 {c.x, c.y - 1, c.z}, {c.x, c.y, c.z + 1}, {c.x, c.y, c.z - 1}};
            for (const auto& nb : nbs) {
                auto& n = counts[static_cast<std::size_t>(map.index(nb))];
                if (n == 0) { n = 200; stack.push_back(nb); }
            }
        }
        std::sort(component.begin(), component.end());
        bool is_cross = component.size() == cross.size();
        if (is_cross) {
            const Cell base = component.front() - cross.front();
            for (std::size_t j = 0; j < cross.size(); ++j)
                if (!(cross[j] + base == component[j])) { is_cross = false; break; }
        }
        if (!is_cross) {
            std::ostringstream msg;
            msg << "residual component of " << component.size() << " cells is not a cross:";
            for (std::size_t j = 0; j < component.size() && j < 12; ++j)
                msg << " (" << component[j].x << ',' << component[j].y << ',' << component[j].z << ')';
            throw StageError("gap-fill", msg.str());
        }
        asm_out.placements.push_back(
            {TileKind::Filler, component.front() - cross.front(), false});
    }
}

} // namespace

Assembly assembleAndVerify(const WangTileSet& s, const TorusTiling& torus,
                           const AssembleOptions& opts) {
    const LevelPlan plan = makeLevelPlan(s.tileCount());
    LinkerFrame frame = linkerFrame(s, 1);  // runs the construct mating self-check
    Assembly out{s.bitsPerColor(), plan, {}, buildFillerTile(), buildEncoder(s),
                 std::move(frame.linker)};
    out.torus = torus;

    out.torus_valid = validTorus(s, torus);
    if (!out.torus_valid && opts.enforce_valid_torus)
        throw StageError("torus", "tiling is not a valid torus tiling of the set");

    out.offsets = chooseOffsets(torus, s);

    const DomainContext ctx = makeDomain(s, torus, plan);
    out.domain = ctx.domain;

    for (int a = 0; a < ctx.h; ++a)
        for (int b = 0; b < ctx.w; ++b)
            out.placements.push_back(
                {TileKind::Linker,
                 addScaled(addScaled({0, 0, 0}, ctx.lat.east, a), ctx.lat.north, b), false});

    if (opts.fault) out.faulted_encoder = buildEncoder(s, opts.fault);

    // Encoder columns: one per linker, hanging on its east seam, vertically
    // shifted so the chosen encoding level meets the matching layer.
    for (int k = 0; k < ctx.h; ++k)
        for (int b = 0; b < ctx.w; ++b) {
            const auto [u, v] = columnCell(k, b, ctx.w, ctx.h);
            const std::int64_t lvl = std::int64_t{1} << out.offsets.at(u, v);
            const std::int64_t g = (ctx.H - lvl) % ctx.H;
            const Cell offset{ctx.lat.east.x * k + ctx.lat.north.x * b + 28 * ctx.t,
                              ctx.lat.north.y * b + 14,
                              static_cast<std::int32_t>(7 * g)};
            const bool faulted = opts.fault && k == 0 && b == 0;
            out.placements.push_back({TileKind::Encoder, offset, faulted});
        }

    const ResidueMap map(out.domain);
    fillGaps(out, map);

    out.partition = verifyPeriodicPartition(assemblyShapes(out), out.domain);

    // Decode round-trip: each column's aligned level must encode its torus tile.
    out.decode_ok = true;
    if (opts.run_decode_check) {
        for (int k = 0; k < ctx.h && out.decode_ok; ++k)
            for (int b = 0; b < ctx.w && out.decode_ok; ++b) {
                const auto [u, v] = columnCell(k, b, ctx.w, ctx.h);
                const std::int64_t lvl = std::int64_t{1} << out.offsets.at(u, v);
                const auto decoded = decodeEncodingLevel(out.encoder.cells(), ctx.t, lvl);
                if (!decoded || !(*decoded == s.tiles()[static_cast<std::size_t>(torus.at(u, v))]))
                    out.decode_ok = false;
            }
    }

    out.verified = out.partition.exact && out.decode_ok && out.torus_valid;
    if (!out.verified) {
        if (out.partition.overlap_count > 0) {
            bool all_matching = true;
            for (const auto& c : out.partition.overlap_samples)
                if ((c.z / 7) % ctx.H != ctx.H - 1) all_matching = false;
            out.failure_stage = all_matching ? "matching-layer overlap" : "overlap";
        } else if (out.partition.hole_count > 0) {
            out.failure_stage = "holes";
        } else if (!out.decode_ok) {
            out.failure_stage = "decode";
        } else {
            out.failure_stage = "invalid torus";
        }
    }
    return out;
}

} // namespace polytile
