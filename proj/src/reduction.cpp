// SPDX-License-Identifier: Apache-2.0
#include "polytile/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytile {

bool LevelPlan::isEncoding(std::int64_t level) const {
    return std::binary_search(encoding_levels.begin(), encoding_levels.end(), level);
}

int LevelPlan::ownerTile(std::int64_t level) const {
    if (!isEncoding(level)) throw std::invalid_argument("ownerTile: not an encoding level");
    int k = 0;
    while ((std::int64_t{1} << k) < level) ++k;
    return (k + 1) / 3 - 1;
}

int LevelPlan::exponentFor(int tile, int slot) const {
    if (tile < 0 || tile >= n_tiles || slot < 0 || slot > 2)
        throw std::invalid_argument("exponentFor: out of range");
    return 3 * (tile + 1) - 1 + slot;
}

LevelPlan makeLevelPlan(int n_tiles) {
    if (n_tiles < 1) throw std::invalid_argument("makeLevelPlan: n_tiles must be >= 1");
    const LevelSchedule sched = encoderLevels(n_tiles);
    return LevelPlan{n_tiles, sched.total_levels, sched.levels};
}

std::string encodeColor(int color, int t) {
    if (t < 1 || t > 30) throw std::invalid_argument("encodeColor: bad width");
    if (color < 0 || color >= (1 << t)) throw std::invalid_argument("encodeColor: color out of range");
    std::string word(static_cast<std::size_t>(t), 'N');
    for (int b = 0; b < t; ++b)
        if (color & (1 << (t - 1 - b))) word[static_cast<std::size_t>(b)] = 'F';
    return word;
}

int decodeColorWord(const std::string& word) {
    int c = 0;
    for (char ch : word) {
        if (ch != 'N' && ch != 'F') throw std::invalid_argument("decodeColorWord: bad letter");
        c = (c << 1) | (ch == 'F' ? 1 : 0);
    }
    return c;
}

namespace {

constexpr int kMaxExplicitTiles = 3;  // explicit voxel geometry cap

// Block kind for an encoding-level block position. Rows: 0 = south (west |
// south groups), 1 = north (north | east groups); within a group, columns run
// west to east, most significant bit first.
BlockKind encodingBlockKind(const WangTileSet& s, const LevelPlan& plan, std::int64_t level,
                            int row, int col) {
    const int t = s.bitsPerColor();
    const WangTile& tile = s.tiles()[static_cast<std::size_t>(plan.ownerTile(level))];
    const int color = row == 1 ? (col < t ? tile.north : tile.east)
                               : (col < t ? tile.west : tile.south);
    const int bit = col % t;
    return encodeColor(color, t)[static_cast<std::size_t>(bit)] == 'N' ? BlockKind::N
                                                                       : BlockKind::F;
}

void checkSize(const WangTileSet& s, const char* what) {
    if (s.tileCount() > kMaxExplicitTiles)
        throw std::invalid_argument(std::string(what) +
                                    ": explicit geometry is capped at 3 tiles (level count "
                                    "grows as 2^(3n+1))");
}

void emitBox(std::vector<Cell>& out, Cell lo, Cell dims) {
    for (int z = 0; z < dims.z; ++z)
        for (int y = 0; y < dims.y; ++y)
            for (int x = 0; x < dims.x; ++x) out.push_back({lo.x + x, lo.y + y, lo.z + z});
}

} // namespace

Polycube buildEncoder(const WangTileSet& s, const std::optional<EncoderFault>& fault) {
    checkSize(s, "buildEncoder");
    const LevelPlan plan = makeLevelPlan(s.tileCount());
    const int t = s.bitsPerColor();
    if (fault) {
        if (!plan.isEncoding(fault->level))
            throw std::invalid_argument("buildEncoder: fault must target an encoding level");
        if (fault->row < 0 || fault->row > 1 || fault->col < 0 || fault->col >= 2 * t)
            throw std::invalid_argument("buildEncoder: fault position out of range");
    }

    std::vector<Cell> cells;
    const std::int64_t H = plan.total_levels;
    cells.reserve(static_cast<std::size_t>((H / 2) * (14 * 14 * 7) +
                                           (H / 2) * (4LL * t) * (kBlockW * kBlockD * kBlockH + 20)));
    for (std::int64_t level = 1; level <= H; ++level) {
        const int z0 = static_cast<int>(7 * (level - 1));
        if (plan.isStructural(level)) {
            emitBox(cells, {28 * t - 7, 0, z0}, {14, 14, 7});
            continue;
        }
        const bool encoding = plan.isEncoding(level);
        for (int row = 0; row < 2; ++row) {
            for (int col = 0; col < 2 * t; ++col) {
                BlockKind kind = BlockKind::E;
                if (encoding) {
                    kind = encodingBlockKind(s, plan, level, row, col);
                    if (fault && fault->level == level && fault->row == row && fault->col == col)
                        kind = kind == BlockKind::N ? BlockKind::F : BlockKind::N;
                }
                emitClass1Block(cells, kind, row == 1 ? Facing::North : Facing::South,
                                {28 * col, 7 * row, z0});
            }
        }
    }
    return Polycube(CellSet::fromCells(std::move(cells)));
}

Polycube buildLinker(const WangTileSet& s) {
    checkSize(s, "buildLinker");
    const LevelPlan plan = makeLevelPlan(s.tileCount());
    const int t = s.bitsPerColor();
    const std::int64_t H = plan.total_levels;
    const int cols = 8 * t;  // 7-cube columns of the main part

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>((H / 2) * (32LL * t - 4) * 343 +
                                           (H / 2) * (4LL * t) * (kBlockW * kBlockD * kBlockH)));
    for (std::int64_t level = 1; level <= H; ++level) {
        const int z0 = static_cast<int>(7 * (level - 1));
        if (plan.isStructural(level)) {
            for (int row = 0; row < 4; ++row) {
                const int c_lo = row < 2 ? 0 : 1;
                const int c_hi = row < 2 ? cols : cols - 1;  // extension inset by one cube
                for (int c = c_lo; c < c_hi; ++c) {
                    const Cell origin{7 * c, 7 * row, z0};
                    BlockKind special = BlockKind::Cross;  // sentinel: plain cube
                    if (level == 1) {
                        if (row == 1 && c == 0) special = BlockKind::XMinus;
                        else if (row == 1 && c == cols - 1) special = BlockKind::XPlus;
                        else if (row == 0 && c == 0) special = BlockKind::YMinus;
                        else if (row == 3 && c == 4 * t) special = BlockKind::YPlus;
                        else if (row == 0 && c == cols - 1) special = BlockKind::ZMinus;
                    }
                    if (special == BlockKind::Cross) emitBox(cells, origin, {7, 7, 7});
                    else emitAxisConstruct(cells, special, origin);
                }
            }
            continue;
        }
        const bool matching = level == H;
        for (int row = 0; row < 2; ++row)
            for (int col = 0; col < 2 * t; ++col)
                emitClass1Block(cells, matching ? BlockKind::MPlus : BlockKind::M,
                                row == 1 ? Facing::North : Facing::South, {28 * col, 7 * row, z0});
        if (matching) {
            // The up construct shares the easternmost south-row 7-cube with the
            // matching-layer block; its bump rides on the cube's top face.
            const Cell cube_origin{7 * (cols - 1), 0, z0};
            for (const auto& b : blockBumpCells(BlockKind::ZPlus)) cells.push_back(b + cube_origin);
        }
    }
    return Polycube(CellSet::fromCells(std::move(cells)));
}

Polycube buildFillerTile() { return buildCross(); }

ReducedTriple reduce(const WangTileSet& s) {
    return ReducedTriple{buildFillerTile(), buildEncoder(s), buildLinker(s),
                         makeLevelPlan(s.tileCount()), s.bitsPerColor()};
}

namespace {

// Distinguishing bump cells per kind, block frame, facing applied.
bool allPresent(const CellSet& cells, const std::vector<Cell>& probe, Facing f, Cell origin) {
    for (const auto& p : probe) {
        Cell c = f == Facing::North ? p : Cell{kBlockW - 1 - p.x, kBlockD - 1 - p.y, p.z};
        if (!cells.contains(c + origin)) return false;
    }
    return true;
}

} // namespace

std::optional<WangTile> decodeEncodingLevel(const CellSet& encoder_cells, int t,
                                            std::int64_t level) {
    if (level % 2 == 1) throw std::invalid_argument("decodeEncodingLevel: structural level");
    const int z0 = static_cast<int>(7 * (level - 1));

    // Probe cells unique to the N / F cross positions (the vertical-arm tips).
    const std::vector<Cell> n_probe = {{16, 14, kDecorZ}, {16, 15, kDecorZ}};
    const std::vector<Cell> f_probe = {{11, 15, kDecorZ}, {11, 16, kDecorZ}};
    const std::vector<Cell> l_probe = {{13, 7, kDecorZ}, {13, 13, kDecorZ}};

    std::string rows[2];  // letters west-to-east per row
    int e_blocks = 0;
    for (int row = 0; row < 2; ++row) {
        const Facing f = row == 1 ? Facing::North : Facing::South;
        for (int col = 0; col < 2 * t; ++col) {
            const Cell origin{28 * col, 7 * row, z0};
            if (!allPresent(encoder_cells, l_probe, f, origin))
                throw std::invalid_argument("decodeEncodingLevel: level lacks the L bump");
            const bool has_n = allPresent(encoder_cells, n_probe, f, origin);
            const bool has_f = allPresent(encoder_cells, f_probe, f, origin);
            if (has_n && has_f)
                throw std::invalid_argument("decodeEncodingLevel: ambiguous block");
            if (!has_n && !has_f) { ++e_blocks; rows[row].push_back('E'); }
            else rows[row].push_back(has_n ? 'N' : 'F');
        }
    }
    if (e_blocks == 4 * t) return std::nullopt;  // non-encoding layer
    if (e_blocks != 0) throw std::invalid_argument("decodeEncodingLevel: mixed E and N/F");

    WangTile tile;
    tile.north = decodeColorWord(rows[1].substr(0, static_cast<std::size_t>(t)));
    tile.east = decodeColorWord(rows[1].substr(static_cast<std::size_t>(t)));
    tile.west = decodeColorWord(rows[0].substr(0, static_cast<std::size_t>(t)));
    tile.south = decodeColorWord(rows[0].substr(static_cast<std::size_t>(t)));
    return tile;
}

} // namespace polytile
