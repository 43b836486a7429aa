// Raster glyphs for the letter scenes. Each glyph is 16x16 cells, top row
// first; every cell becomes a 4x4 block of the 64x64 grid.

#include <array>
#include <string_view>

namespace scatter::detail {

extern const std::array<std::array<std::string_view, 16>, 3> kLetterGlyphs;

const std::array<std::array<std::string_view, 16>, 3> kLetterGlyphs = {{
    {{
        "................",
        "................",
        "...########.....",
        "...##########...",
        "...##......###..",
        "...##.......##..",
        "...##.......##..",
        "...##.......##..",
        "...##.......##..",
        "...##.......##..",
        "...##.......##..",
        "...##......###..",
        "...##########...",
        "...########.....",
        "................",
        "................",
    }},
    {{
        "................",
        "................",
        "....########....",
        "...##########...",
        "...##...........",
        "...##...........",
        "...###..........",
        "....#######.....",
        ".....#######....",
        "..........###...",
        "...........##...",
        "...........##...",
        "...##########...",
        "....########....",
        "................",
        "................",
    }},
    {{
        "................",
        "................",
        "..##........##..",
        "..###......###..",
        "..####....####..",
        "..##.##..##.##..",
        "..##..####..##..",
        "..##...##...##..",
        "..##........##..",
        "..##........##..",
        "..##........##..",
        "..##........##..",
        "..##........##..",
        "..##........##..",
        "................",
        "................",
    }},
}};

}  // namespace scatter::detail
