#pragma once
// lattice.hpp - Colored lattice paths, their bijection with colored
// Schreier sets, counting, and rendering.
//
// A colored lattice path of height l in a grid of width n is determined by
// the strictly increasing columns of its l unit up-moves. The path starts
// on the x-axis at its first up column, moves up exactly one unit at a
// time, never takes two up-moves in the same column, and terminates at the
// final up-move; a rightward run of any length is a single geometric
// segment. The start column is at least l, so a path of height l is exactly
// the image of a Schreier set of size l under "elements = up columns".
// Coloring mirrors the set side: the cell (start column, 1) carries one of
// G_1 colors when the start column equals the height, one of G_2 colors
// when it exceeds it. The height-0 path is unique and carries G_2 colors.
//
// The family enumerated for a given k consists of all colored paths of
// height l >= k (the empty path included only at k = 0); its size is
// s_colored(n, k).

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gibon/combinatorics.hpp"
#include "gibon/natural.hpp"
#include "gibon/schreier.hpp"
#include "gibon/sequences.hpp"

namespace gibon {

enum class PathColorClass { StartEqualsHeight, StartExceedsHeight };

inline std::string_view to_string(PathColorClass c) {
    return c == PathColorClass::StartEqualsHeight ? "start_equals_height"
                                                  : "start_exceeds_height";
}

struct ColoredLatticePath {
    std::vector<int> up_columns; // strictly increasing, possibly empty
    int grid_width;
    PathColorClass color_class;
    std::uint64_t color_index;

    int height() const noexcept { return static_cast<int>(up_columns.size()); }

    friend bool operator==(const ColoredLatticePath&, const ColoredLatticePath&) = default;
};

inline void validate(const ColoredLatticePath& p) {
    if (p.grid_width < 1) {
        throw std::domain_error("ColoredLatticePath: grid width must be >= 1");
    }
    for (std::size_t i = 0; i < p.up_columns.size(); ++i) {
        if (p.up_columns[i] < 1) {
            throw std::domain_error("ColoredLatticePath: up columns must be positive");
        }
        if (i > 0 && p.up_columns[i] <= p.up_columns[i - 1]) {
            throw std::domain_error("ColoredLatticePath: up columns must be strictly increasing");
        }
    }
    if (p.up_columns.empty()) {
        if (p.color_class != PathColorClass::StartExceedsHeight) {
            throw std::domain_error("ColoredLatticePath: empty path is in the G_2 class");
        }
        return;
    }
    const int height = p.height();
    if (p.up_columns.front() < height) {
        throw std::domain_error("ColoredLatticePath: start column must be >= height");
    }
    if (p.up_columns.back() > p.grid_width) {
        throw std::domain_error("ColoredLatticePath: up columns must be <= grid width");
    }
    const bool start_equals = p.up_columns.front() == height;
    if (start_equals != (p.color_class == PathColorClass::StartEqualsHeight)) {
        throw std::domain_error("ColoredLatticePath: color class does not match start vs height");
    }
}

inline void validate(const ColoredLatticePath& p, const GibonacciSeed& seed) {
    validate(p);
    const Natural& palette =
        p.color_class == PathColorClass::StartEqualsHeight ? seed.g1 : seed.g2;
    if (Natural{p.color_index} >= palette) {
        throw std::domain_error("ColoredLatticePath: color index outside palette");
    }
}

/// Bijection, set side to path side: up columns are the set elements.
inline ColoredLatticePath path_from_set(const ColoredSchreierSet& s, int grid_width) {
    if (grid_width < 1) {
        throw std::domain_error("path_from_set: grid width must be >= 1");
    }
    if (!s.elements.empty() && s.elements.back() > grid_width) {
        throw std::domain_error("path_from_set: set element exceeds grid width");
    }
    const PathColorClass cls = s.color_class == ColorClass::MinEqualsSize
                                   ? PathColorClass::StartEqualsHeight
                                   : PathColorClass::StartExceedsHeight;
    return ColoredLatticePath{s.elements, grid_width, cls, s.color_index};
}

/// Bijection, path side to set side. Round-trips are the identity both ways.
inline ColoredSchreierSet set_from_path(const ColoredLatticePath& p) {
    validate(p);
    const ColorClass cls = p.color_class == PathColorClass::StartEqualsHeight
                               ? ColorClass::MinEqualsSize
                               : ColorClass::MinExceedsSize;
    return ColoredSchreierSet{p.up_columns, cls, p.color_index};
}

// Emits every colored path of height >= k in the width-n grid, in the image
// order of the Schreier enumeration. Stream length is s_colored(n, k).
template <typename Visitor>
void enumerate_paths(const GibonacciSeed& seed, int k, int n, Visitor&& visit) {
    if (n < 1) {
        throw std::domain_error("enumerate_paths: n must be >= 1");
    }
    if (k < 0 || k > (n + 1) / 2) {
        throw std::domain_error("enumerate_paths: k must satisfy 0 <= k <= floor((n+1)/2)");
    }
    enumerate_colored(CountQuery{n, k, seed}, [&](const ColoredSchreierSet& s) {
        visit(path_from_set(s, n));
    });
}

inline std::vector<ColoredLatticePath> collect_paths(const GibonacciSeed& seed, int k, int n) {
    std::vector<ColoredLatticePath> out;
    enumerate_paths(seed, k, n, [&](ColoredLatticePath p) { out.push_back(std::move(p)); });
    return out;
}

/// Monotone unit-step paths from (0,0) to (m,k): C(m+k, k).
inline Natural count_monotone(int k, int m) {
    if (k < 0 || m < 0) {
        throw std::domain_error("count_monotone: k and m must be >= 0");
    }
    return binomial(m + k, k);
}

/// Display names for small color indices, matching the usual R, B, G, ...
/// superscripts; larger indices fall back to "#<index>".
inline std::string color_letter(std::uint64_t index) {
    static constexpr std::string_view letters[] = {"R", "B", "G", "Y", "O", "P", "C", "M"};
    if (index < 8) return std::string(letters[index]);
    return "#" + std::to_string(index);
}

enum class RenderFormat { Ascii, Svg };

namespace detail {

// Fixed 8-color palette for SVG cell fills, cycled by color index.
inline constexpr std::string_view kSvgPalette[] = {
    "#e41a1c", "#377eb8", "#4daf4a", "#ffb300",
    "#ff7f00", "#984ea3", "#00bcd4", "#f781bf",
};

constexpr int kSvgUnit = 24;
constexpr int kSvgMargin = 12;

inline std::string render_ascii(const ColoredLatticePath& p) {
    const int n = p.grid_width;
    const int height = p.height();
    if (height == 0) {
        return "height 0, color " + std::to_string(p.color_index) + " (" +
               color_letter(p.color_index) + ")\n";
    }
    const int rows = 2 * height + 1;
    const int cols = 4 * n + 1;
    std::vector<std::vector<std::string>> canvas(
        static_cast<std::size_t>(rows), std::vector<std::string>(static_cast<std::size_t>(cols)));
    auto put = [&](int r, int x, std::string_view ch) {
        canvas[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)] = ch;
    };
    // Light grid.
    for (int r = 0; r < rows; ++r) {
        const bool gridline = r % 2 == 0;
        for (int x = 0; x < cols; ++x) {
            if (x % 4 != 0) {
                put(r, x, gridline ? "─" : " ");
                continue;
            }
            if (!gridline) {
                put(r, x, "│");
                continue;
            }
            const int c = x / 4;
            if (r == 0) {
                put(r, x, c == 0 ? "┌" : c == n ? "┐" : "┬");
            } else if (r == rows - 1) {
                put(r, x, c == 0 ? "└" : c == n ? "┘" : "┴");
            } else {
                put(r, x, c == 0 ? "├" : c == n ? "┤" : "┼");
            }
        }
    }
    auto grid_row = [&](int h) { return 2 * (height - h); };
    // Heavy path overlay: vertical runs, then horizontal runs, then joints.
    for (int i = 1; i <= height; ++i) {
        const int col = p.up_columns[static_cast<std::size_t>(i - 1)];
        put(grid_row(i) + 1, 4 * col, "┃");
    }
    for (int i = 1; i < height; ++i) {
        const int from = p.up_columns[static_cast<std::size_t>(i - 1)];
        const int to = p.up_columns[static_cast<std::size_t>(i)];
        for (int x = 4 * from + 1; x < 4 * to; ++x) {
            put(grid_row(i), x, "━");
        }
        put(grid_row(i), 4 * from, "┗");
        put(grid_row(i), 4 * to, "┛");
    }
    put(grid_row(0), 4 * p.up_columns.front(), "╹");
    put(grid_row(height), 4 * p.up_columns.back(), "╻");
    // Color mark inside cell (start column, 1).
    std::string mark = std::to_string(p.color_index);
    if (mark.size() > 3) mark = "###";
    while (mark.size() < 3) {
        if ((3 - mark.size()) % 2 == 1) {
            mark += ' ';
        } else {
            mark.insert(mark.begin(), ' ');
        }
    }
    const int cell_x = 4 * (p.up_columns.front() - 1) + 1;
    for (int j = 0; j < 3; ++j) {
        put(2 * height - 1, cell_x + j, std::string(1, mark[static_cast<std::size_t>(j)]));
    }
    std::string out;
    for (int r = 0; r < rows; ++r) {
        for (int x = 0; x < cols; ++x) {
            out += canvas[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)];
        }
        out += '\n';
    }
    return out;
}

// Appends the SVG body for one path, offset vertically by y_off. The trace
// is a single <path> element; the grid is drawn with <line> elements.
inline void append_svg_body(std::string& out, const ColoredLatticePath& p, int y_off) {
    const int u = kSvgUnit;
    const int m = kSvgMargin;
    const int n = p.grid_width;
    const int height = p.height();
    auto num = [](int v) { return std::to_string(v); };
    auto x_of = [&](int col) { return m + col * u; };
    if (height == 0) {
        out += "<text x=\"" + num(m) + "\" y=\"" + num(y_off + m + u / 2) +
               "\" font-family=\"monospace\" font-size=\"12\">height 0, color " +
               std::to_string(p.color_index) + "</text>\n";
        out += "<path d=\"M " + num(m) + " " + num(y_off + m + u) + "\" fill=\"none\"/>\n";
        return;
    }
    auto y_of = [&](int h) { return y_off + m + (height - h) * u; };
    // Colored cell: (start column, 1).
    const auto fill = kSvgPalette[p.color_index % 8];
    out += "<rect x=\"" + num(x_of(p.up_columns.front() - 1)) + "\" y=\"" + num(y_of(1)) +
           "\" width=\"" + num(u) + "\" height=\"" + num(u) + "\" fill=\"" +
           std::string(fill) + "\"/>\n";
    for (int h = 0; h <= height; ++h) {
        out += "<line x1=\"" + num(x_of(0)) + "\" y1=\"" + num(y_of(h)) + "\" x2=\"" +
               num(x_of(n)) + "\" y2=\"" + num(y_of(h)) + "\" stroke=\"#bbbbbb\"/>\n";
    }
    for (int c = 0; c <= n; ++c) {
        out += "<line x1=\"" + num(x_of(c)) + "\" y1=\"" + num(y_of(height)) + "\" x2=\"" +
               num(x_of(c)) + "\" y2=\"" + num(y_of(0)) + "\" stroke=\"#bbbbbb\"/>\n";
    }
    std::string d = "M " + num(x_of(p.up_columns.front())) + " " + num(y_of(0));
    for (int i = 1; i <= height; ++i) {
        if (i > 1) {
            d += " H " + num(x_of(p.up_columns[static_cast<std::size_t>(i - 1)]));
        }
        d += " V " + num(y_of(i));
    }
    out += "<path d=\"" + d + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
}

inline int svg_height(const ColoredLatticePath& p) {
    const int rows = p.height() == 0 ? 1 : p.height();
    return rows * kSvgUnit + 2 * kSvgMargin;
}

inline int svg_width(const ColoredLatticePath& p) {
    return p.grid_width * kSvgUnit + 2 * kSvgMargin;
}

} // namespace detail

/// Deterministic rendering of a single path, as a UTF-8 box drawing or a
/// standalone SVG document.
inline std::string render_path(const ColoredLatticePath& p, RenderFormat format) {
    validate(p);
    if (format == RenderFormat::Ascii) {
        return detail::render_ascii(p);
    }
    const int w = detail::svg_width(p);
    const int h = detail::svg_height(p);
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      std::to_string(w) + " " + std::to_string(h) + "\" width=\"" +
                      std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    detail::append_svg_body(out, p, 0);
    out += "</svg>\n";
    return out;
}

/// One standalone SVG document containing every given path, stacked
/// vertically, one <path> element per lattice path.
inline std::string render_paths_svg(const std::vector<ColoredLatticePath>& paths) {
    int w = 2 * detail::kSvgMargin + detail::kSvgUnit;
    int h = 0;
    for (const auto& p : paths) {
        validate(p);
        w = std::max(w, detail::svg_width(p));
        h += detail::svg_height(p);
    }
    if (h == 0) h = detail::kSvgUnit;
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                      std::to_string(w) + " " + std::to_string(h) + "\" width=\"" +
                      std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    int y_off = 0;
    for (const auto& p : paths) {
        detail::append_svg_body(out, p, y_off);
        y_off += detail::svg_height(p);
    }
    out += "</svg>\n";
    return out;
}

inline std::string to_json_line(const ColoredLatticePath& p) {
    std::string out = "{\"up_columns\":[";
    for (std::size_t i = 0; i < p.up_columns.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(p.up_columns[i]);
    }
    out += "],\"grid_width\":";
    out += std::to_string(p.grid_width);
    out += ",\"color_class\":\"";
    out += to_string(p.color_class);
    out += "\",\"color_index\":";
    out += std::to_string(p.color_index);
    out += '}';
    return out;
}

/// JSON-lines export: one object per path, then a {"total": N} summary line.
inline void write_paths_jsonl(std::ostream& os, const GibonacciSeed& seed, int k, int n) {
    enumerate_paths(seed, k, n, [&](const ColoredLatticePath& p) {
        os << to_json_line(p) << '\n';
    });
    os << "{\"total\":" << s_colored(CountQuery{n, k, seed}) << "}\n";
}

} // namespace gibon
