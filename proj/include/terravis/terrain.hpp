#pragma once

#include "terravis/ordered_graph.hpp"
#include "terravis/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace terravis {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point&) const = default;
};

struct TerrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two vertices share an x-coordinate; `first` and `second` are the
/// offending indices in x-sorted order.
struct DuplicateAbscissa : TerrainError {
    DuplicateAbscissa(std::size_t a, std::size_t b)
        : TerrainError("duplicate x-coordinate at vertices " + std::to_string(a) + " and " +
                       std::to_string(b)),
          first(a), second(b) {}
    std::size_t first;
    std::size_t second;
};

struct TooSmall : TerrainError {
    TooSmall() : TerrainError("a terrain needs at least 2 vertices") {}
};

struct ParseError : TerrainError {
    ParseError(std::size_t line_no, const std::string& what)
        : TerrainError("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

/// An x-monotone polygonal chain with exact rational coordinates.
/// Vertices are kept sorted by strictly increasing x. Immutable.
class Terrain {
public:
    explicit Terrain(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 2) throw TooSmall();
        std::stable_sort(vertices_.begin(), vertices_.end(),
                         [](const Point& a, const Point& b) { return a.x < b.x; });
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
            if (vertices_[i].x == vertices_[i + 1].x) throw DuplicateAbscissa(i, i + 1);
    }

    std::size_t size() const { return vertices_.size(); }

    const Point& operator[](std::size_t i) const { return vertices_[i]; }

    const std::vector<Point>& vertices() const { return vertices_; }

    /// True iff vertices i and j see each other: every vertex strictly
    /// between them lies strictly below the segment (a collinear vertex
    /// blocks). Exact sign test, no division.
    bool sees(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        if (i > j) std::swap(i, j);
        const Point& p = vertices_[i];
        const Point& q = vertices_[j];
        const Rational dx = q.x - p.x; // > 0
        const Rational dy = q.y - p.y;
        for (std::size_t r = i + 1; r < j; ++r) {
            const Point& m = vertices_[r];
            if ((m.y - p.y) * dx >= dy * (m.x - p.x)) return false;
        }
        return true;
    }

    bool operator==(const Terrain&) const = default;

private:
    void check_index(std::size_t i) const {
        if (i >= vertices_.size())
            throw IndexError("terrain vertex " + std::to_string(i) + " out of range");
    }

    std::vector<Point> vertices_;
};

enum class VertexClass { Convex, Reflex, Endpoint };

inline const char* vertex_class_name(VertexClass c) {
    switch (c) {
    case VertexClass::Convex: return "convex";
    case VertexClass::Reflex: return "reflex";
    case VertexClass::Endpoint: return "endpoint";
    }
    return "?";
}

/// Labels every vertex: the two outermost are endpoints; an inner vertex
/// is convex iff its immediate neighbors see each other.
inline std::vector<VertexClass> classify_vertices(const Terrain& t) {
    std::vector<VertexClass> out(t.size(), VertexClass::Endpoint);
    for (std::size_t p = 1; p + 1 < t.size(); ++p)
        out[p] = t.sees(p - 1, p + 1) ? VertexClass::Convex : VertexClass::Reflex;
    return out;
}

/// Vertical shear (x, y) -> (x, m*x + y). Visibility-invariant.
inline Terrain shear(const Terrain& t, const Rational& m) {
    std::vector<Point> pts;
    pts.reserve(t.size());
    for (const Point& p : t.vertices()) pts.push_back({p.x, m * p.x + p.y});
    return Terrain(std::move(pts));
}

inline Terrain translate(const Terrain& t, const Rational& dx, const Rational& dy) {
    std::vector<Point> pts;
    pts.reserve(t.size());
    for (const Point& p : t.vertices()) pts.push_back({p.x + dx, p.y + dy});
    return Terrain(std::move(pts));
}

/// Uniform scaling by a positive factor.
inline Terrain scale(const Terrain& t, const Rational& factor) {
    if (factor <= 0) throw TerrainError("scale factor must be positive");
    std::vector<Point> pts;
    pts.reserve(t.size());
    for (const Point& p : t.vertices()) pts.push_back({factor * p.x, factor * p.y});
    return Terrain(std::move(pts));
}

/// Parses the terrain text format: one "x y" pair per line, `#` starts a
/// comment, blank lines ignored. Numerals as in parse_rational.
inline Terrain parse_terrain(std::string_view text) {
    std::vector<Point> pts;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::istringstream words{std::string(line)};
        std::string xs, ys, extra;
        if (!(words >> xs)) continue; // blank or comment-only
        if (!(words >> ys)) throw ParseError(line_no, "expected two numerals");
        if (words >> extra) throw ParseError(line_no, "trailing content '" + extra + "'");
        try {
            pts.push_back({parse_rational(xs), parse_rational(ys)});
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
        if (begin > text.size()) break;
    }
    return Terrain(std::move(pts));
}

/// Renders a terrain in the text format parse_terrain reads back exactly.
inline std::string terrain_to_text(const Terrain& t) {
    std::string out;
    for (const Point& p : t.vertices()) {
        out += to_string(p.x);
        out += ' ';
        out += to_string(p.y);
        out += '\n';
    }
    return out;
}

/// Builds the visibility graph in O(n^2): for each left endpoint, sweep
/// rightward keeping the maximum slope seen; j is visible iff slope(i,j)
/// strictly exceeds it. Exact rational comparisons throughout.
inline OrderedGraph build_visibility_graph(const Terrain& t) {
    const int n = static_cast<int>(t.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const Point& p = t[static_cast<std::size_t>(i)];
        // max slope so far as a fraction num/den, den > 0; empty until j = i+1
        Rational max_num = 0, max_den = 0;
        for (int j = i + 1; j < n; ++j) {
            const Point& q = t[static_cast<std::size_t>(j)];
            Rational num = q.y - p.y;
            Rational den = q.x - p.x;
            if (max_den == 0 || num * max_den > max_num * den) {
                edges.emplace_back(i, j);
                max_num = std::move(num);
                max_den = std::move(den);
            }
        }
    }
    return OrderedGraph::from_edges(n, edges);
}

} // namespace terravis
