#pragma once

#include "sepdisc/errors.hpp"
#include "sepdisc/rational.hpp"

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sepdisc {

enum class Orientation { CCW, CW, Collinear };
enum class Side { Above, On, Below };

// Travel direction of a directed line. A Rightward line points toward +x,
// so its left half-plane is the geometric "above" side; Leftward flips that.
enum class LineDir { Rightward, Leftward };

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

// Non-vertical by construction: vertical input is a parse/validation error
// (generic_shear removes verticality from raw configurations).
struct DirectedLine {
    Rational slope;
    Rational intercept;
    LineDir dir = LineDir::Rightward;

    Rational y_at(const Rational& x) const { return slope * x + intercept; }
    bool same_geometry(const DirectedLine& o) const {
        return slope == o.slope && intercept == o.intercept;
    }
};

struct PointSet {
    std::string label;
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
};

struct Hull {
    enum class Kind { Point, Segment, Polygon };

    Kind kind = Kind::Point;
    // Indices into the ambient point list, counterclockwise, starting at the
    // lexicographically least vertex. Size 1 and 2 carry the degenerate kinds.
    std::vector<int> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
};

// Sign of det(q - p, r - p).
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Compares p.y with the line value at p.x; ignores direction.
Side side_of_line(const Point& p, const DirectedLine& l);

// Side as seen by the travel direction: Leftward swaps Above and Below.
// Witness lines put their member set on the relative Below side.
Side relative_side(const Point& p, const DirectedLine& l);
Side flip(Side s);

// Duality convention: point (a,b) <-> line y = a*x - b, line y = c*x + d
// <-> point (c,-d). Above/below relations are preserved:
// p above l  <=>  dualize_line(l) above dualize_point(p).
DirectedLine dualize_point(const Point& p);
Point dualize_line(const DirectedLine& l);

Hull convex_hull(const PointSet& s);
Hull convex_hull_of(std::span<const Point> pts, std::span<const int> subset);

struct GeneralPositionReport {
    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<std::pair<int, int>> duplicate_points;
    std::vector<std::pair<int, int>> duplicate_x;

    bool ok() const {
        return collinear_triples.empty() && duplicate_points.empty() && duplicate_x.empty();
    }
    std::string describe() const;
};

GeneralPositionReport validate_general_position(const PointSet& p);

struct SimpleArrangementReport {
    std::vector<std::pair<int, int>> parallel_pairs;
    std::vector<std::array<int, 3>> concurrent_triples;

    bool ok() const { return parallel_pairs.empty() && concurrent_triples.empty(); }
    std::string describe() const;
};

SimpleArrangementReport validate_simple_arrangement(std::span<const DirectedLine> lines);

struct PlanarConfig {
    PointSet points;
    std::vector<DirectedLine> lines;
};

// x' = x + t*y on points, the induced map on lines. Requires 1 + t*slope > 0
// for every line so that all above/below relations are preserved.
PlanarConfig shear(const PlanarConfig& c, const Rational& t);

// Smallest t = 1/k (k = 1, 2, ...) under which all point x-coordinates are
// distinct and every line satisfies 1 + t*slope > 0. t = 0 is returned for
// configs that are already generic.
std::pair<Rational, PlanarConfig> auto_shear(const PlanarConfig& c);

// Exact helpers shared by the higher layers.
Point line_crossing(const DirectedLine& a, const DirectedLine& b);  // throws on parallel
bool point_on_segment(const Point& q, const Point& a, const Point& b);  // closed
bool point_in_hull(const Point& q, std::span<const Point> pts, const Hull& h);  // closed

bool lex_less(const Point& a, const Point& b);

}  // namespace sepdisc
