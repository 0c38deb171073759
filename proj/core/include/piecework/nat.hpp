#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace piecework {

using Point = std::pair<int, int>;   // (x1, x2), both >= 0

/*
 * A non-ambiguous tree or forest as a plain set of lattice points.
 * Points are kept sorted and duplicate-free; the tree/forest structure
 * (each point's nearest predecessor up its column or left along its row)
 * is derived, never stored.
 */
struct PointSet {
    enum class Mode { tree, forest };

    Mode mode = Mode::tree;
    std::vector<Point> points;

    PointSet() = default;
    // Sorts; throws std::invalid_argument on duplicates or negative coordinates.
    PointSet(Mode mode, std::vector<Point> pts);

    bool operator==(const PointSet& other) const { return points == other.points; }
    bool operator<(const PointSet& other) const { return points < other.points; }
};

// Non-ambiguous tree conditions: (0,0) present, every other point has
// predecessors in exactly one direction (same column above, or same row
// to the left), and no empty line below/left of an occupied one.
bool validate_nat(const PointSet& ps);

// Forest variant: predecessors in at most one direction per point
// (points with none are roots), plus the no-empty-line condition.
bool validate_naf(const PointSet& ps);

// Each point's parent (nearest predecessor in its unique direction);
// roots map to nullopt.  Throws std::domain_error on invalid sets.
std::map<Point, std::optional<Point>> underlying_forest(const PointSet& ps);

// True iff every node has 0 or 2 children.
bool is_complete(const PointSet& ps);

// Childless points, sorted by first coordinate.
std::vector<Point> leaves(const PointSet& ps);

// All complete non-ambiguous trees with n leaves (2n-1 points inside the
// [0,n-1]^2 box).  n capped at 4.
std::vector<PointSet> enumerate_complete_nats(int n_leaves);

// All complete non-ambiguous forests with n leaves.  n capped at 3.
std::vector<PointSet> enumerate_complete_nafs(int n_leaves);

} // namespace piecework
