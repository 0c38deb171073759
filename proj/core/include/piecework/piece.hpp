#pragma once

#include <compare>
#include <string>
#include <vector>

namespace piecework {

/*
 * A piece is the atom heaps are built from: a plain integer, a block
 * (a strictly increasing set of positive integers, written {i1<...<ir}),
 * or a path (a tuple of positive integers).  The defaulted three-way
 * comparison orders pieces by kind, then lexicographically by values;
 * that fixed total order is what makes layered heap forms canonical.
 */
struct Piece {
    enum class Kind { integer, block, path };

    Kind kind = Kind::integer;
    std::vector<int> values;

    static Piece integer(int v);
    static Piece block(std::vector<int> vals);   // throws unless strictly increasing, positive
    static Piece path(std::vector<int> vals);    // throws unless nonempty, positive

    auto operator<=>(const Piece&) const = default;
};

std::string to_string(const Piece& p);

} // namespace piecework
