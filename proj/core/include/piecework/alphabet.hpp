#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "piecework/piece.hpp"

namespace piecework {

/*
 * An alphabet pairs a piece universe with its concurrence relation.
 * The relation must be symmetric and reflexive; the built-in ones are,
 * and arbitrary relations are property-checked in tests.  The tag names
 * the relation so heaps can be serialized and composed safely.
 */
class Alphabet {
public:
    using Relation = std::function<bool(const Piece&, const Piece&)>;

    Alphabet(std::string tag, Relation related,
             std::optional<std::vector<Piece>> universe = std::nullopt);

    const std::string& tag() const { return tag_; }
    bool related(const Piece& a, const Piece& b) const { return related_(a, b); }
    const std::optional<std::vector<Piece>>& universe() const { return universe_; }

    Alphabet with_universe(std::vector<Piece> u) const;

    // Integers related iff |i-j| <= 1.
    static Alphabet integers();
    // Blocks related iff crossing.
    static Alphabet blocks();
    // Paths related iff crossing.
    static Alphabet paths();
    // Lookup by tag ("int", "blocks", "paths"); throws on unknown tags.
    static Alphabet from_tag(const std::string& tag);

private:
    std::string tag_;
    Relation related_;
    std::optional<std::vector<Piece>> universe_;
};

} // namespace piecework
