#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "piecework/alphabet.hpp"
#include "piecework/piece.hpp"

namespace piecework {

// Position of one piece occurrence inside a heap: layer index (0 = bottom)
// and position within the layer's sorted piece list.
struct Occurrence {
    int layer = 0;
    int pos = 0;
    auto operator<=>(const Occurrence&) const = default;
};

enum class Order { below, above, incomparable };

/*
 * A heap in canonical layered form.  The layers are the Foata
 * factorization of the underlying trace-monoid element: each layer is an
 * antichain (pairwise unrelated pieces, sorted by the canonical piece
 * order) and every piece of layer k+1 is related to at least one piece of
 * layer k.  Two words over the alphabet are equivalent exactly when they
 * drop to the same layered value, so structural equality of layers
 * decides heap equality.
 *
 * The partial order on occurrences is the transitive closure of
 * "related and strictly lower layer"; related occurrences are always
 * comparable and unrelated occurrences in one layer never are.
 */
class Heap {
public:
    explicit Heap(Alphabet a);
    // Builds from explicit layers; sorts each layer and checks the
    // antichain and support invariants.  Throws std::invalid_argument.
    Heap(Alphabet a, std::vector<std::vector<Piece>> layers);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::vector<Piece>>& layers() const { return layers_; }

    int size() const;
    bool empty() const { return layers_.empty(); }

    std::vector<Occurrence> occurrences() const;
    const Piece& piece_at(Occurrence o) const;   // throws std::out_of_range

    // Re-drops the pieces at the given occurrences, in layer-major order.
    // For downward- or upward-closed sets this is the induced sub-heap.
    Heap sub_heap(const std::vector<Occurrence>& occs) const;

    bool operator==(const Heap& other) const;
    bool operator<(const Heap& other) const;     // (tag, layers), for ordered sets

private:
    Alphabet alphabet_;
    std::vector<std::vector<Piece>> layers_;

    friend Heap heap_from_word(const std::vector<Piece>& word, const Alphabet& a);
};

// Drops the word piece by piece: each occurrence lands one layer above the
// highest earlier related occurrence.  Trace-equivalent words yield equal heaps.
Heap heap_from_word(const std::vector<Piece>& word, const Alphabet& a);

// Canonical word: layers bottom-up, each in piece order.
// heap_from_word(word_of_heap(h)) == h.
std::vector<Piece> word_of_heap(const Heap& h);

// Monoid composition: h2 dropped on top of h1.  Throws on alphabet-tag mismatch.
Heap compose(const Heap& h1, const Heap& h2);

// Order of x relative to y.  Equal occurrences count as below.
// Throws std::out_of_range on bad occurrences.
Order order_relation(const Heap& h, Occurrence x, Occurrence y);

// A trivial heap is a single antichain (at most one layer).
bool is_trivial(const Heap& h);

// A pyramid has exactly one maximal occurrence.
bool is_pyramid(const Heap& h);

// Occurrences with nothing above them.
std::vector<Occurrence> maximal_pieces(const Heap& h);

// All occurrences <= x, including x itself.
std::vector<Occurrence> down_set(const Heap& h, Occurrence x);

// Cover relation of the occurrence poset, edges (lower, upper).
std::vector<std::pair<Occurrence, Occurrence>> hasse_dag(const Heap& h);

} // namespace piecework
