#pragma once

#include <utility>

#include "piecework/heap.hpp"
#include "piecework/nat.hpp"
#include "piecework/structures.hpp"

namespace piecework {

/*
 * The four constructive correspondences.  Every map validates its stated
 * domain and throws std::domain_error outside it; each pair is a two-sided
 * inverse, which the test suite checks exhaustively at small sizes.
 */

// Permutation of [rn-1] with descent set {r,2r,...,rn-r}  ->  pyramid over
// the blocks of the induced partition, maximal block containing rn.
Heap g_perm_to_pyramid(const Permutation& p, int r);
Permutation g_pyramid_to_perm(const Heap& h);

// Complete non-ambiguous tree  ->  pyramid over the paths (i, sigma(i))
// read from the translated leaves, maximal path starting at 1.
Heap q_nat_to_pyramid(const PointSet& ps);
PointSet q_pyramid_to_nat(const Heap& h);

// Complete non-ambiguous forest  ->  heap: the trees' pyramids composed
// in order of leftmost-leaf first coordinate.
Heap s_naf_to_heap(const PointSet& ps);
PointSet s_heap_to_naf(const Heap& h);

// Pair of permutations with no common rise  ->  heap over the pieces
// (pi_i, xi_i) dropped in reverse index order.
Heap pair_to_heap(const Permutation& pi, const Permutation& xi);
std::pair<Permutation, Permutation> heap_to_pair(const Heap& h);

} // namespace piecework
