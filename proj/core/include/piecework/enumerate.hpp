#pragma once

#include <string>
#include <vector>

#include "piecework/alphabet.hpp"
#include "piecework/heap.hpp"

namespace piecework {

// All distinct heaps whose content is exactly the given multiset:
// every ordering of the pieces is dropped and the results deduplicated
// by canonical form.  |pieces| capped at 9.
std::vector<Heap> enumerate_heaps(std::vector<Piece> pieces, const Alphabet& a);

// Pyramids over the blocks of all partitions in Pi_{n,r}.  With
// restrict_max, only those whose maximal block contains rn (the count
// equals r_n); without, all of them (n times as many).
long long count_pyramids_blocks(int n, int r, bool restrict_max);

// Pyramids over the paths of all (r-1)-tuples in Q_{n,r}.  With
// restrict_max, only those whose maximal path starts at 1.
long long count_pyramids_paths(int n, int r, bool restrict_max);

// Heaps (not just pyramids) over the paths of every permutation of [n];
// equals tau(n) and omega(n).
long long count_heaps_paths(int n);

// Checks, in commuting piece variables truncated to total degree dmax,
// that (sum over trivial heaps of (-1)^|T| x^T) * (sum over heaps of x^H) = 1.
// Requires a finite universe.  On failure, first_mismatch (when non-null)
// receives the offending monomial.
bool verify_cf_inversion(const Alphabet& a, int dmax, std::string* first_mismatch = nullptr);

// Checks sum_H x^H = exp(sum over pyramids of x^P/|P|) under the same truncation.
bool verify_exp_formula(const Alphabet& a, int dmax, std::string* first_mismatch = nullptr);

} // namespace piecework
