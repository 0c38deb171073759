#pragma once

#include <set>
#include <vector>

#include "piecework/piece.hpp"

namespace piecework {

// One-line notation: p[j-1] is the image of j.
using Permutation = std::vector<int>;

// A set partition of [rn] into blocks of size exactly r, kept as sorted block pieces.
struct Partition {
    std::vector<Piece> blocks;
};

// An (r-1)-tuple of permutations of [n].
struct PermTuple {
    std::vector<Permutation> perms;
};

bool is_permutation(const Permutation& p);

// Blocks cross unless one lies entirely to the left of the other
// (max(a) < min(b) or max(b) < min(a)).  Reflexive by construction.
bool blocks_crossing(const Piece& a, const Piece& b);

// Paths cross unless one strictly dominates the other componentwise.
// Equal paths cross.  Throws on length mismatch.
bool paths_crossing(const Piece& a, const Piece& b);

// All partitions of [rn] into n blocks of size r, lexicographic order.
std::vector<Partition> partitions_rn(int n, int r);

// All (r-1)-tuples of permutations of [n], lexicographic order.
std::vector<PermTuple> perm_tuples(int n, int r);

// The n paths of a tuple: path from m is (m, s1(m), s2(s1(m)), ...).
std::vector<Piece> paths_of_tuple(const PermTuple& t);

std::set<int> descent_set(const Permutation& p);

// All permutations of [n] with descent set exactly S.
std::vector<Permutation> perms_with_descent_set(int n, const std::set<int>& S);

// For p on [rn-1] with descent set {r,2r,...,rn-r}: the consecutive
// r-segments of p as blocks, with rn appended to the last one.
Partition blocks_of_descent_perm(const Permutation& p, int r);

bool has_common_rise(const Permutation& pi, const Permutation& xi);

} // namespace piecework
