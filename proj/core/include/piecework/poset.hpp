#pragma once

#include <string>
#include <vector>

#include "piecework/numbers.hpp"

namespace piecework {

/*
 * An explicit finite poset: element labels plus a leq matrix, verified
 * reflexive, antisymmetric and transitive on construction.  A bottom
 * element can be adjoined for Mobius computations against 0-hat.
 */
class FinitePoset {
public:
    FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(i); }
    bool leq(int i, int j) const { return leq_.at(i).at(j); }
    bool has_bottom() const { return has_bottom_; }

    // Same poset with a new 0-hat strictly below everything.
    FinitePoset with_bottom() const;

    std::vector<int> minimal_elements() const;   // excluding an adjoined 0-hat
    int minimal_count() const;

    // Index of the unique maximal element; throws std::domain_error if
    // the maximum is not unique.
    int unique_max() const;

    // mu(0-hat, 1-hat) by the standard recursion mu(x,x)=1,
    // mu(x,y) = -sum_{x<=z<y} mu(x,z).  Requires an adjoined bottom.
    Int mobius_bottom_top() const;

    // True iff every maximal chain (0-hat excluded) has exactly n elements.
    bool verify_chain_condition(int n) const;

    std::vector<std::pair<int, int>> cover_edges() const;
    std::string to_dot() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
    bool has_bottom_ = false;
};

// Partitions of [rn] with all block sizes divisible by r, ordered by
// refinement.  rn capped at 8.
FinitePoset build_block_poset(int n, int r);

// r-partitions of [n]: sets of r-tuples of blocks whose axis projections
// are partitions of [n] with sizes matching inside each tuple, ordered by
// tuplewise refinement.  n capped at 4, r at 3.
FinitePoset build_rpartition_poset(int n, int r);

} // namespace piecework
