#pragma once

#include <vector>

#include "piecework/numbers.hpp"

namespace piecework {

/*
 * Truncated formal power series with exact rational coefficients.
 * The truncation order is explicit and every arithmetic result carries
 * the minimum of the operand orders.  No floating point anywhere.
 */
class Series {
public:
    explicit Series(int order);                         // zero series
    Series(std::vector<Rat> coeffs, int order);         // coeffs beyond order are dropped

    static Series one(int order);

    int order() const { return order_; }
    const Rat& coeff(int k) const;                      // 0 <= k <= order

    Series operator+(const Series& b) const;
    Series operator-(const Series& b) const;
    Series operator*(const Series& b) const;            // Cauchy product

    // Multiplicative inverse; throws std::domain_error on zero constant term.
    Series inverse() const;
    // Termwise log; requires constant term 1.
    Series log() const;
    // Termwise exp; requires constant term 0.
    Series exp() const;

    bool operator==(const Series& b) const;             // same order, same coefficients

private:
    int order_;
    std::vector<Rat> coeffs_;                           // size order_ + 1
};

// tan = sin/cos as a series quotient, for tangent-number cross-checks.
Series tangent_series(int order);

/*
 * M(n) tables for the generating identity
 *   sum_{n>=1} r_n z^n/(n! M(n)) = -log( sum_{k>=0} (-1)^k z^k/(k! M(k)) ).
 */
struct SequenceSpec {
    enum class Kind { general, blocks, rpartitions };

    Kind kind = Kind::general;
    int r = 0;                       // for blocks / rpartitions
    std::vector<Int> m_table;        // for general

    // M(n); M(0)=1 and all values >= 1 are enforced.
    Int minimal_count(int n) const;

    static SequenceSpec general(std::vector<Int> m);    // m[0] must be 1
    static SequenceSpec blocks(int r);                  // M(n) = (rn)!/(n! r!^n)
    static SequenceSpec rpartitions(int r);             // M(n) = n!^(r-1)
};

// r_1..r_N from the identity above.  Every value must come out an exact
// integer; a fractional coefficient means the M table is not that of an
// exponential structure and raises std::domain_error.
std::vector<Int> r_sequence(const SequenceSpec& spec, int N);

// Generalized Euler numbers E_{r-1}, E_{2r-1}, ..., E_{rN-1}: the
// r_sequence of the blocks(r) family.
std::vector<Int> euler_sequence(int r, int N);

// tau(1)..tau(N): n!^2 times the coefficients of the inverse of
// sum (-1)^n x^n/n!^2.
std::vector<Int> tau_sequence(int N);

// Count of pairs of permutations of [n] with no common rise, by brute
// force over all n!^2 pairs.  Capped (default 6).
Int omega_bruteforce(int n);

} // namespace piecework
