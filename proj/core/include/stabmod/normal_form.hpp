#pragma once

#include "stabmod/matrix.hpp"

namespace stabmod::exactla {

/// Two-sided diagonalization A = U * D * V over a local coefficient mode
/// (any of the three; the field case is the exponent-1 instance).
/// D is diagonal with entries p^valuations[i] followed by zeros; U, V are
/// invertible and their inverses are tracked. Valuations are weakly
/// increasing (pivot = minimal valuation, ties broken by lowest row, then
/// lowest column index).
struct Diagonalization {
    Matrix U, Uinv, V, Vinv;
    std::vector<long> valuations;
    long rows = 0, cols = 0;

    long rank() const { return static_cast<long>(valuations.size()); }
    long zero_diagonal() const { return std::min(rows, cols) - rank(); }
    Matrix diagonal(const RingSpec& ring) const;
};

Diagonalization diagonalize(const Matrix& a);

/// Smith-type normal form over the exact p-local rationals: A = U * D * V
/// with diag(D) = p^valuations followed by zero_diagonal zeros.
struct SnfResult {
    Matrix U, V;
    std::vector<long> valuations;
    long zero_diagonal = 0;
};

SnfResult snf(const Matrix& a);

/// Canonical row-span form over Z/p^m plus a generating set of the right
/// kernel {x : A x = 0} (columns of `kernel`). The span form has the Howell
/// property: a vector lies in the row span iff it reduces to zero against it.
struct HowellResult {
    Matrix span;
    Matrix kernel;
};

HowellResult howell(const Matrix& a);

/// Canonical row-span form alone (Truncation mode).
Matrix howell_span(const Matrix& a);

/// Reduces a row vector against a Howell span form; returns the remainder.
Matrix reduce_against_span(const Matrix& span, const Matrix& row);

/// Right kernel generators as columns, any mode. Over a field / PLocal this
/// is a basis; over Z/p^m it is the canonical generating set (scaled columns
/// p^(m-v) appear for diagonal entries of valuation 0 < v < m).
Matrix kernel(const Matrix& a);

/// Rank of the matrix (number of unit pivots for modular modes; for PLocal
/// and PrimeField this is the usual rank).
long rank(const Matrix& a);

/// Solves A X = B exactly; throws std::domain_error when unsolvable.
Matrix solve(const Matrix& a, const Matrix& b);

bool is_solvable(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix invertible over its coefficient mode.
Matrix inverse(const Matrix& a);

bool is_invertible(const Matrix& a);

/// ker(d_out)/im(d_in) for composable maps over PLocal, reported as a free
/// rank plus the p-adic valuations of the elementary divisors.
struct HomologyReport {
    long free_rank = 0;
    std::vector<long> torsion;  // sorted, each >= 1

    bool exact() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const HomologyReport&) const = default;
    std::string describe() const;
};

/// d_in : R^a -> R^b and d_out : R^b -> R^c as matrices (b x a and c x b).
/// Requires d_out * d_in = 0 and PLocal mode.
HomologyReport homology(const Matrix& d_in, const Matrix& d_out);

}  // namespace stabmod::exactla
