#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "glho/partition.hpp"

// Brute-force oracles for the verification suite. Everything here is an
// independent computation path: Schur polynomials by tableau
// enumeration, dimensions by tableau counting, self-conjugate counts by
// the principal-hook bijection. None of it calls the library's own
// product/dimension/count routines.

namespace glho::oracle {

/// Exponent vector in at most four variables; unused slots stay zero.
using Monomial = std::array<int, 4>;
using Poly = std::map<Monomial, std::int64_t>;

/// Schur polynomial s_lambda(x_1..x_nvars) as a sum over semistandard
/// tableaux. Zero when lambda has more than nvars rows.
Poly schur_polynomial(const Partition& lambda, int nvars);

Poly multiply(const Poly& p, const Poly& q);

/// Expands a symmetric polynomial in the Schur basis by repeatedly
/// stripping the lexicographically leading monomial. Throws if the
/// input is not a nonnegative-degree symmetric polynomial.
std::map<Partition, std::int64_t> expand_in_schur_basis(Poly p, int nvars);

/// Number of semistandard tableaux of shape lambda with entries <= n:
/// the dimension of the GL(n) irreducible, counted one tableau at a
/// time instead of through the Weyl formula.
std::int64_t ssyt_count(const Partition& lambda, int n);

/// Self-conjugate partitions in the n x n box, reconstructed from
/// subsets of odd principal hook lengths {1, 3, ..., 2n-1}.
std::set<Partition> self_conjugate_by_hooks(int n);

/// All partitions of total s with at most max_rows rows and parts at
/// most max_part.
std::vector<Partition> partitions_of(int s, int max_rows, int max_part);

}  // namespace glho::oracle
