#pragma once

#include <vector>

#include "invschub/involution.hpp"
#include "invschub/polynomial.hpp"
#include "invschub/tau.hpp"

namespace invschub {

/// Sum of the Schubert polynomials of the atoms of y.  Homogeneous of degree
/// hat_length(y).  Memoized; requires support within {1, 2, ...}.
Polynomial inv_schubert(const Involution& y);

/// inv_schubert(y) scaled by 2^kappa(y).
Polynomial upsilon(const Involution& y);

/// prod over {1 <= i <= j <= n, i + j <= n} of x_pair(i, j): the closed
/// product form taken by inv_schubert at the order-reversing permutation
/// of [1, n].
Polynomial longest_inv_product(int n);

/// Both sides of the transition identity at a cycle (p, q) of y:
///
///   x_pair(p, q) * inv_schubert(y)
///     = sum of inv_schubert over plus_set - sum over minus_set,
///
/// where summands whose support leaves {1, 2, ...} count as zero.  The
/// cover sets keep those elements anyway so counting arguments can still
/// see them.
struct TransitionResult {
  std::vector<Involution> plus_set;   // phi_plus(y, q), sorted
  std::vector<Involution> minus_set;  // phi_minus(y, p), sorted
  Polynomial lhs;
  Polynomial rhs;
};

/// Evaluates the identity at (p, q) and checks lhs == rhs before returning.
/// Requires p >= 1 and q == y(p) >= p; q == p names a fixed point of y.
TransitionResult transition_inv(const Involution& y, int p, int q);

}  // namespace invschub
