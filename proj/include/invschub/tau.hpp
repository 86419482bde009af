#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "invschub/involution.hpp"

namespace invschub {

/// Covering transformation on involutions labeled by a pair i < j.  The
/// result z acts like y outside A = {i, j, y(i), y(j)} and is either equal to
/// y or satisfies y < z with z determined by the pattern of y on A.  Covers
/// in the restricted Bruhat order are exactly the z = tau(i, j, y) != y with
/// hat_length(z) == hat_length(y) + 1.  Idempotent in the sense that
/// tau(i, j, tau(i, j, y)) == tau(i, j, y).
Involution tau(int i, int j, const Involution& y);

/// True when tau(i, j, y) covers y in the restricted Bruhat order.
bool tau_covers(int i, int j, const Involution& y);

/// The covers z of y expressible as z = tau(r, j, y) with j > r, sorted.
/// Results may move integers < 1 when r sits at the edge of the support.
std::vector<Involution> phi_plus(const Involution& y, int r);
/// The covers z of y expressible as z = tau(i, r, y) with i < r, sorted.
std::vector<Involution> phi_minus(const Involution& y, int r);

/// Ordinary analogues on permutations: the Bruhat covers y(r, j) with j > r,
/// respectively y(i, r) with i < r, sorted.
std::vector<Permutation> phi_plus(const Permutation& y, int r);
std::vector<Permutation> phi_minus(const Permutation& y, int r);

/// For w an atom of y and a Bruhat cover w lessdot w*t: if the stepped-up
/// permutation w*t is itself an atom, its involution can only be
/// tau(t.a, t.b, y), so a single membership test decides the question.
/// Returns that involution, or nothing when w*t leaves the atom family
/// (in which case tau(t.a, t.b, y) == y; both directions are asserted).
std::optional<Involution> transition_target(const Involution& y,
                                            const Permutation& w,
                                            const Transposition& t);

/// Given w minimal for y (an atom) and a cover w lessdot w(i,j) that leaves
/// the family of atom sets entirely, produce the unique pair (i', j') with
/// i' < j' such that w(i,j)(i',j') is again an atom of y.  The pair is read
/// off from the pattern of y and w on {i, j, y(i), y(j)}; all premises are
/// enforced with hard checks.
std::pair<int, int> mirror_pair(const Permutation& w, int i, int j,
                                const Involution& y);

}  // namespace invschub
