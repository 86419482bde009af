#include "invschub/tau.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace invschub {

namespace {

// Sorted distinct elements of {i, j, y(i), y(j)}.
std::vector<int> orbit_union(int i, int j, const Involution& y) {
  std::vector<int> A = {i, j, y(i), y(j)};
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  return A;
}

int rank_in(const std::vector<int>& A, int v) {
  return static_cast<int>(std::lower_bound(A.begin(), A.end(), v) - A.begin());
}

// w is minimal for demazure(w^{-1}, w), i.e. an atom of some involution.
bool atom_of_something(const Permutation& w) {
  Involution z(demazure(inverse(w), w));
  return hat_length(z) == length(w);
}

}  // namespace

Involution tau(int i, int j, const Involution& y) {
  INVSCHUB_CHECK(i < j, "tau labels require i < j");
  std::vector<int> A = orbit_union(i, j, y);
  int m = static_cast<int>(A.size());
  std::array<int, 4> fy{};  // pattern of y on A, 0-based
  for (int k = 0; k < m; ++k) fy[k] = rank_in(A, y(A[k]));
  std::pair<int, int> pr = {rank_in(A, i), rank_in(A, j)};

  Permutation sigma;  // tau = y * sigma; identity means the trivial case
  if (m == 2) {
    if (fy[0] == 0)  // y fixes both i and j
      sigma = Permutation::transposition(A[0], A[1]);
  } else if (m == 3) {
    if (fy[0] == 1) {  // y pairs the two smallest
      if (pr == std::pair{1, 2} || pr == std::pair{0, 2})
        sigma = Permutation::cycle({A[0], A[2], A[1]});
    } else if (fy[1] == 2) {  // y pairs the two largest
      if (pr == std::pair{0, 1} || pr == std::pair{0, 2})
        sigma = Permutation::cycle({A[0], A[1], A[2]});
    }
  } else {
    if (fy[0] == 1 && fy[2] == 3) {  // two short arcs side by side
      if (pr == std::pair{1, 2})
        sigma = compose(Permutation::transposition(A[0], A[3]),
                        Permutation::transposition(A[1], A[2]));
      else if (pr == std::pair{0, 2} || pr == std::pair{1, 3} ||
               pr == std::pair{0, 3})
        sigma = Permutation::cycle({A[0], A[2], A[3], A[1]});
    } else if (fy[0] == 2 && fy[1] == 3) {  // two crossing arcs
      if (pr == std::pair{0, 1} || pr == std::pair{2, 3} ||
          pr == std::pair{0, 3})
        sigma = compose(Permutation::transposition(A[0], A[1]),
                        Permutation::transposition(A[2], A[3]));
    }
  }
  if (sigma.is_identity()) return y;
  return Involution(compose(y.perm(), sigma));
}

bool tau_covers(int i, int j, const Involution& y) {
  Involution z = tau(i, j, y);
  return !(z == y) && hat_length(z) == hat_length(y) + 1;
}

std::vector<Involution> phi_plus(const Involution& y, int r) {
  std::set<Involution> out;
  int hi = std::max(y.perm().max_support(), r) + 1;
  for (int j = r + 1; j <= hi; ++j)
    if (tau_covers(r, j, y)) out.insert(tau(r, j, y));
  return {out.begin(), out.end()};
}

std::vector<Involution> phi_minus(const Involution& y, int r) {
  std::set<Involution> out;
  int lo = std::min(y.perm().min_support(), r) - 1;
  for (int i = lo; i < r; ++i)
    if (tau_covers(i, r, y)) out.insert(tau(i, r, y));
  return {out.begin(), out.end()};
}

std::vector<Permutation> phi_plus(const Permutation& y, int r) {
  std::set<Permutation> out;
  int hi = std::max(y.max_support(), r) + 1;
  for (int j = r + 1; j <= hi; ++j)
    if (covers(y, Transposition(r, j)))
      out.insert(compose(y, Permutation::transposition(r, j)));
  return {out.begin(), out.end()};
}

std::vector<Permutation> phi_minus(const Permutation& y, int r) {
  std::set<Permutation> out;
  int lo = std::min(y.min_support(), r) - 1;
  for (int i = lo; i < r; ++i)
    if (covers(y, Transposition(i, r)))
      out.insert(compose(y, Permutation::transposition(i, r)));
  return {out.begin(), out.end()};
}

std::optional<Involution> transition_target(const Involution& y,
                                            const Permutation& w,
                                            const Transposition& t) {
  INVSCHUB_CHECK(is_atom_of(w, y), "transition_target: w must be minimal for y");
  INVSCHUB_CHECK(covers(w, t), "transition_target: w*t must cover w");
  Permutation wt = compose(w, Permutation::transposition(t.a, t.b));
  Involution z = tau(t.a, t.b, y);
  if (z == y) {
    INVSCHUB_CHECK(!atom_of_something(wt),
                   "transition_target: step is minimal but the label fixes y");
    return std::nullopt;
  }
  INVSCHUB_CHECK(is_atom_of(wt, z),
                 "transition_target: label moved y but the step is not minimal");
  return z;
}

std::pair<int, int> mirror_pair(const Permutation& w, int i, int j,
                                const Involution& y) {
  INVSCHUB_CHECK(i < j, "mirror_pair labels require i < j");
  INVSCHUB_CHECK(is_atom_of(w, y), "mirror_pair: w must be minimal for y");
  INVSCHUB_CHECK(covers(w, Transposition(i, j)),
                 "mirror_pair: w(i,j) must cover w");
  Permutation wt = compose(w, Permutation::transposition(i, j));
  INVSCHUB_CHECK(!atom_of_something(wt),
                 "mirror_pair: w(i,j) must not be minimal for any involution");

  std::vector<int> A = orbit_union(i, j, y);
  int m = static_cast<int>(A.size());
  std::array<int, 4> fy{};
  for (int k = 0; k < m; ++k) fy[k] = rank_in(A, y(A[k]));
  std::pair<int, int> pr = {rank_in(A, i), rank_in(A, j)};
  Permutation fw = flatten(w, A);

  int ip = 0, jp = 0;
  if (m == 3 && fy[0] == 2) {  // one long arc over a free middle point
    if (fw == Permutation::from_one_line({2, 3, 1}) &&
        pr == std::pair{0, 1}) {
      ip = j;
      jp = y(i);
    } else if (fw == Permutation::from_one_line({3, 1, 2}) &&
               pr == std::pair{1, 2}) {
      ip = y(j);
      jp = i;
    }
  } else if (m == 4 && fy[0] == 3 && fy[1] == 2) {  // two nested arcs
    Permutation p2431 = Permutation::from_one_line({2, 4, 3, 1});
    Permutation p3412 = Permutation::from_one_line({3, 4, 1, 2});
    Permutation p4213 = Permutation::from_one_line({4, 2, 1, 3});
    if (fw == p2431 && pr == std::pair{0, 1}) {
      ip = y(j);
      jp = y(i);
    } else if (fw == p2431 && pr == std::pair{0, 2}) {
      ip = j;
      jp = y(i);
    } else if (fw == p3412 && pr == std::pair{0, 1}) {
      ip = j;
      jp = y(i);
    } else if (fw == p3412 && pr == std::pair{2, 3}) {
      ip = y(j);
      jp = i;
    } else if (fw == p4213 && pr == std::pair{1, 3}) {
      ip = y(j);
      jp = i;
    } else if (fw == p4213 && pr == std::pair{2, 3}) {
      ip = y(j);
      jp = y(i);
    }
  }
  INVSCHUB_CHECK(ip < jp, "mirror_pair: configuration matches no known case");
  INVSCHUB_CHECK(is_atom_of(compose(wt, Permutation::transposition(ip, jp)), y),
                 "mirror_pair: partner pair fails to restore minimality");
  return {ip, jp};
}

}  // namespace invschub
