#include "invschub/inv_schubert.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace invschub {

namespace {

std::mutex memo_mutex;

std::map<Involution, Polynomial>& memo() {
  static std::map<Involution, Polynomial> m;
  return m;
}

}  // namespace

Polynomial inv_schubert(const Involution& y) {
  INVSCHUB_CHECK(y.perm().min_support() >= 1,
                 "involution Schubert polynomials need support in {1, 2, ...}");
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo().find(y);
    if (it != memo().end()) return it->second;
  }
  Polynomial f;
  for (const Permutation& w : atoms(y)) f += schubert(w);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo().emplace(y, std::move(f)).first->second;
}

Polynomial upsilon(const Involution& y) {
  return inv_schubert(y) * (1LL << kappa(y));
}

Polynomial longest_inv_product(int n) {
  INVSCHUB_CHECK(n >= 1, "the window size must be positive");
  Polynomial f = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; i + j <= n; ++j) f = f * x_pair(i, j);
  return f;
}

TransitionResult transition_inv(const Involution& y, int p, int q) {
  INVSCHUB_CHECK(p >= 1 && p <= q && y(p) == q,
                 "transition labels must name a cycle (p, y(p)) with p >= 1");
  TransitionResult r;
  r.plus_set = phi_plus(y, q);
  r.minus_set = phi_minus(y, p);
  r.lhs = x_pair(p, q) * inv_schubert(y);
  for (const Involution& z : r.plus_set)
    if (z.perm().min_support() >= 1) r.rhs += inv_schubert(z);
  for (const Involution& z : r.minus_set)
    if (z.perm().min_support() >= 1) r.rhs -= inv_schubert(z);
  INVSCHUB_CHECK(r.lhs == r.rhs, "transition identity violated");
  return r;
}

}  // namespace invschub
