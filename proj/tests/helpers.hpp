#pragma once

#include <algorithm>
#include <vector>

#include "invschub/fpf.hpp"
#include "invschub/involution.hpp"
#include "invschub/io.hpp"
#include "invschub/permutation.hpp"

namespace testutil {

using namespace invschub;

inline Permutation P(const std::string& s) { return parse_permutation(s); }
inline Involution I(const std::string& s) { return parse_involution(s); }
inline FpfInvolution F(const std::vector<int>& images) {
  return FpfInvolution::from_one_line(images);
}

inline std::vector<Permutation> perm_list(const std::vector<std::string>& ss) {
  std::vector<Permutation> out;
  for (const auto& s : ss) out.push_back(P(s));
  std::sort(out.begin(), out.end());
  return out;
}

// The negating conjugation i -> -w(-i), an order-reversing symmetry used only
// to double-check covering-move tables from the other side of the window.
inline Permutation star(const Permutation& w) {
  std::vector<std::pair<int, int>> moved;
  for (auto [p, q] : w.moved()) moved.emplace_back(-p, -q);
  return Permutation::from_moved(std::move(moved));
}

// All permutations of [1, n] in lexicographic one-line order.
inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

// All involutions of the window [lo, lo + n - 1].
inline std::vector<Involution> involutions_on(int lo, int n) {
  std::vector<Involution> out;
  for (const Permutation& w : all_perms(n))
    if (compose(w, w).is_identity())
      out.emplace_back(shift(w, lo - 1));
  return out;
}

// All fixed-point-free involutions of [1, n] (n even), lexicographic by the
// pairing of the smallest unmatched point: (n - 1)!! of them.
inline std::vector<FpfInvolution> all_fpf(int n) {
  std::vector<FpfInvolution> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    for (int i = 1; i <= n; ++i)
      if (!used[i]) {
        a = i;
        break;
      }
    if (a == 0) {
      out.push_back(FpfInvolution::from_pairs(pairs));
      return;
    }
    used[a] = true;
    for (int b = a + 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a, b);
      self(self);
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec);
  return out;
}

// Brute-force subword test: u <= v iff some reduced word of v contains a
// reduced word of u as a subword.  Independent of the production order test.
inline bool bruhat_leq_subword_oracle(const Permutation& u, const Permutation& v) {
  if (length(u) > length(v)) return false;
  auto wu = reduced_words(u);
  auto wv = reduced_words(v);
  auto is_subword = [](const Word& needle, const Word& hay) {
    size_t k = 0;
    for (int a : hay)
      if (k < needle.size() && needle[k] == a) ++k;
    return k == needle.size();
  };
  for (const Word& a : wu)
    for (const Word& b : wv)
      if (is_subword(a, b)) return true;
  return false;
}

}  // namespace testutil
