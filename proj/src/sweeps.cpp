#include "invschub/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "invschub/inv_schubert.hpp"
#include "invschub/io.hpp"
#include "invschub/little.hpp"
#include "invschub/polynomial.hpp"
#include "invschub/tau.hpp"

namespace invschub {

// ---------------------------------------------------------------------------
// universes

std::vector<Permutation> all_permutations(int n) {
  INVSCHUB_CHECK(n >= 0 && n <= 9, "permutation universes are capped at rank 9");
  std::vector<int> line(n);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Involution> all_involutions(int n) {
  INVSCHUB_CHECK(n >= 0 && n <= 10, "involution universes are capped at rank 10");
  std::vector<Involution> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n + 1, false);
  // pair the smallest free point with itself or with each larger free point,
  // ascending; the first differing image decides, so this is one-line
  // lexicographic order
  auto rec = [&](auto&& self, int a) -> void {
    while (a <= n && used[a]) ++a;
    if (a > n) {
      out.push_back(Involution::from_pairs(pairs));
      return;
    }
    used[a] = true;
    self(self, a + 1);
    for (int b = a + 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a, b);
      self(self, a + 1);
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, 1);
  return out;
}

std::vector<FpfInvolution> all_fpf_involutions(int n) {
  INVSCHUB_CHECK(n >= 0 && n % 2 == 0 && n <= 12,
                 "fixed-point-free universes need an even rank of at most 12");
  std::vector<FpfInvolution> out;
  std::vector<std::pair<int, int>> pairs;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int a) -> void {
    while (a <= n && used[a]) ++a;
    if (a > n) {
      out.push_back(FpfInvolution::from_pairs(pairs));
      return;
    }
    used[a] = true;
    for (int b = a + 1; b <= n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a, b);
      self(self, a + 1);
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, 1);
  return out;
}

long long universe_size(UniverseKind kind, int n) {
  switch (kind) {
    case UniverseKind::perm: {
      INVSCHUB_CHECK(n >= 0 && n <= 9, "permutation universes are capped at rank 9");
      long long f = 1;
      for (int k = 2; k <= n; ++k) f *= k;
      return f;
    }
    case UniverseKind::inv: {
      INVSCHUB_CHECK(n >= 0 && n <= 10, "involution universes are capped at rank 10");
      long long a = 1, b = 1;  // counts at ranks k-2 and k-1
      for (int k = 2; k <= n; ++k) {
        long long c = b + (k - 1) * a;
        a = b;
        b = c;
      }
      return n == 0 ? 1 : b;
    }
    case UniverseKind::fpf: {
      INVSCHUB_CHECK(n >= 0 && n % 2 == 0 && n <= 12,
                     "fixed-point-free universes need an even rank of at most 12");
      long long f = 1;
      for (int k = n - 1; k > 1; k -= 2) f *= k;
      return f;
    }
  }
  check_failed("universe kind", "unreachable");
}

// ---------------------------------------------------------------------------
// sweep infrastructure

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

void expect(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

using EmitIndexed = std::function<void(long long, const std::string&)>;

struct SuiteDef {
  SuiteInfo info;
  std::function<long long()> size;
  // check items [begin, end), reporting failures through emit
  std::function<void(long long, long long, const EmitIndexed&)> run;
};

// Most suites walk a cheap-to-enumerate universe and run one independent
// check per element; a failure message starts with the element's label.
template <class T>
SuiteDef item_suite(SuiteInfo info, std::function<std::vector<T>()> universe,
                    std::function<std::string(const T&)> label,
                    std::function<void(const T&)> check) {
  SuiteDef def;
  def.info = std::move(info);
  def.size = [universe] { return static_cast<long long>(universe().size()); };
  def.run = [universe, label, check](long long begin, long long end,
                                     const EmitIndexed& emit) {
    std::vector<T> items = universe();
    for (long long k = begin; k < end; ++k) {
      try {
        check(items[k]);
      } catch (const std::exception& ex) {
        emit(k, label(items[k]) + ": " + ex.what());
      }
    }
  };
  return def;
}

struct NamedCheck {
  std::string name;
  std::function<void()> fn;
};

SuiteDef named_suite(SuiteInfo info,
                     std::function<std::vector<NamedCheck>()> checks) {
  return item_suite<NamedCheck>(
      std::move(info), std::move(checks),
      [](const NamedCheck& c) { return c.name; },
      [](const NamedCheck& c) { c.fn(); });
}

// --- small shared helpers --------------------------------------------------

Permutation PP(const std::string& s) { return parse_permutation(s); }
Involution II(const std::string& s) { return parse_involution(s); }
Polynomial PY(const std::string& s) { return Polynomial::parse(s); }

std::vector<Permutation> perm_set(const std::vector<std::string>& ss) {
  std::vector<Permutation> out;
  for (const auto& s : ss) out.push_back(PP(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Involution> inv_set(const std::vector<std::string>& ss) {
  std::vector<Involution> out;
  for (const auto& s : ss) out.push_back(II(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subword(const Word& needle, const Word& hay) {
  size_t k = 0;
  for (int a : hay)
    if (k < needle.size() && needle[k] == a) ++k;
  return k == needle.size();
}

// u <= v iff some reduced word of v contains one of u as a subword; an
// oracle independent of the production order test
bool bruhat_leq_by_subwords(const Permutation& u, const Permutation& v) {
  if (length(u) > length(v)) return false;
  auto wu = reduced_words(u);
  auto wv = reduced_words(v);
  for (const Word& a : wu)
    for (const Word& b : wv)
      if (is_subword(a, b)) return true;
  return false;
}

// filter the whole symmetric group for minimal-length witnesses of y
std::vector<Permutation> atoms_by_filtering(const Involution& y, int n) {
  std::vector<Permutation> out;
  long long k = hat_length(y);
  for (const Permutation& w : all_permutations(n))
    if (length(w) == k && demazure(inverse(w), w) == y.perm()) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

// every y-marked word arises by inserting one letter into a word for y
std::vector<MarkedWord> inserted_words(const std::vector<Word>& base, int pad) {
  std::vector<MarkedWord> out;
  for (const Word& w : base) {
    int lo = 1, hi = 2;
    if (!w.empty()) {
      lo = *std::min_element(w.begin(), w.end());
      hi = *std::max_element(w.begin(), w.end());
    }
    for (int c = lo - pad; c <= hi + pad; ++c)
      for (int t = 1; t <= static_cast<int>(w.size()) + 1; ++t) {
        Word a = w;
        a.insert(a.begin() + (t - 1), c);
        out.push_back({a, t});
      }
  }
  return out;
}

// first k indices of a fixed pseudorandom shuffle of [0, m), sorted back
// into enumeration order
std::vector<long long> sample_indices(long long m, long long k, std::uint64_t seed) {
  std::vector<long long> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  long long take = std::min(k, m);
  for (long long i = 0; i < take; ++i)
    std::swap(idx[i], idx[i + static_cast<long long>(rng() % (m - i))]);
  idx.resize(take);
  std::sort(idx.begin(), idx.end());
  return idx;
}

Involution inv_reversal(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n + 1 - i; ++i) pairs.emplace_back(i, n + 1 - i);
  return Involution::from_pairs(pairs);
}

Polynomial random_poly(std::mt19937_64& rng, int vars, int max_deg, int terms) {
  Polynomial f;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(vars);
    for (int& v : e) v = static_cast<int>(rng() % (max_deg + 1));
    long long c = static_cast<long long>(rng() % 9) - 4;
    f += Polynomial::term(c, Monomial(std::move(e)));
  }
  return f;
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// does some involution have wt among its atoms?  wt can only witness the
// element it conjugates the identity to, so one length test decides
bool atom_of_something(const Permutation& wt, Involution* target = nullptr) {
  Involution cand(demazure(inverse(wt), wt));
  if (length(wt) != hat_length(cand)) return false;
  if (target) *target = cand;
  return true;
}

// --- worked examples ---------------------------------------------------------

std::vector<NamedCheck> worked_example_checks() {
  std::vector<NamedCheck> cs;
  auto add = [&](std::string name, std::function<void()> fn) {
    cs.push_back({std::move(name), std::move(fn)});
  };

  add("involution schubert polynomial of 321", [] {
    expect(inv_schubert(II("321")) == PY("x1^2 + x1*x2"),
           "expected x1^2 + x1*x2");
  });
  add("involution schubert polynomials of 4321 and 15432", [] {
    expect(inv_schubert(II("4321")) ==
               PY("x1^3*x2 + x1^2*x2^2 + x1^2*x2*x3 + x1*x2^2*x3"),
           "rank-four value is off");
    expect(inv_schubert(II("15432")) ==
               PY("x1^3*x2 + x1^3*x3 + 2*x1^2*x2^2 + 3*x1^2*x2*x3 + x1^2*x2*x4 "
                  "+ x1^2*x3^2 + x1^2*x3*x4 + x1*x2^3 + 3*x1*x2^2*x3 + x1*x2^2*x4 "
                  "+ 2*x1*x2*x3^2 + 2*x1*x2*x3*x4 + x1*x3^2*x4 + x2^3*x3 "
                  "+ x2^2*x3^2 + x2^2*x3*x4 + x2*x3^2*x4"),
           "17-term value is off");
  });
  add("atom sets of 321 and 4321", [] {
    expect(atoms(II("321")) == perm_set({"231", "312"}), "atoms of 321");
    expect(atoms(II("4321")) == perm_set({"2431", "3412", "4213"}),
           "atoms of 4321");
  });
  add("atom set of 15432", [] {
    expect(atoms(II("15432")) == perm_set({"13542", "14523", "15324"}),
           "three atoms expected");
  });
  add("atom set of 156423", [] {
    expect(atoms(II("156423")) == perm_set({"135624", "136425", "146235"}),
           "three atoms expected");
  });
  add("atom set of 45312", [] {
    expect(atoms(II("45312")) == perm_set({"24513", "25314", "35124"}),
           "three atoms expected");
  });
  add("involution words of 321, 4321 and 15432", [] {
    expect(involution_words(II("321")) == std::vector<Word>{{1, 2}, {2, 1}},
           "words of 321");
    expect(involution_words(II("4321")) ==
               std::vector<Word>{{1, 2, 3, 2},
                                 {1, 3, 2, 1},
                                 {1, 3, 2, 3},
                                 {2, 1, 3, 2},
                                 {2, 3, 1, 2},
                                 {3, 1, 2, 1},
                                 {3, 1, 2, 3},
                                 {3, 2, 1, 2}},
           "eight words of 4321");
    expect(involution_words(II("15432")).size() == 8, "word count of 15432");
  });
  add("minimal lengths across the frozen family", [] {
    expect(hat_length(II("321")) == 2, "321");
    expect(hat_length(II("4321")) == 4, "4321");
    expect(hat_length(II("15432")) == 4, "15432");
    expect(hat_length(II("45312")) == 5, "45312");
    expect(hat_length(II("3214765")) == 4, "3214765");
    expect(hat_length(II("156423")) == 5, "156423");
  });
  add("transition at (2,3) of (2,3)(4,7)", [] {
    auto r = transition_inv(II("(2,3)(4,7)"), 2, 3);
    expect(r.plus_set == inv_set({"(2,4)(3,7)", "(2,5)(4,7)", "(2,7)"}),
           "plus set");
    expect(r.minus_set == inv_set({"(1,3)(4,7)"}), "minus set");
    expect(r.lhs == x_pair(2, 3) * inv_schubert(II("(2,3)(4,7)")), "left side");
    expect(r.rhs == inv_schubert(II("(2,4)(3,7)")) + inv_schubert(II("(2,5)(4,7)")) +
                        inv_schubert(II("(2,7)")) - inv_schubert(II("(1,3)(4,7)")),
           "right side recomputed");
  });
  add("transition at (3,4) of 15432", [] {
    auto r = transition_inv(II("15432"), 3, 4);
    expect(r.plus_set == inv_set({"156423"}), "plus set");
    expect(r.minus_set == inv_set({"45312"}), "minus set");
    expect(r.rhs == inv_schubert(II("156423")) - inv_schubert(II("45312")),
           "right side recomputed");
  });
  add("transition at the fixed point 4 of 3214765", [] {
    auto r = transition_inv(II("3214765"), 4, 4);
    expect(r.lhs == Polynomial::x(4) * inv_schubert(II("3214765")), "left side");
    expect(r.plus_set == inv_set({"3216745", "3217564"}), "plus set");
    expect(r.minus_set == inv_set({"3412765", "4231765"}), "minus set");
  });
  add("matching transition at (3,6) of (1,5)(2,4)(3,6)(7,8)", [] {
    auto big = FpfInvolution::from_pairs({{1, 5}, {2, 4}, {3, 6}, {7, 8}});
    auto tr = transition_fpf(big, 3, 6);
    expect(tr.lhs == x_pair(3, 6) * fpf_schubert(big), "left side");
    expect(tr.plus_set == std::vector<FpfInvolution>{FpfInvolution::from_pairs(
                              {{1, 5}, {2, 4}, {3, 7}, {6, 8}})},
           "plus set");
    expect(tr.minus_set.size() == 2 &&
               tr.minus_set[0] == FpfInvolution::from_pairs({{1, 5}, {2, 6}, {3, 4}}) &&
               tr.minus_set[1] == FpfInvolution::from_pairs({{1, 6}, {2, 4}, {3, 5}}),
           "minus set");
    expect(tr.rhs == fpf_schubert(tr.plus_set[0]) - fpf_schubert(tr.minus_set[0]) -
                         fpf_schubert(tr.minus_set[1]),
           "right side recomputed");
  });
  add("matching transition telescopes at the base element", [] {
    for (int i = 1; i <= 4; ++i) {
      auto tr = transition_fpf(FpfInvolution(), 2 * i - 1, 2 * i);
      expect(tr.lhs == x_pair(2 * i - 1, 2 * i), "left side at pair " + std::to_string(i));
      expect(tr.minus_set.size() == 1, "one downward cover");
      expect(tr.plus_set == std::vector<FpfInvolution>{FpfInvolution::from_pairs(
                                {{2 * i - 1, 2 * i + 1}, {2 * i, 2 * i + 2}})},
             "plus set at pair " + std::to_string(i));
      if (i == 1) {
        expect(tr.minus_set[0] == FpfInvolution::from_pairs({{-1, 1}, {0, 2}}),
               "bottom cover leaves the positive window");
        expect(tr.rhs == schubert(Permutation::simple(2)), "bottom right side");
      } else {
        expect(tr.minus_set[0] == FpfInvolution::from_pairs(
                                      {{2 * i - 3, 2 * i - 1}, {2 * i - 2, 2 * i}}),
               "minus set at pair " + std::to_string(i));
        expect(tr.rhs == schubert(Permutation::simple(2 * i)) -
                             schubert(Permutation::simple(2 * i - 2)),
               "telescoping right side at pair " + std::to_string(i));
      }
    }
  });
  add("pair map far outside the covering range", [] {
    Involution y = II("(1,10)(2,5)(4,8)(6,11)");
    Involution z = tau(2, 11, y);
    expect(z == II("(1,10)(2,11)(4,8)"), "stretched arc target");
    expect(inv_bruhat_leq(y, z), "target sits above the source");
    expect(hat_length(z) == hat_length(y) + 3, "rank jumps by three");
    expect(!tau_covers(2, 11, y), "no cover despite the jump");
  });
  add("window reduction pins down the step-up target", [] {
    Involution y = II("(1,9)(3,8)(5,10)(6,7)");
    Permutation w = PP("2,3,5,6,8,10,9,4,1,7");
    expect(is_atom_of(w, y), "atom premise");
    Permutation t = Permutation::transposition(8, 10);
    expect(covers(w, Transposition(8, 10)), "cover premise");
    Permutation wt = compose(w, t);
    auto got = transition_target(y, w, Transposition(8, 10));
    expect(got.has_value() && *got == II("(1,9)(3,10)(5,8)(6,7)"),
           "the stepped-up atom names tau(8,10)");
    // a competing label (4,6) is ruled out inside a seven-point window
    Involution zz = tau(4, 6, y);
    expect(zz == II("(1,9)(3,8)(4,7)(5,10)"), "competing target");
    std::vector<int> E = {3, 4, 5, 6, 7, 8, 10};
    Involution yE(flatten(y.perm(), E));
    Involution zE(flatten(zz.perm(), E));
    expect(yE == II("(1,6)(3,7)(4,5)"), "flattened source");
    expect(zE == II("(1,6)(2,5)(3,7)"), "flattened competitor");
    expect(flatten(t, E) == Permutation::transposition(6, 7), "flattened step");
    expect(flatten(w, E) == PP("2,3,5,7,6,1,4"), "flattened atom");
    expect(flatten(wt, E) == PP("2,3,5,7,6,4,1"), "flattened stepped atom");
    expect(covers(flatten(w, E), Transposition(6, 7)), "flattened cover");
    Involution target = tau(6, 7, yE);
    expect(target == II("(1,7)(3,6)(4,5)"), "flattened pair-map value");
    expect(is_atom_of(flatten(wt, E), target), "flattened step-up lands there");
    expect(!(target == zE), "and that is not the competitor");
  });
  add("unique re-entry pairs after leaving the atom family", [] {
    expect(mirror_pair(PP("231"), 1, 2, II("(1,3)")) == std::pair{2, 3}, "small left");
    expect(mirror_pair(PP("312"), 2, 3, II("(1,3)")) == std::pair{1, 2}, "small right");
    Involution y = II("(1,9)(3,8)(5,10)(6,7)");
    Permutation w = PP("2,3,5,6,8,10,9,4,1,7");
    expect(mirror_pair(w, 5, 6, y) == std::pair{7, 10}, "wide window pair");
  });
  add("ordinary transition at a worked window", [] {
    Permutation y = PP("4153726");
    auto up = phi_plus(y, 2);
    auto down = phi_minus(y, 2);
    expect(up == perm_set({"4513726", "4351726", "4253716"}), "upward covers");
    expect(down == std::vector<Permutation>{compose(y, Permutation::transposition(0, 2))},
           "single downward cover through 0");
    Polynomial rhs;
    for (const Permutation& z : up) rhs += schubert(z);
    expect(Polynomial::x(2) * schubert(y) == rhs, "expansion over upward covers");
  });
  add("matching atom sets, frozen", [] {
    expect(fpf_atoms(FpfInvolution()) == perm_set({"1"}), "base element");
    expect(fpf_atoms(FpfInvolution::from_one_line({4, 3, 2, 1})) ==
               perm_set({"312", "1342"}),
           "rank two");
    expect(fpf_atoms(FpfInvolution::from_one_line({2, 1, 6, 5, 4, 3})) ==
               perm_set({"12534", "123564"}),
           "window six");
    expect(fpf_atoms(FpfInvolution::from_pairs({{-1, 1}, {0, 2}})) ==
               std::vector<Permutation>{Permutation::simple(0)},
           "negative window");
  });
  add("matching words, frozen", [] {
    expect(fpf_words(FpfInvolution::from_one_line({4, 3, 2, 1})) ==
               std::vector<Word>{{2, 1}, {2, 3}},
           "two words");
    expect(fpf_words(FpfInvolution()) == std::vector<Word>{{}}, "empty word");
  });
  add("matching schubert polynomials, frozen", [] {
    expect(fpf_schubert(FpfInvolution()) == Polynomial(1), "base element");
    expect(fpf_schubert(FpfInvolution::from_one_line({4, 3, 2, 1})) ==
               PY("x1^2 + x1*x2 + x1*x3 + x2*x3"),
           "rank two");
    expect(fpf_schubert(FpfInvolution::from_pairs({{1, 3}, {2, 4}})) == PY("x1 + x2"),
           "crossed pair");
  });
  add("closed product forms at the order-reversing elements", [] {
    expect(longest_inv_product(4) ==
               Polynomial::x(1) * x_pair(1, 2) * x_pair(1, 3) * Polynomial::x(2),
           "diagonal factor at rank four");
    expect(longest_fpf_product(4) == x_pair(1, 2) * x_pair(1, 3), "matching rank four");
    expect(longest_fpf_product(6) == x_pair(1, 2) * x_pair(1, 3) * x_pair(1, 4) *
                                         x_pair(1, 5) * x_pair(2, 3) * x_pair(2, 4),
           "matching rank six");
  });
  add("bumping map across one window", [] {
    expect(little_map(II("15432"), {5, 3, 4, 2, 3}) == Word{4, 2, 3, 1, 2},
           "image word");
  });
  add("bumping map on two words over 3214765", [] {
    Involution y7 = II("3214765");
    Word b1 = little_map(y7, {4, 5, 6, 1, 2});
    expect(b1 == Word{3, 5, 6, 1, 2}, "first image");
    expect(is_involution_word(b1, II("3412765")), "first image lands at its cover");
    Word b2 = little_map(y7, {4, 5, 6, 2, 1});
    expect(b2 == Word{3, 5, 6, 2, 1}, "second image");
    expect(is_involution_word(b2, II("4231765")), "second image lands at its cover");
  });
  add("bump with the mark on the last letter", [] {
    Involution y = II("(2,5)");
    MarkedWord start{{3, 2, 4, 5}, 4};
    expect(classify(start, y) == WordStatus::reduced, "start state");
    MarkedWord four = start;
    for (int t = 0; t < 4; ++t) four = step_down(four, y);
    expect(four == MarkedWord{{2, 1, 3, 4}, 2}, "four explicit steps");
    expect(bump(start, y) == four, "bump reaches the same state");
  });
  add("six downward steps through a semi-reduced state", [] {
    auto yf = FpfInvolution::from_one_line({2, 1, 6, 5, 4, 3});
    MarkedWord cur{{4, 6, 5}, 2};
    std::vector<MarkedWord> chain{{{4, 5, 5}, 3}, {{4, 5, 4}, 3}, {{4, 5, 3}, 2},
                                  {{4, 4, 3}, 1}, {{3, 4, 3}, 1}, {{2, 4, 3}, 1}};
    for (const MarkedWord& next : chain) {
      cur = step_down(cur, yf);
      expect(cur == next, "chain step");
    }
    expect(bump({{4, 6, 5}, 2}, yf) == MarkedWord{{2, 4, 3}, 1}, "bump equality");
    expect(little_map(FpfInvolution(), {2}) == Word{0},
           "the bottom image picks up a letter zero");
  });
  return cs;
}

// --- per-suite checkers ------------------------------------------------------

void check_transitions_inv(const Involution& y, int hi) {
  for (auto [p, q] : y.cycles_in(1, hi)) {
    try {
      transition_inv(y, p, q);
    } catch (const std::exception& ex) {
      fail("cycle " + pair_text(p, q) + ": " + ex.what());
    }
  }
}

void check_transitions_fpf(const FpfInvolution& z) {
  int hi = std::max(z.window_hi(), 0) + 4;
  for (auto [p, q] : z.cycles_in(1, hi)) {
    try {
      transition_fpf(z, p, q);
    } catch (const std::exception& ex) {
      fail("cycle " + pair_text(p, q) + ": " + ex.what());
    }
  }
}

// every length-raising step off an atom either lands on an atom of exactly
// tau(i,j,y) != y, or tau(i,j,y) == y and no new element is witnessed
void check_tau_uniqueness(const Involution& y, int top) {
  for (const Permutation& w : atoms(y))
    for (int i = 0; i < top; ++i)
      for (int j = i + 1; j <= top; ++j) {
        if (!covers(w, Transposition(i, j))) continue;
        Permutation wt = compose(w, Permutation::transposition(i, j));
        Involution target;
        Involution t = tau(i, j, y);
        std::string where =
            "atom " + format_permutation(w) + " step " + pair_text(i, j);
        if (atom_of_something(wt, &target)) {
          expect(t == target, where + ": stepped-up atom names a different element");
          expect(!(t == y), where + ": pair map failed to move");
        } else {
          expect(t == y, where + ": pair map moved where no atom steps up");
        }
      }
}

// steps that leave the atom family re-enter it through exactly one pair,
// and that pair is the one read off the four-point pattern
void check_mirror_uniqueness(const Involution& y, int top) {
  for (const Permutation& w : atoms(y))
    for (int i = 0; i < top; ++i)
      for (int j = i + 1; j <= top; ++j) {
        if (!covers(w, Transposition(i, j))) continue;
        Permutation wt = compose(w, Permutation::transposition(i, j));
        if (atom_of_something(wt)) continue;
        std::string where =
            "atom " + format_permutation(w) + " step " + pair_text(i, j);
        auto [ip, jp] = mirror_pair(w, i, j, y);
        Permutation back = compose(wt, Permutation::transposition(ip, jp));
        expect(back != w && is_atom_of(back, y),
               where + ": mirrored pair does not re-enter the atom set");
        int ways = 0;
        for (int k = -1; k <= top + 1; ++k)
          for (int l = k + 1; l <= top + 1; ++l) {
            Permutation cand = compose(wt, Permutation::transposition(k, l));
            if (cand != w && is_atom_of(cand, y)) ++ways;
          }
        expect(ways == 1, where + ": expected exactly one way back, found " +
                              std::to_string(ways));
      }
}

void check_little_inv(const Involution& y) {
  for (auto [p, q] : y.two_cycles()) {
    std::string where = "cycle " + pair_text(p, q);
    long long up = 0, down = 0;
    for (const Involution& z : phi_plus(y, q))
      up += static_cast<long long>(involution_words(z).size());
    for (const Involution& z : phi_minus(y, p))
      down += static_cast<long long>(involution_words(z).size());
    expect(up == down, where + ": word counts over the two cover sets differ (" +
                           std::to_string(up) + " vs " + std::to_string(down) + ")");
    try {
      BijectionReport r = verify_bijection(y, p, q);
      expect(static_cast<long long>(r.words) == up,
             where + ": bijection saw a different word count");
    } catch (const std::exception& ex) {
      fail(where + ": " + ex.what());
    }
  }
}

void check_little_fpf(const FpfInvolution& y) {
  int hi = std::max(y.window_hi(), 0) + 2;
  for (auto [p, q] : y.cycles_in(1, hi)) {
    std::string where = "cycle " + pair_text(p, q);
    long long up = 0, down = 0;
    for (const FpfInvolution& z : psi(y, q, PsiSign::plus))
      up += static_cast<long long>(fpf_words(z).size());
    for (const FpfInvolution& z : psi(y, p, PsiSign::minus))
      down += static_cast<long long>(fpf_words(z).size());
    expect(up == down, where + ": word counts over the two cover sets differ (" +
                           std::to_string(up) + " vs " + std::to_string(down) + ")");
    try {
      BijectionReport r = verify_bijection(y, p, q);
      expect(static_cast<long long>(r.words) == up,
             where + ": bijection saw a different word count");
    } catch (const std::exception& ex) {
      fail(where + ": " + ex.what());
    }
  }
}

// --- property bundles, one named check per bullet ----------------------------

std::vector<NamedCheck> perm_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"bruhat order matches the subword oracle on all of S4", [] {
    auto s4 = all_permutations(4);
    for (const Permutation& u : s4)
      for (const Permutation& v : s4)
        expect(bruhat_leq(u, v) == bruhat_leq_by_subwords(u, v),
               "disagreement at " + format_permutation(u) + " vs " +
                   format_permutation(v));
  }});
  cs.push_back({"bruhat order matches the subword oracle on random S6 pairs", [] {
    auto s6 = all_permutations(6);
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
      const Permutation& u = s6[rng() % s6.size()];
      const Permutation& v = s6[rng() % s6.size()];
      expect(bruhat_leq(u, v) == bruhat_leq_by_subwords(u, v),
             "disagreement at " + format_permutation(u) + " vs " +
                 format_permutation(v));
    }
  }});
  cs.push_back({"multiplying one simple reflection moves length by one", [] {
    for (const Permutation& w : all_permutations(5))
      for (int i = 0; i <= 6; ++i) {
        long long d = length(compose(w, Permutation::simple(i))) - length(w);
        expect(d == 1 || d == -1,
               "length stepped by " + std::to_string(d) + " at " +
                   format_permutation(w) + ", letter " + std::to_string(i));
      }
  }});
  cs.push_back({"demazure product is associative and extends composition", [] {
    auto s4 = all_permutations(4);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const Permutation& u = s4[rng() % s4.size()];
      const Permutation& v = s4[rng() % s4.size()];
      const Permutation& w = s4[rng() % s4.size()];
      expect(demazure(demazure(u, v), w) == demazure(u, demazure(v, w)),
             "associativity failed");
      if (length(compose(u, v)) == length(u) + length(v))
        expect(demazure(u, v) == compose(u, v),
               "demazure differs from composition though lengths add");
    }
  }});
  cs.push_back({"flattening respects products that fix the window", [] {
    auto s6 = all_permutations(6);
    std::mt19937_64 rng(20240403);
    for (int trial = 0; trial < 300; ++trial) {
      // a random window E and a random permutation z with z(E) = E
      std::vector<int> E;
      for (int p = 1; p <= 6; ++p)
        if (rng() % 2) E.push_back(p);
      std::vector<int> img = E;
      for (size_t k = img.size(); k > 1; --k)
        std::swap(img[k - 1], img[rng() % k]);
      std::vector<std::pair<int, int>> moved;
      for (size_t k = 0; k < E.size(); ++k) moved.emplace_back(E[k], img[k]);
      Permutation z = Permutation::from_moved(std::move(moved));
      const Permutation& y = s6[rng() % s6.size()];
      expect(flatten(compose(y, z), E) == compose(flatten(y, E), flatten(z, E)),
             "flattened product differs at " + format_permutation(y));
    }
  }});
  cs.push_back({"covers are exactly length-one bruhat steps on S5", [] {
    for (const Permutation& u : all_permutations(5))
      for (int a = 0; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
          Transposition t(a, b);
          Permutation ut = compose(u, Permutation::transposition(a, b));
          bool expected = length(ut) == length(u) + 1 && bruhat_leq(u, ut);
          expect(covers(u, t) == expected,
                 "cover test disagrees at " + format_permutation(u) + " step " +
                     pair_text(a, b));
        }
  }});
  cs.push_back({"shifting preserves length and conjugates covers", [] {
    for (const Permutation& w : all_permutations(5))
      for (int k : {-3, -1, 1, 2, 4}) {
        expect(length(shift(w, k)) == length(w), "length changed under shift");
        for (int a = 0; a <= 5; ++a)
          for (int b = a + 1; b <= 6; ++b)
            expect(covers(w, Transposition(a, b)) ==
                       covers(shift(w, k), Transposition(a + k, b + k)),
                   "covers not conjugated at " + format_permutation(w));
      }
  }});
  return cs;
}

std::vector<NamedCheck> poly_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"divided differences square to zero and satisfy the braid relations", [] {
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 40; ++t) {
      Polynomial f = random_poly(rng, 4, 3, 5);
      for (int i = 1; i <= 3; ++i)
        expect(ddiff(i, ddiff(i, f)).is_zero(), "square is not zero");
      expect(ddiff(1, ddiff(2, ddiff(1, f))) == ddiff(2, ddiff(1, ddiff(2, f))),
             "braid relation failed");
      expect(ddiff(1, ddiff(3, f)) == ddiff(3, ddiff(1, f)),
             "distant letters do not commute");
    }
  }});
  cs.push_back({"twisted leibniz rule", [] {
    std::mt19937_64 rng(31415);
    for (int t = 0; t < 40; ++t) {
      Polynomial f = random_poly(rng, 4, 3, 5);
      Polynomial g = random_poly(rng, 4, 3, 5);
      for (int i = 1; i <= 3; ++i) {
        Polynomial lhs = ddiff(i, f * g);
        Polynomial rhs =
            ddiff(i, f) * g + f.act(Permutation::simple(i)) * ddiff(i, g);
        expect(lhs == rhs, "product rule failed at letter " + std::to_string(i));
      }
    }
  }});
  cs.push_back({"divided differences walk the schubert family on S5", [] {
    for (const Permutation& w : all_permutations(5))
      for (int i = 1; i <= 4; ++i) {
        Polynomial lhs = ddiff(i, schubert(w));
        if (has_descent(w, i))
          expect(lhs == schubert(compose(w, Permutation::simple(i))),
                 "descent step differs at " + format_permutation(w));
        else
          expect(lhs.is_zero(), "ascent did not vanish at " + format_permutation(w));
      }
  }});
  cs.push_back({"schubert values do not depend on the ambient window", [] {
    for (const Permutation& w : all_permutations(4)) {
      Polynomial f = schubert(w);
      expect(f.is_homogeneous(), "not homogeneous at " + format_permutation(w));
      expect(f.degree() == static_cast<int>(length(w)),
             "degree is not the length at " + format_permutation(w));
      expect(schubert(compose(w, Permutation::identity())) == f,
             "recomputation through a larger window differs at " +
                 format_permutation(w));
      for (const auto& [m, c] : f.terms())
        expect(c > 0, "negative coefficient at " + format_permutation(w));
    }
  }});
  cs.push_back({"schubert polynomials of S3 are linearly independent", [] {
    std::vector<Polynomial> polys;
    std::map<Monomial, int> col;
    for (const Permutation& w : all_permutations(3)) {
      polys.push_back(schubert(w));
      for (const auto& [m, c] : polys.back().terms())
        col.emplace(m, static_cast<int>(col.size()));
    }
    std::vector<std::vector<long long>> mat(
        polys.size(), std::vector<long long>(col.size(), 0));
    for (size_t r = 0; r < polys.size(); ++r)
      for (const auto& [m, c] : polys[r].terms()) mat[r][col[m]] = c;
    size_t rank = 0;
    for (size_t c = 0; c < col.size() && rank < mat.size(); ++c) {
      size_t pivot = rank;
      while (pivot < mat.size() && mat[pivot][c] == 0) ++pivot;
      if (pivot == mat.size()) continue;
      std::swap(mat[rank], mat[pivot]);
      for (size_t r = rank + 1; r < mat.size(); ++r) {
        if (mat[r][c] == 0) continue;
        long long a = mat[rank][c], b = mat[r][c];
        for (size_t k = c; k < col.size(); ++k)
          mat[r][k] = mat[r][k] * a - mat[rank][k] * b;
      }
      ++rank;
    }
    expect(rank == 6, "rank " + std::to_string(rank) + " instead of 6");
  }});
  return cs;
}

std::vector<NamedCheck> involution_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"three atom constructions agree at rank 5", [] {
    for (const Involution& y : all_involutions(5)) {
      auto direct = atoms(y);
      expect(!direct.empty(), "no atoms at " + format_cycles(y));
      expect(direct == atoms_by_peeling(y),
             "peeling construction differs at " + format_cycles(y));
      expect(direct == atoms_by_filtering(y, 5),
             "filtering construction differs at " + format_cycles(y));
      for (const Permutation& w : direct) {
        expect(is_atom_of(w, y), "membership test rejects a listed atom");
        expect(length(w) == hat_length(y), "atom of the wrong length");
      }
    }
  }});
  cs.push_back({"atom sets of distinct involutions are disjoint at rank 5", [] {
    std::set<Permutation> seen;
    size_t total = 0;
    for (const Involution& y : all_involutions(5)) {
      auto a = atoms(y);
      total += a.size();
      seen.insert(a.begin(), a.end());
    }
    expect(seen.size() == total, "two involutions share an atom");
  }});
  cs.push_back({"atom membership is decided by two-orbit flattenings at rank 5", [] {
    auto s5 = all_permutations(5);
    for (const Involution& y : all_involutions(5)) {
      // the invariant windows: one orbit of y, or a union of two
      std::vector<std::vector<int>> orbits;
      for (int i = 1; i <= 5; ++i) {
        int j = y(i);
        if (j < i) continue;
        if (j == i)
          orbits.push_back({i});
        else
          orbits.push_back({i, j});
      }
      std::vector<std::vector<int>> windows;
      for (size_t a = 0; a < orbits.size(); ++a) {
        windows.push_back(orbits[a]);
        for (size_t b = a + 1; b < orbits.size(); ++b) {
          std::vector<int> e = orbits[a];
          e.insert(e.end(), orbits[b].begin(), orbits[b].end());
          std::sort(e.begin(), e.end());
          windows.push_back(std::move(e));
        }
      }
      for (const Permutation& w : s5) {
        bool all_pass = true;
        for (const auto& E : windows) {
          Involution yE(flatten(y.perm(), E));
          if (!is_atom_of(flatten(w, E), yE)) {
            all_pass = false;
            break;
          }
        }
        expect(all_pass == is_atom_of(w, y),
               "flattened membership disagrees at y = " + format_cycles(y) +
                   ", w = " + format_permutation(w));
      }
    }
  }});
  cs.push_back({"every involution word works for exactly its involution at rank 4", [] {
    for (const Involution& y : all_involutions(4))
      for (const Word& word : involution_words(y)) {
        expect(is_involution_word(word, y), "listed word rejected");
        expect(involution_of_word(word) == y, "word witnesses another element");
      }
  }});
  cs.push_back({"restricted order matches the subword criterion at rank 4", [] {
    auto invs = all_involutions(4);
    std::vector<std::vector<Word>> words;
    words.reserve(invs.size());
    for (const Involution& y : invs) words.push_back(involution_words(y));
    for (size_t i = 0; i < invs.size(); ++i)
      for (size_t j = 0; j < invs.size(); ++j) {
        bool sub = false;
        for (const Word& a : words[i]) {
          for (const Word& b : words[j])
            if (is_subword(a, b)) {
              sub = true;
              break;
            }
          if (sub) break;
        }
        expect(inv_bruhat_leq(invs[i], invs[j]) == sub,
               "order disagrees at " + format_cycles(invs[i]) + " vs " +
                   format_cycles(invs[j]));
      }
  }});
  cs.push_back({"restricted covers are rank-one jumps at rank 4", [] {
    auto invs = all_involutions(4);
    for (const Involution& y : invs)
      for (const Involution& z : invs) {
        bool strict = inv_bruhat_leq(y, z) && !(y == z);
        bool nothing_between = true;
        if (strict)
          for (const Involution& m : invs)
            if (!(m == y) && !(m == z) && inv_bruhat_leq(y, m) &&
                inv_bruhat_leq(m, z)) {
              nothing_between = false;
              break;
            }
        expect(inv_covers(y, z) == (strict && nothing_between),
               "cover test disagrees at " + format_cycles(y) + " vs " +
                   format_cycles(z));
        if (inv_covers(y, z))
          expect(hat_length(z) == hat_length(y) + 1, "cover is not a rank-one jump");
      }
  }});
  return cs;
}

std::vector<NamedCheck> tau_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"every restricted cover inside [0,7] carries a window label at rank 6", [] {
    // candidates: all involutions supported in [0, 7]
    std::vector<Involution> cands;
    for (const Involution& z : all_involutions(8))
      cands.emplace_back(shift(z.perm(), -1));
    for (const Involution& y : all_involutions(6)) {
      std::set<Involution> labeled;
      for (int i = 0; i <= 6; ++i)
        for (int j = i + 1; j <= 7; ++j)
          if (tau_covers(i, j, y)) labeled.insert(tau(i, j, y));
      std::set<Involution> covers_found;
      for (const Involution& z : cands)
        if (inv_covers(y, z)) covers_found.insert(z);
      expect(labeled == covers_found,
             "cover set and pair-map image differ at " + format_cycles(y));
    }
  }});
  cs.push_back({"step-up labels are consistent and target-disjoint at rank 5", [] {
    for (const Involution& x : all_involutions(5)) {
      std::map<Involution, std::set<std::pair<int, int>>> labels;
      for (const Permutation& w : atoms(x))
        for (int i = 0; i <= 5; ++i)
          for (int j = i + 1; j <= 6; ++j) {
            if (!covers(w, Transposition(i, j))) continue;
            Permutation wt = compose(w, Permutation::transposition(i, j));
            Involution z;
            if (!atom_of_something(wt, &z)) continue;
            expect(tau(i, j, x) == z,
                   "label does not recover the target at " + format_cycles(x));
            expect(tau_covers(i, j, x), "label is not a covering label");
            labels[z].insert({i, j});
          }
      for (auto it = labels.begin(); it != labels.end(); ++it)
        for (auto jt = std::next(it); jt != labels.end(); ++jt) {
          std::vector<std::pair<int, int>> common;
          std::set_intersection(it->second.begin(), it->second.end(),
                                jt->second.begin(), jt->second.end(),
                                std::back_inserter(common));
          expect(common.empty(), "two targets share a label at " + format_cycles(x));
        }
      // counting form of the step-up bijection onto each target's atom set
      for (const auto& [z, T] : labels) {
        size_t pairs = 0;
        for (const Permutation& w : atoms(x))
          for (auto [i, j] : T)
            if (covers(w, Transposition(i, j))) ++pairs;
        expect(pairs == atoms(z).size(),
               "step-up count misses the atom count of " + format_cycles(z));
      }
    }
  }});
  cs.push_back({"cover searches are monotone and nonempty along cycles at rank 6", [] {
    for (const Involution& y : all_involutions(6))
      for (auto [p, q] : y.cycles_in(1, 6)) {
        auto pp = phi_plus(y, p), pq = phi_plus(y, q);
        auto mp = phi_minus(y, p), mq = phi_minus(y, q);
        std::string where = format_cycles(y) + " cycle " + pair_text(p, q);
        expect(std::includes(pq.begin(), pq.end(), pp.begin(), pp.end()),
               where + ": upward search at p exceeds the one at q");
        expect(std::includes(mp.begin(), mp.end(), mq.begin(), mq.end()),
               where + ": downward search at q exceeds the one at p");
        expect(!pq.empty(), where + ": no upward cover");
        expect(!mp.empty(), where + ": no downward cover");
      }
  }});
  return cs;
}

std::vector<NamedCheck> inv_schubert_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"divided differences walk down the weak order at rank 5", [] {
    for (const Involution& y : all_involutions(5)) {
      Polynomial f = inv_schubert(y);
      for (int i = 1; i <= 5; ++i) {
        Permutation s = Permutation::simple(i);
        Permutation ys = compose(y.perm(), s);
        Polynomial d = ddiff(i, f);
        std::string where = format_cycles(y) + " letter " + std::to_string(i);
        if (!has_descent(y.perm(), i))
          expect(d.is_zero(), where + ": ascent did not vanish");
        else if (compose(s, y.perm()) == ys)
          expect(d == inv_schubert(Involution(ys)),
                 where + ": commuting descent stepped wrong");
        else
          expect(d == inv_schubert(Involution(compose(s, ys))),
                 where + ": conjugating descent stepped wrong");
      }
    }
  }});
  cs.push_back({"polynomials are homogeneous of the rank degree at rank 5", [] {
    for (const Involution& y : all_involutions(5)) {
      Polynomial f = inv_schubert(y);
      expect(f.is_homogeneous(), "not homogeneous at " + format_cycles(y));
      expect(f.degree() == hat_length(y), "degree off at " + format_cycles(y));
      expect(!f.is_zero(), "vanished at " + format_cycles(y));
      expect(upsilon(y) == f * (1LL << kappa(y)),
             "doubled form is not 2^kappa times the polynomial");
    }
  }});
  return cs;
}

std::vector<NamedCheck> fpf_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"length halves window inversions and counts nestings at rank 8", [] {
    for (const FpfInvolution& z : all_fpf_involutions(8)) {
      long long brute = (length(z.window_perm(-1, 10)) - 6) / 2;
      expect(fpf_length(z) == brute,
             "widened-window recount differs at " + format_fpf(z));
      auto cyc = z.cycles_in(1, 8);
      long long nested = 0, crossing = 0;
      for (size_t u = 0; u < cyc.size(); ++u)
        for (size_t v = 0; v < cyc.size(); ++v) {
          if (cyc[u].first < cyc[v].first && cyc[v].first < cyc[u].second &&
              cyc[v].second < cyc[u].second)
            ++nested;
          if (cyc[u].first < cyc[v].first && cyc[v].first < cyc[u].second &&
              cyc[u].second < cyc[v].second)
            ++crossing;
        }
      expect(fpf_length(z) == 2 * nested + crossing,
             "nesting count differs at " + format_fpf(z));
    }
  }});
  cs.push_back({"atoms match a brute-force filter of S6 and are disjoint", [] {
    std::map<FpfInvolution, std::vector<Permutation>> brute;
    size_t counted = 0;
    for (const Permutation& w : all_permutations(6)) {
      FpfInvolution z = theta_conjugate(w);
      if (length(w) == fpf_length(z)) {
        brute[z].push_back(w);
        ++counted;
      }
    }
    for (auto& [z, ws] : brute) std::sort(ws.begin(), ws.end());
    size_t total = 0;
    for (const FpfInvolution& z : all_fpf_involutions(6)) {
      auto ws = fpf_atoms(z);
      expect(!ws.empty(), "no atoms at " + format_fpf(z));
      expect(ws == brute[z], "filtering construction differs at " + format_fpf(z));
      total += ws.size();
      for (const Permutation& w : ws)
        expect(theta_conjugate(w) == z && length(w) == fpf_length(z),
               "atom fails the defining conditions at " + format_fpf(z));
    }
    expect(total == counted, "some minimal conjugator is claimed by no element");
  }});
  cs.push_back({"covers are rank-one and generate the restricted order at rank 6", [] {
    auto f6 = all_fpf_involutions(6);
    int m = static_cast<int>(f6.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a) {
      leq[a][a] = true;
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
          if (auto z = fpf_cover(f6[a], Transposition(i, j))) {
            expect(fpf_length(*z) == fpf_length(f6[a]) + 1,
                   "cover is not a rank-one jump at " + format_fpf(f6[a]));
            auto it = std::find(f6.begin(), f6.end(), *z);
            expect(it != f6.end(), "cover left the window universe");
            leq[a][static_cast<int>(it - f6.begin())] = true;
          }
    }
    for (int k = 0; k < m; ++k)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (leq[a][k] && leq[k][b]) leq[a][b] = true;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        expect(leq[a][b] == fpf_bruhat_leq(f6[a], f6[b]),
               "closure of covers differs from the order at " + format_fpf(f6[a]) +
                   " vs " + format_fpf(f6[b]));
  }});
  cs.push_back({"descent peeling is compatible with cover searches at rank 6", [] {
    auto ds = [](const std::vector<FpfInvolution>& xs, int i) {
      std::vector<FpfInvolution> out;
      for (const FpfInvolution& z : xs)
        if (is_fpf_descent(z, i)) out.push_back(fpf_conjugate(z, i));
      std::sort(out.begin(), out.end());
      return out;
    };
    for (const FpfInvolution& y : all_fpf_involutions(6))
      for (int i : fpf_descents(y)) {
        FpfInvolution sys = fpf_conjugate(y, i);
        for (auto [p, q] : y.cycles_in(1, 8)) {
          int sp = p == i ? i + 1 : p == i + 1 ? i : p;
          int sq = q == i ? i + 1 : q == i + 1 ? i : q;
          auto lhs_minus = psi(sys, sp, PsiSign::minus);
          auto rhs_minus = ds(psi(y, p, PsiSign::minus), i);
          auto lhs_plus = psi(sys, sq, PsiSign::plus);
          auto rhs_plus = ds(psi(y, q, PsiSign::plus), i);
          std::string where = format_fpf(y) + " letter " + std::to_string(i) +
                              " cycle " + pair_text(p, q);
          if (i == p || i == q) {
            expect(!std::binary_search(rhs_minus.begin(), rhs_minus.end(), y),
                   where + ": y reappears before adjoining it");
            rhs_minus.push_back(y);
            std::sort(rhs_minus.begin(), rhs_minus.end());
          }
          if (i == p - 1 || i == q - 1) {
            expect(!std::binary_search(rhs_plus.begin(), rhs_plus.end(), y),
                   where + ": y reappears before adjoining it");
            rhs_plus.push_back(y);
            std::sort(rhs_plus.begin(), rhs_plus.end());
          }
          expect(lhs_minus == rhs_minus, where + ": downward searches differ");
          expect(lhs_plus == rhs_plus, where + ": upward searches differ");
        }
      }
  }});
  cs.push_back({"cover searches are nonempty and nested across cycles at rank 8", [] {
    for (const FpfInvolution& y : all_fpf_involutions(8))
      for (auto [p, q] : y.cycles_in(1, 10)) {
        auto plus_p = psi(y, p, PsiSign::plus);
        auto plus_q = psi(y, q, PsiSign::plus);
        auto minus_p = psi(y, p, PsiSign::minus);
        auto minus_q = psi(y, q, PsiSign::minus);
        std::string where = format_fpf(y) + " cycle " + pair_text(p, q);
        expect(!plus_q.empty(), where + ": no upward cover");
        expect(!minus_p.empty(), where + ": no downward cover");
        expect(std::includes(plus_q.begin(), plus_q.end(), plus_p.begin(),
                             plus_p.end()),
               where + ": upward search at p exceeds the one at q");
        expect(std::includes(minus_p.begin(), minus_p.end(), minus_q.begin(),
                             minus_q.end()),
               where + ": downward search at q exceeds the one at p");
      }
  }});
  cs.push_back({"restricted order matches the subword criterion at rank 6", [] {
    auto f6 = all_fpf_involutions(6);
    std::map<FpfInvolution, std::vector<Word>> words;
    for (const FpfInvolution& z : f6) words[z] = fpf_words(z);
    for (const FpfInvolution& y : f6)
      for (const FpfInvolution& z : f6) {
        bool sub = false;
        for (const Word& b : words[z]) {
          for (const Word& a : words[y])
            if (is_subword(a, b)) {
              sub = true;
              break;
            }
          if (sub) break;
        }
        expect(sub == fpf_bruhat_leq(y, z),
               "order disagrees at " + format_fpf(y) + " vs " + format_fpf(z));
      }
  }});
  return cs;
}

std::vector<NamedCheck> little_property_checks() {
  std::vector<NamedCheck> cs;
  cs.push_back({"steps are mutually inverse at rank 4", [] {
    for (const Involution& y : all_involutions(4))
      for (const MarkedWord& mw : inserted_words(involution_words(y), 2)) {
        expect(step_up(step_down(mw, y), y) == mw,
               "down-then-up moved at " + format_cycles(y));
        expect(step_down(step_up(mw, y), y) == mw,
               "up-then-down moved at " + format_cycles(y));
      }
    for (const FpfInvolution& y : all_fpf_involutions(4))
      for (const MarkedWord& mw : inserted_words(fpf_words(y), 2)) {
        expect(step_up(step_down(mw, y), y) == mw,
               "down-then-up moved at " + format_fpf(y));
        expect(step_down(step_up(mw, y), y) == mw,
               "up-then-down moved at " + format_fpf(y));
      }
  }});
  cs.push_back({"semi-reduced states are plainly reduced and never repeat at rank 6", [] {
    for (const FpfInvolution& y : all_fpf_involutions(6))
      for (const MarkedWord& mw : inserted_words(fpf_words(y), 2)) {
        if (theta_conjugate(Permutation::from_word(mw.word)) == y)
          expect(is_reduced_word(mw.word),
                 "a word conjugating to y is not plainly reduced at " + format_fpf(y));
        if (classify(mw, y) == WordStatus::semi_reduced)
          expect(classify(step_down(mw, y), y) != WordStatus::semi_reduced,
                 "two semi-reduced states in a row at " + format_fpf(y));
      }
  }});
  return cs;
}

// --- registry ----------------------------------------------------------------

std::function<std::vector<Involution>()> inv_universe(int n) {
  return [n] { return all_involutions(n); };
}

std::function<std::vector<FpfInvolution>()> fpf_universe(int n) {
  return [n] { return all_fpf_involutions(n); };
}

std::string inv_label(const Involution& y) { return format_cycles(y); }
std::string fpf_label(const FpfInvolution& z) { return format_fpf(z); }

std::vector<SuiteDef> build_registry() {
  std::vector<SuiteDef> defs;

  defs.push_back(named_suite(
      {"worked-examples", "frozen worked examples reproduced end to end"},
      worked_example_checks));

  defs.push_back(item_suite<int>(
      {"products-inv",
       "closed product form at the order-reversing involution, ranks 1-7 (alias wy-n7)"},
      [] { return std::vector<int>{1, 2, 3, 4, 5, 6, 7}; },
      [](int n) { return "rank " + std::to_string(n); },
      [](int n) {
        expect(inv_schubert(inv_reversal(n)) == longest_inv_product(n),
               "polynomial differs from the closed product");
      }));

  defs.push_back(item_suite<int>(
      {"products-fpf",
       "closed product form at the order-reversing matching, ranks 2-8 (alias wy-fpf-n8)"},
      [] { return std::vector<int>{2, 4, 6, 8}; },
      [](int n) { return "rank " + std::to_string(n); },
      [](int n) {
        expect(fpf_schubert(fpf_reversal(n)) == longest_fpf_product(n),
               "polynomial differs from the closed product");
      }));

  defs.push_back(item_suite<Involution>(
      {"transitions-inv", "transition identity at every cycle, all involutions of rank 6"},
      inv_universe(6), inv_label,
      [](const Involution& y) { check_transitions_inv(y, 7); }));

  defs.push_back(item_suite<FpfInvolution>(
      {"transitions-fpf", "matching transition identity at every cycle, window 6"},
      fpf_universe(6), fpf_label, check_transitions_fpf));

  defs.push_back(item_suite<Involution>(
      {"transitions-inv-spot", "transition identity on 100 sampled involutions of rank 7"},
      [] {
        auto all = all_involutions(7);
        std::vector<Involution> out;
        for (long long k : sample_indices(static_cast<long long>(all.size()), 100,
                                          0x5eed0001))
          out.push_back(all[k]);
        return out;
      },
      inv_label, [](const Involution& y) { check_transitions_inv(y, 8); }));

  defs.push_back(item_suite<FpfInvolution>(
      {"transitions-fpf-spot", "matching transition identity on 100 sampled matchings of window 8"},
      [] {
        auto all = all_fpf_involutions(8);
        std::vector<FpfInvolution> out;
        for (long long k : sample_indices(static_cast<long long>(all.size()), 100,
                                          0x5eed0002))
          out.push_back(all[k]);
        return out;
      },
      fpf_label, check_transitions_fpf));

  defs.push_back(item_suite<Involution>(
      {"tau-s6", "pair-map targets match atom step-ups, all involutions of rank 6"},
      inv_universe(6), inv_label,
      [](const Involution& y) { check_tau_uniqueness(y, 7); }));

  defs.push_back(item_suite<Involution>(
      {"tau-s8", "pair-map targets match atom step-ups, all involutions of rank 8"},
      inv_universe(8), inv_label,
      [](const Involution& y) { check_tau_uniqueness(y, 9); }));

  defs.push_back(item_suite<Involution>(
      {"tau-s9", "pair-map targets match atom step-ups, all involutions of rank 9", true},
      inv_universe(9), inv_label,
      [](const Involution& y) { check_tau_uniqueness(y, 10); }));

  defs.push_back(item_suite<Involution>(
      {"mir2-s6", "unique mirrored re-entry after leaving the atom family, rank 6"},
      inv_universe(6), inv_label,
      [](const Involution& y) { check_mirror_uniqueness(y, 7); }));

  defs.push_back(item_suite<Involution>(
      {"mir2-s8", "unique mirrored re-entry after leaving the atom family, rank 8"},
      inv_universe(8), inv_label,
      [](const Involution& y) { check_mirror_uniqueness(y, 9); }));

  defs.push_back(item_suite<Involution>(
      {"little-inv", "bumping bijection and word-count identity at every cycle, rank 5"},
      inv_universe(5), inv_label, check_little_inv));

  defs.push_back(item_suite<FpfInvolution>(
      {"little-fpf", "bumping bijection and word-count identity at every cycle, window 6"},
      fpf_universe(6), fpf_label, check_little_fpf));

  defs.push_back(named_suite(
      {"props-perm", "permutation-layer invariants at their stated ranks"},
      perm_property_checks));
  defs.push_back(named_suite(
      {"props-poly", "polynomial and divided-difference invariants"},
      poly_property_checks));
  defs.push_back(named_suite(
      {"props-involutions", "involution and atom invariants at their stated ranks"},
      involution_property_checks));
  defs.push_back(named_suite(
      {"props-tau", "pair-map cover structure invariants at their stated ranks"},
      tau_property_checks));
  defs.push_back(named_suite(
      {"props-inv-schubert", "involution schubert recurrence and degree invariants"},
      inv_schubert_property_checks));
  defs.push_back(named_suite(
      {"props-fpf", "fixed-point-free layer invariants at their stated ranks"},
      fpf_property_checks));
  defs.push_back(named_suite(
      {"props-little", "bumping step invariants at their stated ranks"},
      little_property_checks));

  return defs;
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = build_registry();
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"wy-n7", "products-inv"}, {"wy-fpf-n8", "products-fpf"}};
  auto it = aliases.find(name);
  const std::string& canonical = it == aliases.end() ? name : it->second;
  for (const SuiteDef& def : registry())
    if (def.info.name == canonical) return def;
  throw suite_error("unknown suite '" + name + "'; see list-suites");
}

}  // namespace

// ---------------------------------------------------------------------------
// driver

std::vector<SuiteInfo> list_suites() {
  std::vector<SuiteInfo> out;
  for (const SuiteDef& def : registry()) out.push_back(def.info);
  return out;
}

std::string SweepReport::canonical_text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "universe: " << universe_size << "\n";
  os << "checked: " << checked << "\n";
  os << "failures: " << failures.size() << "\n";
  for (const std::string& f : failures) os << "  - " << f << "\n";
  os << "result: " << (failures.empty() ? "pass" : "fail") << "\n";
  return os.str();
}

SweepReport run_suite(const std::string& name, const SweepOptions& opts) {
  const SuiteDef& def = find_suite(name);
  if (def.info.big && !opts.big)
    throw suite_error("suite '" + def.info.name + "' is gated behind --big");
  auto t0 = std::chrono::steady_clock::now();

  SweepReport report;
  report.suite = def.info.name;
  report.universe_size = def.size();

  long long n = report.universe_size;
  int workers = std::max(1, opts.workers);
  std::vector<std::vector<std::pair<long long, std::string>>> found(workers);
  std::mutex log_mutex;

  auto run_range = [&](int slot, long long begin, long long end) {
    def.run(begin, end, [&, slot](long long index, const std::string& text) {
      found[slot].emplace_back(index, text);
      if (opts.log) {
        std::lock_guard<std::mutex> lock(log_mutex);
        (*opts.log) << "[" << def.info.name << "] " << text << std::endl;
      }
    });
  };

  if (workers == 1) {
    run_range(0, 0, n);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < workers; ++k) {
      long long begin = n * k / workers;
      long long end = n * (k + 1) / workers;
      threads.emplace_back(run_range, k, begin, end);
    }
    for (std::thread& t : threads) t.join();
  }

  report.checked = n;
  std::vector<std::pair<long long, std::string>> all;
  for (auto& part : found)
    all.insert(all.end(), part.begin(), part.end());
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, text] : all) report.failures.push_back(std::move(text));

  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace invschub
