#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "invschub/permutation.hpp"

namespace invschub {

/// Monomial in x_1, x_2, ...; exps()[k] is the exponent of x_{k+1}.
/// Trailing zero exponents are trimmed, so representation is canonical.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one() { return {}; }
  static Monomial x(int var, int exp = 1);

  int exp(int var) const;  // exponent of x_var, var >= 1
  int degree() const;
  int max_var() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exps() const { return exps_; }

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Sparse polynomial with integer coefficients in x_1, x_2, ...
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long long c);  // constant
  static Polynomial term(long long c, Monomial m);
  static Polynomial x(int var) { return term(1, Monomial::x(var)); }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  long long coeff(const Monomial& m) const;
  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_homogeneous() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(long long c) const;
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Substitute x_i -> x_{w(i)}. Variables must land in {x_1, x_2, ...}.
  Polynomial act(const Permutation& w) const;

  /// Display/text order: total degree descending, then exponent vector
  /// lexicographically descending. "x1^2 + x1*x2 - 2*x3", "0" when empty.
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void add_term(const Monomial& m, long long c);
  std::map<Monomial, long long> terms_;
};

inline Polynomial operator*(long long c, const Polynomial& f) { return f * c; }

/// Divided difference: (f - s_i f) / (x_i - x_{i+1}), computed by synthetic
/// division in x_i; a nonzero remainder trips an invariant check.
Polynomial ddiff(int i, const Polynomial& f);

/// Schubert polynomial of a permutation supported on {1, 2, ...}; memoized.
Polynomial schubert(const Permutation& w);

/// Window cap for the Schubert recursion (guards runaway inputs).
int schubert_window_cap();
void set_schubert_window_cap(int n);

/// x_p + x_q for p < q, or x_p alone when p == q.
Polynomial x_pair(int p, int q);

}  // namespace invschub
