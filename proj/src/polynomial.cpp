#include "invschub/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace invschub {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) INVSCHUB_CHECK(e >= 0, "monomial exponents must be nonnegative");
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::x(int var, int exp) {
  INVSCHUB_CHECK(var >= 1, "variable index must be positive");
  std::vector<int> e(var, 0);
  e[var - 1] = exp;
  return Monomial(std::move(e));
}

int Monomial::exp(int var) const {
  if (var < 1 || var > max_var()) return 0;
  return exps_[var - 1];
}

int Monomial::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<int> e(std::max(exps_.size(), o.exps_.size()), 0);
  for (size_t k = 0; k < exps_.size(); ++k) e[k] += exps_[k];
  for (size_t k = 0; k < o.exps_.size(); ++k) e[k] += o.exps_[k];
  return Monomial(std::move(e));
}

Polynomial::Polynomial(long long c) {
  if (c != 0) terms_[Monomial::one()] = c;
}

Polynomial Polynomial::term(long long c, Monomial m) {
  Polynomial f;
  if (c != 0) f.terms_[std::move(m)] = c;
  return f;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

long long Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d == -1) d = m.degree();
    if (m.degree() != d) return false;
  }
  return true;
}

void Polynomial::add_term(const Monomial& m, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(long long c) const {
  Polynomial r;
  if (c != 0)
    for (const auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Polynomial Polynomial::act(const Permutation& w) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    std::vector<int> e;
    for (int var = 1; var <= m.max_var(); ++var) {
      int ev = m.exp(var);
      if (ev == 0) continue;
      int target = w(var);
      INVSCHUB_CHECK(target >= 1, "variable permutation must preserve positive indices");
      if (static_cast<int>(e.size()) < target) e.resize(target, 0);
      e[target - 1] += ev;
    }
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

namespace {
// display order: degree descending, then exponent vector lexicographically descending
bool display_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a > b;
}
}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Monomial, long long>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::ostringstream out;
  bool first = true;
  for (auto* t : order) {
    long long c = t->second;
    const Monomial& m = t->first;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long ac = c < 0 ? -c : c;
    std::string vars;
    for (int var = 1; var <= m.max_var(); ++var) {
      int e = m.exp(var);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(var);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << ac;
    } else {
      if (ac != 1) out << ac << "*";
      out << vars;
    }
  }
  return out.str();
}

Polynomial Polynomial::parse(const std::string& text) {
  Polynomial r;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return r;
  bool expect_term = true;
  long long sign = 1;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -sign : sign;
      ++pos;
      expect_term = true;
      continue;
    }
    INVSCHUB_CHECK(expect_term, "polynomial parse: unexpected token");
    // one term: [int][*x<k>[^e]]*
    long long c = 1;
    bool saw_digit = false;
    if (isdigit(static_cast<unsigned char>(text[pos]))) {
      c = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        c = c * 10 + (text[pos++] - '0');
      saw_digit = true;
    }
    Monomial m = Monomial::one();
    bool saw_var = false;
    while (true) {
      skip_ws();
      size_t save = pos;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      } else if (saw_digit || saw_var) {
        break;  // factors must be '*'-separated after the first
      }
      if (pos < text.size() && text[pos] == 'x') {
        ++pos;
        INVSCHUB_CHECK(pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])),
                       "polynomial parse: variable index expected");
        int var = 0;
        while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
          var = var * 10 + (text[pos++] - '0');
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          INVSCHUB_CHECK(pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])),
                         "polynomial parse: exponent expected");
          e = 0;
          while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
            e = e * 10 + (text[pos++] - '0');
        }
        m = m * Monomial::x(var, e);
        saw_var = true;
      } else {
        pos = save;
        break;
      }
    }
    INVSCHUB_CHECK(saw_digit || saw_var, "polynomial parse: empty term");
    r.add_term(m, sign * c);
    sign = 1;
    expect_term = false;
    skip_ws();
  }
  return r;
}

Polynomial ddiff(int i, const Polynomial& f) {
  INVSCHUB_CHECK(i >= 1, "divided difference index must be positive");
  Polynomial g = f - f.act(Permutation::simple(i));
  if (g.is_zero()) return g;
  // synthetic division of g by (x_i - x_{i+1}), viewing g in the variable x_i:
  // with g = sum_d g_d x_i^d, the quotient satisfies q_{d} = g_{d+1} + x_{i+1} q_{d+1}
  // downward from the top degree, and the remainder is g_0 + x_{i+1} q_0.
  int top = 0;
  for (const auto& [m, c] : g.terms()) top = std::max(top, m.exp(i));
  std::vector<Polynomial> gd(top + 1);
  for (const auto& [m, c] : g.terms()) {
    std::vector<int> e = m.exps();
    int d = m.exp(i);
    if (d > 0) e[i - 1] = 0;
    gd[d] += Polynomial::term(c, Monomial(std::move(e)));
  }
  Polynomial xi1 = Polynomial::x(i + 1);
  std::vector<Polynomial> qd(top);  // quotient coefficients by x_i-degree
  Polynomial carry;                 // q_{d+1} while stepping down
  for (int d = top - 1; d >= 0; --d) {
    qd[d] = gd[d + 1] + xi1 * carry;
    carry = qd[d];
  }
  Polynomial rem = gd[0] + xi1 * carry;
  INVSCHUB_CHECK(rem.is_zero(), "divided difference: nonzero remainder (broken symmetry)");
  Polynomial q;
  for (int d = 0; d < top; ++d) {
    if (qd[d].is_zero()) continue;
    q += qd[d] * Polynomial::term(1, Monomial::x(i, d));
  }
  return q;
}

namespace {
std::mutex schubert_mutex;
std::unordered_map<Permutation, Polynomial> schubert_cache;
int schubert_cap = 16;
}  // namespace

int schubert_window_cap() { return schubert_cap; }
void set_schubert_window_cap(int n) { schubert_cap = n; }

Polynomial schubert(const Permutation& w) {
  INVSCHUB_CHECK(w.min_support() >= 1, "Schubert polynomials need support in {1, 2, ...}");
  {
    std::lock_guard<std::mutex> lock(schubert_mutex);
    auto it = schubert_cache.find(w);
    if (it != schubert_cache.end()) return it->second;
  }
  int n = std::max(w.max_support(), 1);
  INVSCHUB_CHECK(n <= schubert_window_cap(),
                 "Schubert window " + std::to_string(n) + " exceeds cap " +
                     std::to_string(schubert_window_cap()));
  Polynomial result;
  bool longest = true;
  for (int i = 1; i <= n && longest; ++i) longest = w(i) == n + 1 - i;
  if (longest) {
    // x_1^{n-1} x_2^{n-2} ... x_{n-1}
    std::vector<int> e;
    for (int k = n - 1; k >= 1; --k) e.push_back(k);
    result = Polynomial::term(1, Monomial(std::move(e)));
  } else {
    int i = 1;
    while (w(i) > w(i + 1)) ++i;  // first ascent; exists since w is not longest in S_n
    result = ddiff(i, schubert(compose(w, Permutation::simple(i))));
  }
  std::lock_guard<std::mutex> lock(schubert_mutex);
  return schubert_cache.emplace(w, std::move(result)).first->second;
}

Polynomial x_pair(int p, int q) {
  INVSCHUB_CHECK(p <= q, "x_pair expects p <= q");
  if (p == q) return Polynomial::x(p);
  return Polynomial::x(p) + Polynomial::x(q);
}

}  // namespace invschub
