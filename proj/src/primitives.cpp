#include "treehopf/primitives.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "treehopf/growth.hpp"
#include "treehopf/linalg.hpp"

namespace treehopf {

std::vector<std::vector<int>> partition_multiplicities(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> b(std::max(n, 0), 0);
  std::function<void(int, int)> go = [&](int part, int remaining) {
    if (remaining == 0) {
      out.push_back(b);
      return;
    }
    if (part == 0)
      return;
    for (int m = remaining / part; m >= 0; --m) {
      b[part - 1] = m;
      go(part - 1, remaining - m * part);
    }
    b[part - 1] = 0;
  };
  if (n == 0)
    return {{}};
  go(n, n);
  return out;
}

namespace {

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer ipow(const Integer &base, int e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

int total(const std::vector<int> &b) {
  int s = 0;
  for (int x : b)
    s += x;
  return s;
}

// (sum b)! / prod b_j!
Integer multinomial(const std::vector<int> &b) {
  Integer out = factorial(total(b));
  for (int x : b)
    out /= factorial(x);
  return out;
}

} // namespace

AlgebraElement ladder_primitive(int i) {
  if (i < 1)
    throw std::invalid_argument("ladder_primitive index must be >= 1");
  AlgebraElement out;
  for (const auto &b : partition_multiplicities(i)) {
    int s = total(b);
    Rational coef(factorial(s - 1));
    for (int x : b)
      coef /= Rational(factorial(x));
    if (s % 2 == 0)
      coef = -coef;
    std::vector<RootedTree> trees;
    for (int j = 1; j <= i; ++j)
      for (int k = 0; k < b[j - 1]; ++k)
        trees.push_back(ladder(j));
    out.add_term(Forest(std::move(trees)), coef);
  }
  return out;
}

AlgebraElement psi_substitute(int i, const std::vector<AlgebraElement> &values) {
  if (i < 0 || static_cast<int>(values.size()) != i)
    throw std::invalid_argument("psi_substitute: expected " + std::to_string(i) + " values");
  AlgebraElement out;
  for (const auto &b : partition_multiplicities(i)) {
    AlgebraElement term = AlgebraElement::scalar(1);
    Rational coef = 1;
    for (int j = 1; j <= i; ++j) {
      if (b[j - 1] == 0)
        continue;
      term = term * power(values[j - 1], b[j - 1]);
      coef /= Rational(factorial(b[j - 1]));
    }
    term *= coef;
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Primitive bases

bool pruned(const Forest &f) {
  static const RootedTree leaf;
  static const RootedTree l2 = ladder(2);
  if (f.is_tree())
    return f.weight() >= 2; // trees of weight >= 2 project to zero
  if (f.size() != 2)
    return false;
  RootedTree a = f.trees()[0], b = f.trees()[1];
  if (a == leaf && b.weight() >= 2)
    return true; // leaf times a larger tree projects to zero
  // l2 times a tree T has the same image as two leaves times T.
  return (a == l2 && b.weight() >= 2) || (b == l2 && a.weight() >= 2);
}

namespace {

PrimitiveBasis scan(int n, bool use_pruning) {
  if (n < 1)
    throw std::invalid_argument("primitive basis weight must be >= 1");
  PrimitiveBasis basis;
  basis.weight = n;
  EchelonBasis echelon;
  for (const auto &f : enumerate_forests(n)) {
    if (use_pruning && pruned(f))
      continue;
    AlgebraElement p = pi1(f);
    if (echelon.insert(weight_vector(p, n), static_cast<int>(basis.elements.size()))) {
      basis.elements.push_back(std::move(p));
      basis.sources.push_back(f);
    }
  }
  return basis;
}

} // namespace

const PrimitiveBasis &primitive_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PrimitiveBasis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return *it->second;
  }
  auto built = std::make_unique<PrimitiveBasis>(scan(n, true));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(built)).first->second;
}

PrimitiveBasis primitive_basis_unpruned(int n) { return scan(n, false); }

// ---------------------------------------------------------------------------
// Dimension arithmetic

Integer theta(int n, const std::vector<Integer> &r) {
  if (static_cast<int>(r.size()) < n)
    throw std::invalid_argument("theta: need r_1..r_n");
  Integer out = 0;
  for (const auto &b : partition_multiplicities(n)) {
    Integer term = multinomial(b);
    for (int j = 1; j <= n; ++j)
      if (b[j - 1])
        term *= ipow(r[j - 1], b[j - 1]);
    if (total(b) % 2 == 1)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace {

// All phi(n, k) for k = 0..n in one pass over the partitions of n.
std::vector<Integer> phi_row(int n, const std::vector<Integer> &h) {
  std::vector<Integer> row(n + 1, 0);
  if (n == 0) {
    row[0] = 1;
    return row;
  }
  for (const auto &b : partition_multiplicities(n)) {
    Integer term = multinomial(b);
    for (int j = 1; j <= n; ++j)
      if (b[j - 1])
        term *= ipow(h[j - 1], b[j - 1]);
    row[total(b)] += term;
  }
  return row;
}

} // namespace

Integer phi(int n, int k, const std::vector<Integer> &h) {
  if (static_cast<int>(h.size()) < n)
    throw std::invalid_argument("phi: need h_1..h_n");
  if (k < 0 || k > n)
    return (n == 0 && k == 0) ? Integer(1) : Integer(0);
  return phi_row(n, h)[k];
}

Integer composition_count(int n, const std::vector<Integer> &h) {
  if (static_cast<int>(h.size()) < n)
    throw std::invalid_argument("composition_count: need h_1..h_n");
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int a = 1; a <= m; ++a)
      c[m] += h[a - 1] * c[m - a];
  return c[n];
}

namespace {

using Series = std::vector<Integer>;

Series series_multiply(const Series &a, const Series &b, int order) {
  Series out(order + 1, 0);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

} // namespace

DimensionTable dimension_table(int max_weight) {
  if (max_weight < 1)
    throw std::invalid_argument("dimension_table needs N >= 1");
  int N = max_weight;
  DimensionTable table;
  table.max_weight = N;
  table.r.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    table.r[n] = count_forests(n);
  std::vector<Integer> h1;
  std::vector<Integer> r_tail(table.r.begin() + 1, table.r.end());
  for (int n = 1; n <= N; ++n)
    h1.push_back(theta(n, r_tail));
  table.h.assign(N + 1, std::vector<Integer>(N + 1, 0));
  table.h[0][0] = 1;
  for (int n = 1; n <= N; ++n) {
    auto row = phi_row(n, h1);
    for (int k = 0; k <= n; ++k)
      table.h[n][k] = row[k];
  }

  // H_k(X) = H_1(X)^k and (1 - H_1(X)) R(X) = 1, up to X^N.
  bool ok = true;
  Series h1_series(N + 1, 0);
  for (int n = 1; n <= N; ++n)
    h1_series[n] = table.h[n][1];
  Series power(N + 1, 0);
  power[0] = 1;
  for (int k = 1; k <= N && ok; ++k) {
    power = series_multiply(power, h1_series, N);
    for (int n = 0; n <= N; ++n)
      if (power[n] != table.h[n][k])
        ok = false;
  }
  Series one_minus(N + 1, 0);
  one_minus[0] = 1;
  for (int n = 1; n <= N; ++n)
    one_minus[n] = -h1_series[n];
  Series product = series_multiply(one_minus, table.r, N);
  for (int n = 0; n <= N; ++n)
    if (product[n] != (n == 0 ? 1 : 0))
      ok = false;
  table.series_identities_hold = ok;
  return table;
}

// ---------------------------------------------------------------------------
// Polynomials

Polynomial Polynomial::constant(const Rational &c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int i) {
  if (i < 1)
    throw std::invalid_argument("variables are numbered from 1");
  Monomial m(i, 0);
  m[i - 1] = 1;
  Polynomial p;
  p.add_term(std::move(m), 1);
  return p;
}

void Polynomial::add_term(Monomial m, const Rational &c) {
  while (!m.empty() && m.back() == 0)
    m.pop_back();
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial out;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      Polynomial::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i)
        m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i)
        m[i] += mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  return out;
}

Polynomial operator*(const Rational &c, const Polynomial &a) {
  return Polynomial::constant(c) * a;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial> &values) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    Polynomial term = constant(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0)
        continue;
      if (i >= values.size())
        throw std::invalid_argument("substitute: missing value for a variable");
      for (int e = 0; e < m[i]; ++e)
        term = term * values[i];
    }
    out += term;
  }
  return out;
}

namespace {

Polynomial partition_polynomial(int n, bool alternating) {
  Polynomial out;
  for (const auto &b : partition_multiplicities(n)) {
    Rational coef(multinomial(b));
    if (alternating && total(b) % 2 == 0)
      coef = -coef;
    out.add_term(b, coef);
  }
  return out;
}

} // namespace

Polynomial theta_polynomial(int n) { return partition_polynomial(n, true); }
Polynomial phi_polynomial(int n) { return partition_polynomial(n, false); }

bool theta_phi_identity(int k) {
  std::vector<Polynomial> phis;
  for (int j = 1; j <= k; ++j)
    phis.push_back(phi_polynomial(j));
  return theta_polynomial(k).substitute(phis) == Polynomial::variable(k);
}

} // namespace treehopf
