#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treehopf/trees.hpp"

namespace treehopf {

using Rational = mpq_class;

std::string to_string(const Rational &c);
/// Integer or "p/q", optionally signed.
Rational parse_rational(std::string_view text);
bool looks_like_rational(std::string_view token);

/// Element of H_R: a finite rational combination of forests.
class AlgebraElement {
public:
  using Terms = std::map<Forest, Rational, ForestLess>;

  AlgebraElement() = default;
  AlgebraElement(const Forest &f);
  AlgebraElement(RootedTree t) : AlgebraElement(Forest(t)) {}
  /// Scalar multiple of the unit.
  static AlgebraElement scalar(const Rational &c);
  static AlgebraElement parse(std::string_view text);

  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Forest &f) const;
  void add_term(const Forest &f, const Rational &c);

  std::string str() const;

  AlgebraElement &operator+=(const AlgebraElement &o);
  AlgebraElement &operator-=(const AlgebraElement &o);
  AlgebraElement &operator*=(const Rational &c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
  friend AlgebraElement operator*(const Rational &c, AlgebraElement a) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement &a, const AlgebraElement &b);
  friend bool operator==(const AlgebraElement &a, const AlgebraElement &b) {
    return a.terms_ == b.terms_;
  }

private:
  Terms terms_;
};

AlgebraElement power(const AlgebraElement &x, int k);

/// Highest weight among the terms; -1 for zero.
int max_weight(const AlgebraElement &x);
std::map<int, AlgebraElement> weight_split(const AlgebraElement &x);
/// The common weight of all terms, or nothing (also for zero).
std::optional<int> is_homogeneous(const AlgebraElement &x);
/// Keeps the single-tree terms.
AlgebraElement pi_c(const AlgebraElement &x);

/// Linear extension of a map given on forests.
AlgebraElement apply_linear(const AlgebraElement &x,
                            const std::function<AlgebraElement(const Forest &)> &f);

struct TensorKeyLess {
  bool operator()(const std::vector<Forest> &a, const std::vector<Forest> &b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ForestLess{});
  }
};

/// Element of the k-fold tensor power of H_R.
class TensorElement {
public:
  using Key = std::vector<Forest>;
  using Terms = std::map<Key, Rational, TensorKeyLess>;

  explicit TensorElement(int rank);
  /// Pure tensor of elements.
  static TensorElement tensor(const std::vector<AlgebraElement> &factors);
  static TensorElement parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  const Terms &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Key &k) const;
  void add_term(const Key &k, const Rational &c);

  std::string str() const;

  TensorElement &operator+=(const TensorElement &o);
  TensorElement &operator-=(const TensorElement &o);
  TensorElement &operator*=(const Rational &c);
  friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
  friend TensorElement operator*(const Rational &c, TensorElement a) { return a *= c; }
  /// Componentwise product; ranks must match.
  friend TensorElement operator*(const TensorElement &a, const TensorElement &b);
  friend bool operator==(const TensorElement &a, const TensorElement &b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

private:
  int rank_;
  Terms terms_;
};

/// Applies a linear map (given on forests) to one factor, keeping the rank.
TensorElement apply_to_slot(const TensorElement &x,
                            const std::function<AlgebraElement(const Forest &)> &f, int slot);
/// Replaces one factor by a tensor of rank r, giving rank + r - 1.
TensorElement expand_slot(const TensorElement &x,
                          const std::function<TensorElement(const Forest &)> &f, int slot);
/// Multiplies all factors together.
AlgebraElement multiply_out(const TensorElement &x);

} // namespace treehopf
