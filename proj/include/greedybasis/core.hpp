#pragma once
// Coefficient-space model of a semi-normalized basis in finite dimension N.
//
// A vector f is represented by its coordinates (e_n^*(f))_{n=1..N}. Indices are
// 0-based in this API; every file and report format converts to 1-based.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace greedybasis {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Strictly increasing list of 0-based coordinate indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  }

  /// {first, ..., last-1}
  static IndexSet range(std::size_t first, std::size_t last) {
    IndexSet s;
    for (std::size_t i = first; i < last; ++i) s.idx_.push_back(i);
    return s;
  }

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  std::size_t operator[](std::size_t i) const { return idx_[i]; }
  const std::vector<std::size_t>& indices() const { return idx_; }

  bool contains(std::size_t i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }
  std::size_t max() const { return idx_.back(); }
  std::size_t min() const { return idx_.front(); }

  bool fits(std::size_t dim) const { return idx_.empty() || idx_.back() < dim; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> idx_;
};

/// A < B in the sense max A < min B. Vacuously true when either side is empty.
inline bool precedes(const IndexSet& a, const IndexSet& b) {
  return a.empty() || b.empty() || a.max() < b.min();
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  std::vector<std::size_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IndexSet(std::move(out));
}

inline bool disjoint(const IndexSet& a, const IndexSet& b) { return set_intersection(a, b).empty(); }

/// Signs in {-1, +1} attached to the elements of an IndexSet.
class SignPattern {
 public:
  SignPattern() = default;
  SignPattern(IndexSet domain, std::vector<int> signs) : domain_(std::move(domain)), signs_(std::move(signs)) {
    if (signs_.size() != domain_.size()) throw Error("sign pattern: domain and sign count differ");
    for (int s : signs_)
      if (s != 1 && s != -1) throw Error("sign pattern: signs must be -1 or +1");
  }
  static SignPattern ones(const IndexSet& domain) {
    return SignPattern(domain, std::vector<int>(domain.size(), 1));
  }

  const IndexSet& domain() const { return domain_; }
  const std::vector<int>& signs() const { return signs_; }
  int operator[](std::size_t i) const { return signs_[i]; }
  std::size_t size() const { return signs_.size(); }

  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  IndexSet domain_;
  std::vector<int> signs_;
};

/// Finite real coefficient sequence (e_n^*(f))_n of dimension N.
class CoeffVector {
 public:
  CoeffVector() = default;
  explicit CoeffVector(std::size_t dim) : v_(dim, 0.0) {}
  CoeffVector(std::initializer_list<double> v) : CoeffVector(std::vector<double>(v)) {}
  explicit CoeffVector(std::vector<double> v) : v_(std::move(v)) {
    for (double x : v_)
      if (!std::isfinite(x)) throw Error("coefficient vector entries must be finite");
  }
  explicit CoeffVector(std::span<const double> v) : CoeffVector(std::vector<double>(v.begin(), v.end())) {}

  std::size_t dim() const { return v_.size(); }
  double operator[](std::size_t i) const { return v_[i]; }
  double at(std::size_t i) const {
    if (i >= v_.size()) throw IndexOutOfRange("coordinate index out of range");
    return v_[i];
  }
  void set(std::size_t i, double x) {
    if (i >= v_.size()) throw IndexOutOfRange("coordinate index out of range");
    if (!std::isfinite(x)) throw Error("coefficient vector entries must be finite");
    v_[i] = x;
  }
  std::span<const double> values() const { return v_; }
  const std::vector<double>& data() const { return v_; }

  IndexSet support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] != 0.0) s.push_back(i);
    return IndexSet(std::move(s));
  }
  bool is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](double x) { return x == 0.0; });
  }

  CoeffVector& operator+=(const CoeffVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  CoeffVector& operator-=(const CoeffVector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  CoeffVector& operator*=(double t) {
    for (double& x : v_) x *= t;
    return *this;
  }
  friend CoeffVector operator+(CoeffVector a, const CoeffVector& b) { return a += b; }
  friend CoeffVector operator-(CoeffVector a, const CoeffVector& b) { return a -= b; }
  friend CoeffVector operator*(double t, CoeffVector a) { return a *= t; }
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;

 private:
  void check_dim(const CoeffVector& o) const {
    if (o.dim() != dim()) throw DimensionMismatch(dim(), o.dim());
  }
  std::vector<double> v_;
};

/// f . g = 0 in the usual notation.
inline bool disjoint_supports(const CoeffVector& a, const CoeffVector& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a[i] != 0.0 && b[i] != 0.0) return false;
  return true;
}

/// sup_n |e_n^*(v)|, 0 for the zero vector.
inline double coeff_sup(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::abs(x));
  return s;
}
inline double coeff_sup(const CoeffVector& v) { return coeff_sup(v.values()); }

/// inf over the support of |v_n|; +infinity for the zero vector.
inline double coeff_inf_on_support(const CoeffVector& v) {
  double s = HUGE_VAL;
  for (double x : v.values())
    if (x != 0.0) s = std::min(s, std::abs(x));
  return s;
}

/// P_A(v)
inline CoeffVector project(const CoeffVector& v, const IndexSet& a) {
  if (!a.fits(v.dim())) throw IndexOutOfRange("projection set exceeds dimension");
  std::vector<double> out(v.dim(), 0.0);
  for (std::size_t i : a) out[i] = v[i];
  return CoeffVector(std::move(out));
}

/// S_k(v) = P_{first k coordinates}(v)
inline CoeffVector partial_sum(const CoeffVector& v, std::size_t k) {
  if (k > v.dim()) throw IndexOutOfRange("partial sum order exceeds dimension");
  return project(v, IndexSet::range(0, k));
}

/// 1_{eps A} in dimension dim.
inline CoeffVector indicator(const IndexSet& a, const SignPattern& eps, std::size_t dim) {
  if (eps.domain() != a) throw Error("indicator: sign pattern domain differs from the index set");
  if (!a.fits(dim)) throw IndexOutOfRange("indicator set exceeds dimension");
  std::vector<double> out(dim, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = eps[i];
  return CoeffVector(std::move(out));
}

inline CoeffVector indicator(const IndexSet& a, std::size_t dim) { return indicator(a, SignPattern::ones(a), dim); }

/// Coordinatewise sign flip on the indices of `flip`.
inline CoeffVector flip_signs(const CoeffVector& v, const IndexSet& flip) {
  std::vector<double> out = v.data();
  for (std::size_t i : flip) out.at(i) = -out.at(i);
  return CoeffVector(std::move(out));
}

}  // namespace greedybasis
