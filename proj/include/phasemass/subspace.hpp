#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "phasemass/errors.hpp"
#include "phasemass/exact.hpp"
#include "phasemass/linalg.hpp"

namespace phasemass {

// Sorted 1-based coordinate indices naming one coordinate subspace.
class IndexSet {
 public:
  IndexSet() = default;

  explicit IndexSet(std::vector<int> indices) : idx_(std::move(indices)) {
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (idx_[i] < 1) throw DomainError("IndexSet: indices are 1-based");
      if (i > 0 && idx_[i] <= idx_[i - 1])
        throw DomainError("IndexSet: indices must be strictly increasing");
    }
  }

  IndexSet(std::initializer_list<int> indices)
      : IndexSet(std::vector<int>(indices)) {}

  std::size_t size() const { return idx_.size(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  int max_index() const { return idx_.empty() ? 0 : idx_.back(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) {
    return std::lexicographical_compare_three_way(a.idx_.begin(), a.idx_.end(),
                                                  b.idx_.begin(), b.idx_.end());
  }

  std::string joined(char sep = '-') const {
    std::string out;
    for (std::size_t i = 0; i < idx_.size(); ++i) {
      if (i) out.push_back(sep);
      out += std::to_string(idx_[i]);
    }
    return out;
  }

 private:
  std::vector<int> idx_;
};

// Orthonormal frame spanning an n-dimensional subspace of R^N, stored as n
// row vectors of length N.  Construction goes through build_frame,
// coordinate, or from_orthonormal_rows; rows are orthonormal by invariant.
class Frame {
 public:
  static Frame coordinate(std::size_t ambient, const IndexSet& axes) {
    if (axes.size() == 0) throw DomainError("Frame::coordinate: empty axis set");
    if (static_cast<std::size_t>(axes.max_index()) > ambient)
      throw DomainError("Frame::coordinate: axis index exceeds ambient dimension");
    std::vector<double> rows(axes.size() * ambient, 0.0);
    for (std::size_t i = 0; i < axes.size(); ++i)
      rows[i * ambient + (static_cast<std::size_t>(axes[i]) - 1)] = 1.0;
    return Frame(ambient, axes.size(), std::move(rows));
  }

  // Adopts rows that are already orthonormal; rejects anything whose Gram
  // matrix strays from the identity by more than tol.
  static Frame from_orthonormal_rows(std::size_t ambient,
                                     std::vector<double> rows,
                                     double tol = 1e-9) {
    if (ambient == 0 || rows.empty() || rows.size() % ambient != 0)
      throw DimensionMismatch("from_orthonormal_rows: bad row data size");
    const std::size_t sub = rows.size() / ambient;
    Frame f(ambient, sub, std::move(rows));
    if (f.gram_residual() > tol)
      throw DomainError("from_orthonormal_rows: rows are not orthonormal");
    return f;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t sub() const { return sub_; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * ambient_, ambient_};
  }
  double at(std::size_t i, std::size_t j) const { return data_[i * ambient_ + j]; }
  const std::vector<double>& data() const { return data_; }

  // max |G - I| over the Gram matrix of the rows.
  double gram_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < sub_; ++i)
      for (std::size_t k = i; k < sub_; ++k) {
        const double g = detail::dot(row(i), row(k));
        worst = std::max(worst, std::abs(g - (i == k ? 1.0 : 0.0)));
      }
    return worst;
  }

 private:
  Frame(std::size_t ambient, std::size_t sub, std::vector<double> data)
      : ambient_(ambient), sub_(sub), data_(std::move(data)) {}

  std::size_t ambient_;
  std::size_t sub_;
  std::vector<double> data_;

  friend Frame build_frame(const std::vector<Vector>&, double);
};

// Modified Gram-Schmidt with a second orthogonalization pass.  A residual
// whose norm drops below tol (relative to the input) marks the span as rank
// deficient.
inline Frame build_frame(const std::vector<Vector>& vectors, double tol = 1e-10) {
  if (vectors.empty()) throw DimensionMismatch("build_frame: no input vectors");
  const std::size_t ambient = vectors.front().size();
  if (ambient == 0) throw DimensionMismatch("build_frame: zero-length vectors");
  for (const auto& v : vectors) {
    if (v.size() != ambient)
      throw DimensionMismatch("build_frame: input vectors differ in length");
    for (double c : v)
      if (!std::isfinite(c)) throw DomainError("build_frame: non-finite component");
  }

  const std::size_t n = vectors.size();
  std::vector<double> rows;
  rows.reserve(n * ambient);
  std::vector<double> r(ambient);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(vectors[i].begin(), vectors[i].end(), r.begin());
    const double input_norm = detail::norm(r);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < i; ++k) {
        const std::span<const double> q{rows.data() + k * ambient, ambient};
        const double c = detail::dot(r, q);
        for (std::size_t j = 0; j < ambient; ++j) r[j] -= c * q[j];
      }
    }
    const double rn = detail::norm(r);
    if (rn <= tol * std::max(1.0, input_norm))
      throw RankDeficient("build_frame: vectors do not span the requested dimension");
    for (double c : r) rows.push_back(c / rn);
  }
  return Frame(ambient, n, std::move(rows));
}

// Scalar product of two n-dimensional subspaces of the same R^N: the
// determinant of the Gram matrix of cross dot products.  Its sign depends on
// the orientation of the chosen frames; its square does not.
inline double subspace_dot(const Frame& a, const Frame& b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch("subspace_dot: ambient dimensions differ");
  if (a.sub() != b.sub())
    throw DimensionMismatch("subspace_dot: subspace dimensions differ");
  const std::size_t n = a.sub();
  std::vector<double> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      gram[i * n + k] = detail::dot(a.row(i), b.row(k));
  return detail::determinant(gram.data(), n);
}

// Number of coordinate n-subspaces of R^N, exactly.
inline BigInt count_subspaces(int N, int n) {
  if (n < 0 || N < 0 || n > N)
    throw DomainError("count_subspaces: need 0 <= n <= N");
  return binomial(static_cast<unsigned>(N), static_cast<unsigned>(n));
}

// All index sets of size n over {1..N} in lexicographic order.  Guarded so a
// careless call cannot try to materialize an astronomic list.
inline std::vector<IndexSet> enumerate_basis(int N, int n) {
  if (n < 1 || n > N) throw DomainError("enumerate_basis: need 1 <= n <= N");
  const BigInt count = count_subspaces(N, n);
  if (count > 10'000'000) throw TooLarge("enumerate_basis: more than 1e7 index sets");

  std::vector<IndexSet> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == N - (n - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Coordinates of a subspace against every coordinate n-subspace: one signed
// weight per index set, stored in lexicographic order.
class PlueckerCoefficients {
 public:
  PlueckerCoefficients(int N, int n, std::vector<IndexSet> basis,
                       std::vector<double> weights)
      : N_(N), n_(n), basis_(std::move(basis)), w_(std::move(weights)) {
    if (basis_.size() != w_.size())
      throw DimensionMismatch("PlueckerCoefficients: basis/weight size mismatch");
  }

  static PlueckerCoefficients zeros(int N, int n) {
    auto basis = enumerate_basis(N, n);
    std::vector<double> w(basis.size(), 0.0);
    return PlueckerCoefficients(N, n, std::move(basis), std::move(w));
  }

  static PlueckerCoefficients delta(int N, int n, const IndexSet& alpha) {
    auto out = zeros(N, n);
    const auto it = std::lower_bound(out.basis_.begin(), out.basis_.end(), alpha);
    if (it == out.basis_.end() || *it != alpha)
      throw DomainError("PlueckerCoefficients::delta: index set out of range");
    out.w_[static_cast<std::size_t>(it - out.basis_.begin())] = 1.0;
    return out;
  }

  int ambient() const { return N_; }
  int sub() const { return n_; }
  std::size_t size() const { return basis_.size(); }
  const IndexSet& alpha(std::size_t i) const { return basis_[i]; }
  double w(std::size_t i) const { return w_[i]; }

  double coeff(const IndexSet& alpha) const {
    const auto it = std::lower_bound(basis_.begin(), basis_.end(), alpha);
    if (it == basis_.end() || *it != alpha)
      throw DomainError("PlueckerCoefficients::coeff: unknown index set");
    return w_[static_cast<std::size_t>(it - basis_.begin())];
  }

 private:
  int N_;
  int n_;
  std::vector<IndexSet> basis_;
  std::vector<double> w_;
};

// Expands a frame over all coordinate n-subspaces: w_alpha is the n x n minor
// of the frame's rows at the columns named by alpha.
inline PlueckerCoefficients expand(const Frame& f) {
  const int N = static_cast<int>(f.ambient());
  const int n = static_cast<int>(f.sub());
  auto basis = enumerate_basis(N, n);
  std::vector<double> w(basis.size());
  std::vector<double> minor(static_cast<std::size_t>(n) * n);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const IndexSet& alpha = basis[a];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        minor[static_cast<std::size_t>(i) * n + j] =
            f.at(static_cast<std::size_t>(i), static_cast<std::size_t>(alpha[static_cast<std::size_t>(j)]) - 1);
    w[a] = detail::determinant(minor.data(), static_cast<std::size_t>(n));
  }
  return PlueckerCoefficients(N, n, std::move(basis), std::move(w));
}

// Euclidean norm of the weight vector.  Equals 1 for the expansion of any
// orthonormal frame (the sum of squared minors telescopes to det of the
// frame's Gram matrix).
inline double coefficient_norm(const PlueckerCoefficients& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p.w(i) * p.w(i);
  return std::sqrt(s);
}

// Recombines the rows by an orthogonal n x n matrix q (row-major): a basis
// change inside the same subspace.  subspace_dot scales by det(q) = +-1.
inline Frame recombined(const Frame& f, std::span<const double> q) {
  const std::size_t n = f.sub();
  if (q.size() != n * n)
    throw DimensionMismatch("recombined: matrix size does not match frame");
  std::vector<double> rows(n * f.ambient(), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double c = q[i * n + k];
      if (c == 0.0) continue;
      const auto src = f.row(k);
      for (std::size_t j = 0; j < f.ambient(); ++j)
        rows[i * f.ambient() + j] += c * src[j];
    }
  return Frame::from_orthonormal_rows(f.ambient(), std::move(rows));
}

// Applies one global orthogonal transform r (N x N, row-major, v -> r v) to
// every row.  subspace_dot of two frames transformed together is unchanged.
inline Frame rotated(const Frame& f, std::span<const double> r) {
  const std::size_t N = f.ambient();
  if (r.size() != N * N)
    throw DimensionMismatch("rotated: matrix size does not match ambient dimension");
  std::vector<double> rows(f.sub() * N, 0.0);
  for (std::size_t i = 0; i < f.sub(); ++i) {
    const auto src = f.row(i);
    for (std::size_t a = 0; a < N; ++a) {
      double s = 0.0;
      for (std::size_t b = 0; b < N; ++b) s += r[a * N + b] * src[b];
      rows[i * N + a] = s;
    }
  }
  return Frame::from_orthonormal_rows(N, std::move(rows));
}

}  // namespace phasemass
