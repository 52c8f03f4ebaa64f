#include "fracdq/densela.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "fracdq/error.hpp"

namespace fracdq {
namespace {

thread_local std::size_t factorization_counter = 0;

// std::abs has no __float128 overload.
template <typename Real>
Real magnitude(Real v) {
  return v < Real{0} ? -v : v;
}

void require_size(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw DimensionMismatch(std::string(what) + ": expected length " +
                            std::to_string(expected) + ", got " + std::to_string(got));
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

double DenseMatrix::norm_inf() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double DenseMatrix::norm_1() const noexcept {
  std::vector<double> col(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) col[j] += std::abs((*this)(i, j));
  }
  return col.empty() ? 0.0 : *std::max_element(col.begin(), col.end());
}

std::vector<double> matvec(const DenseMatrix& A, std::span<const double> x) {
  require_size(A.cols(), x.size(), "matvec");
  std::vector<double> y(A.rows(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const auto r = A.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
  require_size(A.cols(), B.rows(), "matmul");
  DenseMatrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) += aik * B(k, j);
    }
  }
  return C;
}

double norm_inf(std::span<const double> v) noexcept {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

template <typename Real>
DenseMatrix BasicLUFactors<Real>::lower() const {
  DenseMatrix L = DenseMatrix::identity(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j) L(i, j) = static_cast<double>(lu(i, j));
  return L;
}

template <typename Real>
DenseMatrix BasicLUFactors<Real>::upper() const {
  DenseMatrix U(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) U(i, j) = static_cast<double>(lu(i, j));
  return U;
}

template <typename Real>
BasicLUFactors<Real> lu_factor_in(const DenseMatrix& A) {
  if (!A.square()) {
    throw DimensionMismatch("lu_factor: matrix is " + std::to_string(A.rows()) + "x" +
                            std::to_string(A.cols()));
  }
  std::vector<Real> entries(A.data().size());
  std::copy(A.data().begin(), A.data().end(), entries.begin());
  return lu_factor_in<Real>(std::span<const Real>(entries), A.rows());
}

template <typename Real>
BasicLUFactors<Real> lu_factor_in(std::span<const Real> entries, std::size_t n) {
  require_size(n * n, entries.size(), "lu_factor");
  ++factorization_counter;

  BasicLUFactors<Real> F;
  F.n_ = n;
  F.lu_.assign(entries.begin(), entries.end());
  F.perm_.resize(n);
  std::iota(F.perm_.begin(), F.perm_.end(), std::size_t{0});
  for (const Real& v : entries) {
    // NaN fails both comparisons; the bound catches infinities.
    if (!(magnitude(v) <= Real{std::numeric_limits<double>::max()})) F.singular_ = true;
  }

  auto at = [&](std::size_t i, std::size_t j) -> Real& { return F.lu_[i * n + j]; };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    Real best = magnitude(at(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (magnitude(at(i, k)) > best) {
        best = magnitude(at(i, k));
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      std::swap(F.perm_[k], F.perm_[p]);
    }
    if (best == Real{0}) {
      F.singular_ = true;
      continue;
    }
    const Real pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Real l = at(i, k) / pivot;
      at(i, k) = l;
      if (l == Real{0}) continue;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= l * at(k, j);
    }
  }
  return F;
}

template <typename Real>
std::vector<double> lu_solve(const BasicLUFactors<Real>& F, std::span<const double> rhs) {
  if (F.singular()) {
    throw SingularMatrix("lu_solve: matrix is singular",
                         std::numeric_limits<double>::infinity());
  }
  const std::size_t n = F.size();
  require_size(n, rhs.size(), "lu_solve");
  const auto perm = F.perm();

  std::vector<Real> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Real s = rhs[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= F.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    Real s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= F.lu(i, j) * x[j];
    x[i] = s / F.lu(i, i);
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<double>(x[i]);
  return out;
}

template <typename Real>
std::vector<double> lu_solve_transposed(const BasicLUFactors<Real>& F,
                                        std::span<const double> rhs) {
  if (F.singular()) {
    throw SingularMatrix("lu_solve_transposed: matrix is singular",
                         std::numeric_limits<double>::infinity());
  }
  const std::size_t n = F.size();
  require_size(n, rhs.size(), "lu_solve_transposed");

  // A^T = U^T L^T P, so solve U^T w = rhs, then L^T v = w, then x = P^T v.
  std::vector<Real> w(rhs.size());
  std::copy(rhs.begin(), rhs.end(), w.begin());
  for (std::size_t i = 0; i < n; ++i) {
    Real s = w[i];
    for (std::size_t j = 0; j < i; ++j) s -= F.lu(j, i) * w[j];
    w[i] = s / F.lu(i, i);
  }
  for (std::size_t i = n; i-- > 0;) {
    Real s = w[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= F.lu(j, i) * w[j];
    w[i] = s;
  }
  std::vector<double> x(n);
  const auto perm = F.perm();
  for (std::size_t i = 0; i < n; ++i) x[perm[i]] = static_cast<double>(w[i]);
  return x;
}

template <typename Real>
double condition_estimate(const DenseMatrix& A, const BasicLUFactors<Real>& F) {
  if (F.singular()) return std::numeric_limits<double>::infinity();
  const std::size_t n = F.size();
  require_size(n, A.rows(), "condition_estimate");
  if (n == 0) return 0.0;

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double estimate = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    const auto y = lu_solve(F, x);
    double ynorm = 0.0;
    for (double v : y) ynorm += std::abs(v);
    estimate = std::max(estimate, ynorm);

    std::vector<double> xi(n);
    for (std::size_t i = 0; i < n; ++i) xi[i] = y[i] >= 0.0 ? 1.0 : -1.0;
    const auto z = lu_solve_transposed(F, xi);

    std::size_t jmax = 0;
    double zdotx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      zdotx += z[i] * x[i];
      if (std::abs(z[i]) > std::abs(z[jmax])) jmax = i;
    }
    if (std::abs(z[jmax]) <= zdotx) break;
    std::fill(x.begin(), x.end(), 0.0);
    x[jmax] = 1.0;
  }
  return A.norm_1() * estimate;
}

#define FRACDQ_INSTANTIATE_LU(Real)                                                   \
  template class BasicLUFactors<Real>;                                                \
  template BasicLUFactors<Real> lu_factor_in<Real>(const DenseMatrix&);              \
  template BasicLUFactors<Real> lu_factor_in<Real>(std::span<const Real>, std::size_t); \
  template std::vector<double> lu_solve<Real>(const BasicLUFactors<Real>&,           \
                                              std::span<const double>);              \
  template std::vector<double> lu_solve_transposed<Real>(const BasicLUFactors<Real>&, \
                                                         std::span<const double>);   \
  template double condition_estimate<Real>(const DenseMatrix&, const BasicLUFactors<Real>&);

FRACDQ_INSTANTIATE_LU(double)
FRACDQ_INSTANTIATE_LU(ExtendedReal)

#undef FRACDQ_INSTANTIATE_LU

std::size_t lu_factorization_count() noexcept { return factorization_counter; }

}  // namespace fracdq
