#ifndef FRACDQ_DENSELA_HPP
#define FRACDQ_DENSELA_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fracdq {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) noexcept {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<double> row(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }

  /// Max absolute row sum.
  double norm_inf() const noexcept;
  /// Max absolute column sum.
  double norm_1() const noexcept;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// y = A x. Throws DimensionMismatch.
std::vector<double> matvec(const DenseMatrix& A, std::span<const double> x);

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);

double norm_inf(std::span<const double> v) noexcept;

/**
 * PA = LU with partial pivoting, stored in one n x n array (unit lower
 * triangle implicit) in working precision Real. The singular flag is set
 * when a pivot is exactly zero (as LAPACK getrf reports it) or the input is
 * not finite; factorization still completes so the caller can decide.
 * Near-singularity is reported through condition_estimate instead.
 */
template <typename Real>
class BasicLUFactors {
 public:
  std::size_t size() const noexcept { return n_; }
  bool singular() const noexcept { return singular_; }

  /// Combined storage: strictly lower part is L, upper part is U.
  Real lu(std::size_t i, std::size_t j) const noexcept { return lu_[i * n_ + j]; }
  /// Row i of PA is row perm()[i] of A.
  std::span<const std::size_t> perm() const noexcept { return perm_; }

  /// Factors rounded to double.
  DenseMatrix lower() const;
  DenseMatrix upper() const;

 private:
  template <typename R>
  friend BasicLUFactors<R> lu_factor_in(std::span<const R> entries, std::size_t n);

  std::size_t n_ = 0;
  std::vector<Real> lu_;
  std::vector<std::size_t> perm_;
  bool singular_ = false;
};

using LUFactors = BasicLUFactors<double>;

/// Working precision of the extended factorization: binary128 where the
/// compiler provides it, long double otherwise.
#if defined(__SIZEOF_FLOAT128__) && !defined(FRACDQ_NO_FLOAT128)
using ExtendedReal = __float128;
#else
using ExtendedReal = long double;
#endif

/// Factorization for systems whose condition number approaches or exceeds
/// 1 / DBL_EPSILON; inputs and results are still double.
using ExtendedLUFactors = BasicLUFactors<ExtendedReal>;

/// Factors an n x n row-major array already held in working precision.
/// Throws DimensionMismatch if entries.size() != n * n.
template <typename Real>
BasicLUFactors<Real> lu_factor_in(std::span<const Real> entries, std::size_t n);

/// Throws DimensionMismatch if A is not square.
template <typename Real>
BasicLUFactors<Real> lu_factor_in(const DenseMatrix& A);

inline LUFactors lu_factor(const DenseMatrix& A) { return lu_factor_in<double>(A); }

inline ExtendedLUFactors lu_factor_extended(const DenseMatrix& A) {
  return lu_factor_in<ExtendedReal>(A);
}

/// Solves A x = rhs. Throws SingularMatrix if F is flagged, DimensionMismatch on size.
template <typename Real>
std::vector<double> lu_solve(const BasicLUFactors<Real>& F, std::span<const double> rhs);

/// Solves A^T x = rhs.
template <typename Real>
std::vector<double> lu_solve_transposed(const BasicLUFactors<Real>& F,
                                        std::span<const double> rhs);

/// Hager/Higham estimate of the 1-norm condition number. +inf when F is singular.
template <typename Real>
double condition_estimate(const DenseMatrix& A, const BasicLUFactors<Real>& F);

/// Number of lu_factor calls made on the calling thread so far.
std::size_t lu_factorization_count() noexcept;

}  // namespace fracdq

#endif  // FRACDQ_DENSELA_HPP
