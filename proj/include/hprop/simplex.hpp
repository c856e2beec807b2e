#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace hprop {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x;
  Scalar objective{0};
  /// Phase-one optimum: sum of artificial variables. Positive iff infeasible.
  Scalar infeasibility{0};
  std::size_t pivots = 0;
};

/// Dense two-phase tableau simplex for
///
///     minimize c^T x  subject to  A x = b,  x >= 0.
///
/// Bland's rule (lowest-index entering column, lowest-index leaving basic
/// variable among ratio ties) rules out cycling, so with an exact Scalar the
/// method terminates with an exact answer. Redundant equality rows are fine.
template <typename Scalar>
class TableauSimplex {
 public:
  using MatrixS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorS = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  TableauSimplex(const MatrixS& a, const VectorS& b, const VectorS& c)
      : rows_(a.rows()), vars_(a.cols()), cost_(c) {
    if (b.size() != rows_ || c.size() != vars_) {
      throw std::invalid_argument("TableauSimplex: inconsistent dimensions");
    }
    rhs_ = vars_ + rows_;
    tableau_ = MatrixS::Zero(rows_ + 1, rhs_ + 1);
    basis_.resize(static_cast<std::size_t>(rows_));
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const bool flip = b(r) < Scalar(0);
      if (flip) {
        tableau_.row(r).head(vars_) = -a.row(r);
        tableau_(r, rhs_) = -b(r);
      } else {
        tableau_.row(r).head(vars_) = a.row(r);
        tableau_(r, rhs_) = b(r);
      }
      tableau_(r, vars_ + r) = Scalar(1);
      basis_[static_cast<std::size_t>(r)] = vars_ + r;
    }
  }

  LpSolution<Scalar> solve() {
    LpSolution<Scalar> out;

    // Phase one: minimize the sum of artificials.
    auto obj = tableau_.row(rows_);
    obj.setZero();
    for (Eigen::Index r = 0; r < rows_; ++r) {
      obj.head(vars_) -= tableau_.row(r).head(vars_);
      obj(rhs_) -= tableau_(r, rhs_);
    }
    iterate(rhs_, out.pivots);
    out.infeasibility = -tableau_(rows_, rhs_);
    if (out.infeasibility > Scalar(0)) {
      out.status = LpStatus::Infeasible;
      return out;
    }

    // Artificials still basic sit at level zero; swap them for any structural
    // column with a nonzero entry. Rows with none are redundant and stay inert.
    for (Eigen::Index r = 0; r < rows_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < vars_) continue;
      for (Eigen::Index j = 0; j < vars_; ++j) {
        if (tableau_(r, j) != Scalar(0)) {
          pivot(r, j);
          ++out.pivots;
          break;
        }
      }
    }

    // Phase two on structural columns only.
    obj.setZero();
    obj.head(vars_) = cost_.transpose();
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const Eigen::Index bv = basis_[static_cast<std::size_t>(r)];
      if (bv >= vars_) continue;
      const Scalar cb = cost_(bv);
      if (cb == Scalar(0)) continue;
      obj -= cb * tableau_.row(r);
    }
    if (!iterate(vars_, out.pivots)) {
      out.status = LpStatus::Unbounded;
      return out;
    }

    out.status = LpStatus::Optimal;
    out.x = VectorS::Zero(vars_);
    for (Eigen::Index r = 0; r < rows_; ++r) {
      const Eigen::Index bv = basis_[static_cast<std::size_t>(r)];
      if (bv < vars_) out.x(bv) = tableau_(r, rhs_);
    }
    out.objective = -tableau_(rows_, rhs_);
    return out;
  }

 private:
  // Runs pivots with entering candidates restricted to columns [0, limit).
  // Returns false when the objective is unbounded below.
  bool iterate(Eigen::Index limit, std::size_t& pivots) {
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (tableau_(rows_, j) < Scalar(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Scalar best{0};
      for (Eigen::Index r = 0; r < rows_; ++r) {
        const Scalar& coef = tableau_(r, enter);
        if (!(coef > Scalar(0))) continue;
        Scalar ratio = tableau_(r, rhs_) / coef;
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = tableau_(r, c);
    tableau_.row(r) /= p;
    for (Eigen::Index i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const Scalar f = tableau_(i, c);
      if (f == Scalar(0)) continue;
      tableau_.row(i) -= f * tableau_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  Eigen::Index rows_;
  Eigen::Index vars_;
  Eigen::Index rhs_ = 0;
  VectorS cost_;
  MatrixS tableau_;
  std::vector<Eigen::Index> basis_;
};

template <typename Scalar>
LpSolution<Scalar> solve_standard_lp(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& b,
                                     const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c) {
  return TableauSimplex<Scalar>(a, b, c).solve();
}

}  // namespace hprop
