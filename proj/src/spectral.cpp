#include "sharptree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sharptree/errors.hpp"
#include "sharptree/group_inverse.hpp"

namespace sharptree {

namespace {

std::vector<double> nonzero(const std::vector<double>& values, double cutoff) {
  std::vector<double> out;
  for (double v : values) {
    if (std::abs(v) >= cutoff) out.push_back(v);
  }
  return out;
}

double residual_between(const std::vector<double>& spectrum_a, double cutoff_a,
                        const std::vector<double>& spectrum_sharp, double cutoff_sharp) {
  std::vector<double> reciprocals;
  for (double v : nonzero(spectrum_a, cutoff_a)) reciprocals.push_back(1.0 / v);
  std::vector<double> sharp = nonzero(spectrum_sharp, cutoff_sharp);
  if (reciprocals.size() != sharp.size()) return std::numeric_limits<double>::infinity();
  std::sort(reciprocals.begin(), reciprocals.end());
  std::sort(sharp.begin(), sharp.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < sharp.size(); ++k)
    worst = std::max(worst, std::abs(sharp[k] - reciprocals[k]));
  return worst;
}

}  // namespace

Eigen::MatrixXd to_floating(const ExactMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).to_double();
  }
  return out;
}

std::vector<double> symmetric_eigenvalues(const ExactMatrix& m) {
  if (m.order() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_floating(m), Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double zero_cutoff(const ExactMatrix& m) {
  double norm = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) norm = std::max(norm, std::abs(m(i, j).to_double()));
  }
  return norm == 0.0 ? std::numeric_limits<double>::min() : 1e-10 * norm;
}

SpectralReport spectral_report(const WeightedTree& t, const ExactMatrix& sharp, double tol) {
  if (!(tol > 0.0)) throw ToleranceTooTight("tolerance must be positive");
  const ExactMatrix a = adjacency_matrix(t);
  SpectralReport r;
  r.tolerance = tol;

  const auto n = static_cast<Eigen::Index>(t.order());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_floating(a));
  r.eigenvalues_a.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  r.eigenvalues_sharp = symmetric_eigenvalues(sharp);

  const double cutoff_a = zero_cutoff(a);
  const double cutoff_sharp = zero_cutoff(sharp);
  r.reciprocity_residual = residual_between(r.eigenvalues_a, cutoff_a, r.eigenvalues_sharp, cutoff_sharp);
  if (r.reciprocity_residual > tol)
    throw ToleranceTooTight("reciprocity residual " + std::to_string(r.reciprocity_residual) +
                            " exceeds " + std::to_string(tol));
  if (a.is_zero()) return r;

  Eigen::Index tau_index = -1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (r.eigenvalues_a[static_cast<std::size_t>(k)] >= cutoff_a) {
      tau_index = k;
      break;
    }
  }
  if (tau_index < 0) throw NoPositiveEigenvalue("nonzero symmetric matrix without a positive eigenvalue");
  r.tau = r.eigenvalues_a[static_cast<std::size_t>(tau_index)];

  double rho = 0.0;
  for (double v : r.eigenvalues_sharp) rho = std::max(rho, std::abs(v));
  r.rho_sharp = rho;
  if (std::abs(*r.tau * rho - 1.0) > tol)
    throw ToleranceTooTight("tau * rho(A#) deviates from 1 by more than " + std::to_string(tol));

  r.tau_gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (k != tau_index)
      r.tau_gap = std::min(r.tau_gap, std::abs(r.eigenvalues_a[static_cast<std::size_t>(k)] - *r.tau));
  }
  r.tau_simple = r.tau_gap > tol;

  Eigen::VectorXd x = solver.eigenvectors().col(tau_index).normalized();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(x(k)) > tol) {
      if (x(k) < 0) x = -x;
      break;
    }
  }
  r.eigenvector_tau.assign(x.data(), x.data() + n);
  r.min_abs_entry = x.cwiseAbs().minCoeff();
  return r;
}

SpectralReport spectral_report(const WeightedTree& t, double tol) {
  return spectral_report(t, sharp_factorization(adjacency_matrix(t)), tol);
}

double reciprocity_residual(const ExactMatrix& a, const ExactMatrix& sharp) {
  return residual_between(symmetric_eigenvalues(a), zero_cutoff(a), symmetric_eigenvalues(sharp),
                          zero_cutoff(sharp));
}

double reciprocity_check(const WeightedTree& t) {
  const ExactMatrix a = adjacency_matrix(t);
  return reciprocity_residual(a, sharp_factorization(a));
}

bool irreducibility_check(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && (!m(i, j).is_zero() || !m(j, i).is_zero())) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

}  // namespace sharptree
