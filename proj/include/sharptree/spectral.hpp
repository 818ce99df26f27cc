#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sharptree/matrix.hpp"
#include "sharptree/tree.hpp"

namespace sharptree {

inline constexpr double kDefaultSpectralTolerance = 1e-9;

struct SpectralReport {
  std::vector<double> eigenvalues_a;      // ascending
  std::vector<double> eigenvalues_sharp;  // ascending
  std::optional<double> tau;              // smallest positive eigenvalue of A
  std::optional<double> rho_sharp;        // spectral radius of A^#
  bool tau_simple = false;
  double tau_gap = 0.0;                   // distance from tau to the nearest other eigenvalue
  std::vector<double> eigenvector_tau;    // unit norm, first nonzero entry positive
  std::optional<double> min_abs_entry;
  double reciprocity_residual = 0.0;
  double tolerance = kDefaultSpectralTolerance;
};

/// Nearest-double copy of an exact matrix.
Eigen::MatrixXd to_floating(const ExactMatrix& m);

/// Ascending eigenvalues of a symmetric matrix.
std::vector<double> symmetric_eigenvalues(const ExactMatrix& m);

/// Eigenvalues with |lambda| below 1e-10 times the largest |entry| count as zero.
double zero_cutoff(const ExactMatrix& m);

/// Throws ToleranceTooTight when the reciprocity residual or |tau rho - 1|
/// exceeds tol, and NoPositiveEigenvalue if a nonzero A has none.
SpectralReport spectral_report(const WeightedTree& t, const ExactMatrix& sharp,
                               double tol = kDefaultSpectralTolerance);
SpectralReport spectral_report(const WeightedTree& t, double tol = kDefaultSpectralTolerance);

/// max |lambda#_k - 1/lambda_k| over the nonzero spectra paired in sorted
/// order; infinity if the nonzero counts differ.
double reciprocity_residual(const ExactMatrix& a, const ExactMatrix& sharp);
/// Residual for a tree against its exact group inverse.
double reciprocity_check(const WeightedTree& t);

/// The off-diagonal nonzero pattern is a connected graph.
bool irreducibility_check(const ExactMatrix& m);

}  // namespace sharptree
