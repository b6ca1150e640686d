#pragma once
#include <Eigen/Dense>
#include <array>
#include <vector>

#include "core/config.hpp"

namespace wscec {

// One point on SPD(d) paired with its neighborhood mean.
struct GaussianPoint {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
};

using SpdCloud = std::vector<GaussianPoint>;

// Eigendecomposition with SPD acceptance: eigenvalues ascending.
// lambda_min > -1e-12*lambda_max is clamped up to the tolerance floor;
// anything more negative is a domain error.
struct SymEigen {
  Eigen::VectorXd lam;  // ascending
  Eigen::MatrixXd vec;  // columns are eigenvectors
};
SymEigen spd_eigen(const Eigen::MatrixXd& S);

// Matrix square root: R with R*R = S to 1e-10 relative.
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& S);

// W(N1,N2) = |mu1-mu2| + sqrt(tr(S1+S2-2*(S1^1/2 S2 S1^1/2)^1/2))  [paper form]
// or the root-sum-of-squares of the two terms [l2 form].
double wasserstein_distance(const GaussianPoint& g1, const GaussianPoint& g2,
                            Config::DistForm form = Config::DistForm::Paper);

// Solve S*G + G*S = Y in the eigenbasis of S: G'_ij = Y'_ij/(lam_i+lam_j).
Eigen::MatrixXd sylvester_solve(const Eigen::MatrixXd& S, const Eigen::MatrixXd& Y);

// g_W|_S(X,Y) = tr(Gamma_S[Y] * X) / 2.
double metric(const Eigen::MatrixXd& S, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);

// R(X,Y,X,Y) = 3 tr(G[X] S G[[G[X],G[Y]]] S G[Y]) with G = Gamma_S.
double curvature_tensor(const Eigen::MatrixXd& S, const Eigen::MatrixXd& X,
                        const Eigen::MatrixXd& Y);

// Closed-form scalar curvature: rho = 3 tr(U L (U+U^T) + (U+U^T) L U + (U+U^T) L U L (U+U^T))
// with U strictly upper triangular, U_ij = 1/(lam_i+lam_j) for i<j, L = diag(lam).
double scalar_curvature(const Eigen::MatrixXd& S);

// The three trace terms of the closed form (rho = 3*(t0+t1+t2)); exposed so the
// mutation-sensitivity test can flip any single term.
std::array<double, 3> scalar_curvature_terms(const Eigen::MatrixXd& S);

// Independent check: sum of curvature_tensor over unordered pairs of a
// g_W-orthonormal tangent basis (Gram-Schmidt on {E_ii, (E_ij+E_ji)/sqrt(2)}).
double scalar_curvature_oracle(const Eigen::MatrixXd& S);

// Second-smallest eigenvalue and the bound 3n(n-1)/lambda_min2.
double lambda_min2(const Eigen::MatrixXd& S);
double curvature_bound(const Eigen::MatrixXd& S);

// Pairwise Wasserstein distances; symmetric, zero diagonal.
Eigen::MatrixXd distance_matrix(const SpdCloud& cloud,
                                Config::DistForm form = Config::DistForm::Paper);

}  // namespace wscec
