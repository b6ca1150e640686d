#include "core/spd.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace wscec {

namespace {

constexpr double kSymTol = 1e-12;
constexpr double kSpdTol = 1e-12;
constexpr double kPairFloor = 1e-290;  // lam_i+lam_j below this is an underflow

void check_symmetric(const Eigen::MatrixXd& S, const char* who) {
  if (S.rows() != S.cols()) throw_domain(std::string(who) + ": matrix not square");
  double scale = std::max(1.0, S.cwiseAbs().maxCoeff());
  double asym = (S - S.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymTol * scale)
    throw_domain(std::string(who) + ": matrix not symmetric (asymmetry " + std::to_string(asym) + ")");
}

void check_pair(double li, double lj, int i, int j) {
  if (!(li + lj > kPairFloor))
    throw_domain("eigenvalue pair (" + std::to_string(i) + "," + std::to_string(j) +
                 ") sums to " + std::to_string(li + lj) + ": underflow");
}

}  // namespace

SymEigen spd_eigen(const Eigen::MatrixXd& S) {
  check_symmetric(S, "spd_eigen");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (S + S.transpose()));
  if (es.info() != Eigen::Success) throw_domain("spd_eigen: eigendecomposition failed");
  SymEigen out{es.eigenvalues(), es.eigenvectors()};  // ascending
  double lmax = out.lam(out.lam.size() - 1);
  if (!(lmax > 0.0)) throw_domain("spd_eigen: matrix is not positive definite (lambda_max <= 0)");
  double floor = kSpdTol * lmax;
  for (Eigen::Index i = 0; i < out.lam.size(); ++i) {
    if (out.lam(i) < -floor)
      throw_domain("spd_eigen: negative eigenvalue " + std::to_string(out.lam(i)) +
                   " beyond tolerance");
    if (out.lam(i) < floor) out.lam(i) = floor;  // clamp tiny/rounding-negative values
  }
  return out;
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& S) {
  SymEigen e = spd_eigen(S);
  return e.vec * e.lam.cwiseSqrt().asDiagonal() * e.vec.transpose();
}

double wasserstein_distance(const GaussianPoint& g1, const GaussianPoint& g2,
                            Config::DistForm form) {
  if (g1.mu.size() != g2.mu.size() || g1.sigma.rows() != g2.sigma.rows())
    throw_param("wasserstein_distance: dimension mismatch");
  double mean_term = (g1.mu - g2.mu).norm();
  // tr(S1+S2-2(S1 S2)^1/2) computed via the symmetrized root (same trace, stable).
  Eigen::MatrixXd r1 = spd_sqrt(g1.sigma);
  Eigen::MatrixXd cross = spd_sqrt(r1 * g2.sigma * r1);
  double arg = (g1.sigma + g2.sigma).trace() - 2.0 * cross.trace();
  double bures = std::sqrt(std::max(0.0, arg));
  if (form == Config::DistForm::L2) return std::sqrt(mean_term * mean_term + bures * bures);
  return mean_term + bures;  // literal sum as printed
}

Eigen::MatrixXd sylvester_solve(const Eigen::MatrixXd& S, const Eigen::MatrixXd& Y) {
  if (Y.rows() != S.rows() || Y.cols() != S.cols())
    throw_param("sylvester_solve: dimension mismatch");
  SymEigen e = spd_eigen(S);
  const Eigen::Index n = S.rows();
  Eigen::MatrixXd yp = e.vec.transpose() * Y * e.vec;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      check_pair(e.lam(i), e.lam(j), static_cast<int>(i), static_cast<int>(j));
      yp(i, j) /= e.lam(i) + e.lam(j);
    }
  return e.vec * yp * e.vec.transpose();
}

double metric(const Eigen::MatrixXd& S, const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
  return 0.5 * (sylvester_solve(S, Y) * X).trace();
}

double curvature_tensor(const Eigen::MatrixXd& S, const Eigen::MatrixXd& X,
                        const Eigen::MatrixXd& Y) {
  Eigen::MatrixXd gx = sylvester_solve(S, X);
  Eigen::MatrixXd gy = sylvester_solve(S, Y);
  Eigen::MatrixXd comm = gx * gy - gy * gx;          // antisymmetric
  Eigen::MatrixXd inner = sylvester_solve(S, comm);  // stays antisymmetric
  return 3.0 * (gx * S * inner * S * gy).trace();
}

std::array<double, 3> scalar_curvature_terms(const Eigen::MatrixXd& S) {
  SymEigen e = spd_eigen(S);
  const Eigen::Index n = S.rows();
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      check_pair(e.lam(i), e.lam(j), static_cast<int>(i), static_cast<int>(j));
      U(i, j) = 1.0 / (e.lam(i) + e.lam(j));  // strictly upper triangular
    }
  Eigen::MatrixXd L = e.lam.asDiagonal();
  Eigen::MatrixXd W = U + U.transpose();
  return {(U * L * W).trace(), (W * L * U).trace(), (W * L * U * L * W).trace()};
}

double scalar_curvature(const Eigen::MatrixXd& S) {
  auto t = scalar_curvature_terms(S);
  return 3.0 * (t[0] + t[1] + t[2]);
}

double scalar_curvature_oracle(const Eigen::MatrixXd& S) {
  check_symmetric(S, "scalar_curvature_oracle");
  const Eigen::Index n = S.rows();
  // Canonical symmetric basis: E_ii, then (E_ij+E_ji)/sqrt(2) for i<j.
  std::vector<Eigen::MatrixXd> basis;
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
    B(i, i) = 1.0;
    basis.push_back(B);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
      B(i, j) = B(j, i) = inv_sqrt2;
      basis.push_back(B);
    }
  // Modified Gram-Schmidt under g_W at S (two passes per vector for stability).
  std::vector<Eigen::MatrixXd> ortho;
  for (auto& raw : basis) {
    Eigen::MatrixXd v = raw;
    for (int pass = 0; pass < 2; ++pass)
      for (auto& e : ortho) v -= metric(S, v, e) * e;
    double norm2 = metric(S, v, v);
    if (norm2 <= 0.0) throw_domain("scalar_curvature_oracle: metric degenerate during Gram-Schmidt");
    ortho.push_back(v / std::sqrt(norm2));
  }
  // Sum sectional numerators over unordered basis pairs. The literal ordered
  // double sum counts each (p,q)/(q,p) pair twice and lands at 2x the closed
  // form (and 2x the pinned rho(I_2)=3/2), so unordered pairs are correct.
  double rho = 0.0;
  for (size_t p = 0; p < ortho.size(); ++p)
    for (size_t q = p + 1; q < ortho.size(); ++q)
      rho += curvature_tensor(S, ortho[p], ortho[q]);
  return rho;
}

double lambda_min2(const Eigen::MatrixXd& S) {
  SymEigen e = spd_eigen(S);
  if (e.lam.size() < 2) throw_param("lambda_min2: need n >= 2");
  return e.lam(1);  // ascending order: second smallest
}

double curvature_bound(const Eigen::MatrixXd& S) {
  const double n = static_cast<double>(S.rows());
  return 3.0 * n * (n - 1.0) / lambda_min2(S);
}

Eigen::MatrixXd distance_matrix(const SpdCloud& cloud, Config::DistForm form) {
  if (cloud.empty()) throw_param("distance_matrix: empty cloud");
  const Eigen::Index n = static_cast<Eigen::Index>(cloud.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      D(i, j) = D(j, i) = wasserstein_distance(cloud[i], cloud[j], form);
  return D;
}

}  // namespace wscec
