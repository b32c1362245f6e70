#include "newton_sobolev/sublevel.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace newton_sobolev {

GrowthFit fit_growth(std::span<const std::pair<double, double>> rungs) {
  if (rungs.size() < 4) throw DegenerateFit("growth fit needs at least 4 rungs");
  const auto n = static_cast<Eigen::Index>(rungs.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    auto [delta, m] = rungs[static_cast<std::size_t>(i)];
    if (!(delta > 0 && delta < 1)) throw DegenerateFit("rung delta outside (0, 1)");
    if (!(m > 0) || !std::isfinite(m)) throw DegenerateFit("rung with nonpositive measure");
    const double ld = std::log(delta);
    design(i, 0) = ld;
    design(i, 1) = std::log(std::abs(ld));
    design(i, 2) = 1.0;
    rhs(i) = std::log(m);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < 3) throw DegenerateFit("singular design matrix");
  Eigen::Vector3d beta = qr.solve(rhs);

  GrowthFit fit;
  fit.eta_hat = beta(0);
  fit.k_hat = beta(1);
  fit.fit_residual = std::sqrt((design * beta - rhs).squaredNorm() / static_cast<double>(n));
  if (std::abs(fit.k_hat - 0.5) >= 0.1) fit.k_rounded = fit.k_hat < 0.5 ? 0 : 1;
  return fit;
}

}  // namespace newton_sobolev
