#include "oracles.hpp"

#include <stdexcept>
#include <vector>

#include <boost/numeric/odeint.hpp>

namespace magnocorr::testing {

Eigen::MatrixXd integrate_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
  namespace ode = boost::numeric::odeint;
  const Eigen::Index n = a.rows();
  using State = std::vector<double>;

  auto rhs = [&](const State& x, State& dxdt, double) {
    const Eigen::Map<const Eigen::MatrixXd> v(x.data(), n, n);
    Eigen::Map<Eigen::MatrixXd> out(dxdt.data(), n, n);
    out = a * v + v * a.transpose() + d;
  };

  State x(static_cast<std::size_t>(n * n), 0.0);
  Eigen::Map<Eigen::MatrixXd>(x.data(), n, n) = 0.5 * Eigen::MatrixXd::Identity(n, n);

  // Slowest relaxation sets the time scale; integrate in chunks of it.
  const double slowest = -a.eigenvalues().real().maxCoeff();
  if (!(slowest > 0.0)) throw std::invalid_argument("integrate_lyapunov: A not stable");
  const double chunk = 5.0 / slowest;
  auto stepper = ode::make_controlled(1e-14, 1e-14, ode::runge_kutta_dopri5<State>());

  State dxdt(x.size());
  double t = 0.0;
  for (int round = 0; round < 400; ++round) {
    ode::integrate_adaptive(stepper, rhs, x, t, t + chunk, 0.1 * chunk);
    t += chunk;
    rhs(x, dxdt, t);
    const Eigen::Map<const Eigen::MatrixXd> v(x.data(), n, n);
    const Eigen::Map<const Eigen::MatrixXd> dv(dxdt.data(), n, n);
    if (dv.cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, v.cwiseAbs().maxCoeff())) {
      return Eigen::MatrixXd(v);
    }
  }
  throw std::runtime_error("integrate_lyapunov: no convergence");
}

}  // namespace magnocorr::testing
