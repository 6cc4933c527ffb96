#include "sphlab/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace sphlab {

namespace {
constexpr double kMomentTol = 1e-12;
}

EntropyEvaluator::EntropyEvaluator(const GasParams& g, int quad_order)
    : gas_(g), order_(quad_order) {
  if (quad_order < 8) throw std::invalid_argument("EntropyEvaluator: quad_order must be >= 8");
  const double ell = gas_.ell;
  sym_ = gauss_jacobi(order_, ell, ell);
  right_ = gauss_jacobi(order_, ell, 0.0);
  left_ = gauss_jacobi(order_, 0.0, ell);

  for (int i = 0; i < sym_.size(); ++i) {
    a0_ += sym_.weights[i];
    a2_ += sym_.weights[i] * sym_.nodes[i] * sym_.nodes[i];
  }
  const double a0_exact = beta_function(0.5, ell + 1.0);
  const double a2_exact = beta_function(1.5, ell + 1.0);
  if (std::abs(a0_ - a0_exact) > kMomentTol * a0_exact ||
      std::abs(a2_ - a2_exact) > kMomentTol * a2_exact)
    throw std::runtime_error("EntropyEvaluator: quadrature moments fail the Beta check");

  i1_ = right_piece([](double s) { return s; }, 0.0);
  i3_ = right_piece([](double s) { return s * s * s; }, 0.0);

  eta_m_bar0_ = eta_sharp_derivatives(gas_.rho_bar, 0.0).eta_m;
  q_sharp_bar0_ = q_sharp(gas_.rho_bar, 0.0);
}

double EntropyEvaluator::kernel_chi(double rho, double u, double s) const {
  if (rho < 0.0) throw std::domain_error("kernel_chi: negative density");
  const double d = s - u;
  const double base = std::pow(rho, 2.0 * gas_.theta) - d * d;
  if (base <= 0.0) return 0.0;
  return std::pow(base, gas_.ell);
}

double EntropyEvaluator::full(const Poly& f) const {
  double acc = 0.0;
  for (int i = 0; i < sym_.size(); ++i) acc += sym_.weights[i] * f(sym_.nodes[i]);
  return acc;
}

double EntropyEvaluator::right_piece(const Poly& f, double s0) const {
  const double h = 0.5 * (1.0 - s0);
  if (h <= 0.0) return 0.0;
  const double ell = gas_.ell;
  double acc = 0.0;
  for (int i = 0; i < right_.size(); ++i) {
    const double s = s0 + (right_.nodes[i] + 1.0) * h;
    acc += right_.weights[i] * f(s) * std::pow(1.0 + s, ell);
  }
  return acc * std::pow(h, ell + 1.0);
}

double EntropyEvaluator::left_piece(const Poly& f, double s0) const {
  const double h = 0.5 * (s0 + 1.0);
  if (h <= 0.0) return 0.0;
  const double ell = gas_.ell;
  double acc = 0.0;
  for (int i = 0; i < left_.size(); ++i) {
    const double s = -1.0 + (left_.nodes[i] + 1.0) * h;
    acc += left_.weights[i] * f(s) * std::pow(1.0 - s, ell);
  }
  return acc * std::pow(h, ell + 1.0);
}

double EntropyEvaluator::signed_full(const Poly& f, double s0) const {
  if (s0 <= -1.0) return full(f);
  if (s0 >= 1.0) return -full(f);
  return right_piece(f, s0) - left_piece(f, s0);
}

EntropyPairValue EntropyEvaluator::generate_pair(const std::function<double(double)>& psi,
                                                 double rho, double u) const {
  if (rho < 0.0) throw std::domain_error("generate_pair: negative density");
  if (rho == 0.0) return {};
  const double rt = std::pow(rho, gas_.theta);
  const double th = gas_.theta;
  double eta = 0.0, q = 0.0;
  for (int i = 0; i < sym_.size(); ++i) {
    const double s = sym_.nodes[i];
    const double val = psi(u + rt * s);
    eta += sym_.weights[i] * val;
    q += sym_.weights[i] * (u + th * rt * s) * val;
  }
  return {rho * eta, rho * q};
}

double EntropyEvaluator::eta_sharp(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("eta_sharp: negative density");
  if (rho == 0.0) return 0.0;
  const double u = m / rho;
  const double rt = std::pow(rho, gas_.theta);
  const double s0 = -u / rt;
  return rho * signed_full([&](double s) {
    const double y = u + rt * s;
    return 0.5 * y * y;
  }, s0);
}

double EntropyEvaluator::q_sharp(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("q_sharp: negative density");
  if (rho == 0.0) return 0.0;
  const double u = m / rho;
  const double rt = std::pow(rho, gas_.theta);
  const double th = gas_.theta;
  const double s0 = -u / rt;
  return rho * signed_full([&](double s) {
    const double y = u + rt * s;
    return 0.5 * (u + th * rt * s) * y * y;
  }, s0);
}

EntropyDerivatives EntropyEvaluator::eta_sharp_derivatives(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("eta_sharp_derivatives: negative density");
  if (rho == 0.0) return {};  // weak-entropy limit
  const double u = m / rho;
  const double rt = std::pow(rho, gas_.theta);
  const double th = gas_.theta;
  const double s0 = -u / rt;
  EntropyDerivatives d;
  d.eta_rho = signed_full([&](double s) {
    return (-0.5 * u + (th + 0.5) * rt * s) * (u + rt * s);
  }, s0);
  d.eta_m = signed_full([&](double s) { return u + rt * s; }, s0);
  return d;
}

EntropyPairValue EntropyEvaluator::relative_pair(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("relative_pair: negative density");
  const double rb = gas_.rho_bar;
  EntropyPairValue out;
  out.eta = eta_sharp(rho, m) - eta_m_bar0_ * m;  // eta#(rho_bar, 0) = 0
  const double kinetic_flux = rho > 0.0 ? m * m / rho : 0.0;
  out.q = q_sharp(rho, m) - q_sharp_bar0_ -
          eta_m_bar0_ * (kinetic_flux + pressure(rho, gas_) - pressure(rb, gas_));
  return out;
}

FluxInequalityResult EntropyEvaluator::check_flux_inequality(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("check_flux_inequality: negative density");
  if (rho == 0.0) return {};
  const double u = m / rho;
  const double th = gas_.theta;
  const double rt = std::pow(rho, th);
  if (std::abs(u) >= rt) return {0.0, 0.0};  // kernel sees a single sign
  const double sb = std::abs(u) / rt;
  const double r2t = rt * rt;
  const double lhs = th * std::pow(rho, 1.0 + th) *
                     right_piece([&](double s) { return (u * u - r2t * s * s) * s; }, sb);
  return {lhs, 0.0};
}

double EntropyEvaluator::flux_combination_via_derivatives(double rho, double m) const {
  const EntropyDerivatives d = eta_sharp_derivatives(rho, m);
  const double kinetic = rho > 0.0 ? m * m / rho : 0.0;
  return m * d.eta_rho + kinetic * d.eta_m - q_sharp(rho, m);
}

double EntropyEvaluator::flux_combination_integral(double rho, double m) const {
  if (rho < 0.0) throw std::domain_error("flux_combination_integral: negative density");
  if (rho == 0.0) return 0.0;
  const double u = m / rho;
  const double th = gas_.theta;
  const double rt = std::pow(rho, th);
  const double s0 = -u / rt;
  return 0.5 * th * std::pow(rho, 1.0 + th) *
         signed_full([&](double s) { return (u - rt * s) * s * (u + rt * s); }, s0);
}

IdentityResiduals EntropyEvaluator::check_identities(double rho) const {
  if (rho < 0.0) throw std::domain_error("check_identities: negative density");
  const GasParams& g = gas_;
  const double rb = g.rho_bar;
  const double th = g.theta;
  const double rbt = std::pow(rb, th);
  const double p_rho = pressure(rho, g);
  const double p_rb = pressure(rb, g);
  const double dp_rb = g.gamma * g.kappa * std::pow(rb, g.gamma - 1.0);
  const double pow_rho = std::pow(rho, 1.0 + 3.0 * th);
  const double pow_rb = std::pow(rb, 1.0 + 3.0 * th);

  IdentityResiduals res;
  res.beta_moment = std::abs(i3_ - i1_ / (2.0 + g.ell));

  const double lhs1 = eta_m_bar0_ * (p_rho - p_rb) - q_sharp(rho, 0.0) + q_sharp_bar0_;
  const double rhs1 =
      2.0 * rbt * i1_ * (p_rho - p_rb - dp_rb * (rho - rb)) -
      4.0 * th * th / (3.0 * g.gamma - 1.0) * i1_ *
          (pow_rho - pow_rb - (1.0 + 3.0 * th) * std::pow(rb, 3.0 * th) * (rho - rb));
  res.taylor_split = std::abs(lhs1 - rhs1);

  const double lhs2 = eta_m_bar0_ * (p_rho - p_rb) + q_sharp_bar0_;
  const double rhs2 = i1_ * (2.0 * rbt * p_rho -
                             4.0 * std::pow(th, 3.0) / (g.gamma * (3.0 * g.gamma - 1.0)) *
                                 std::pow(rb, g.gamma + th));
  res.pressure_form = std::abs(lhs2 - rhs2);
  return res;
}

}  // namespace sphlab
