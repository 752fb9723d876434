#include "magnocorr/presets.hpp"

#include <stdexcept>
#include <string>

namespace magnocorr {

namespace {

constexpr int kDefaultPoints = 201;

PhysicalParams figure_base(double eta) {
  PhysicalParams p;  // baseline rates, J = 2 kappa_1, T = 15 mK
  set_eta(p, eta);
  return p;
}

Axis axis(std::string name, double lo, double hi, Unit unit, int points) {
  return Axis{std::move(name), lo, hi, points, unit};
}

void at_optimum(PhysicalParams& p) {
  p.Delta_1 = p.Delta_2 = -0.91 * p.omega_b;
  p.Delta_m = 0.89 * p.omega_b;
}

}  // namespace

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names{
      "fig2a", "fig2b", "fig2c", "fig2d", "fig3",  "fig4a", "fig4b", "fig4c",
      "fig5a", "fig5b", "fig6",  "fig6d", "fig6e", "fig7a", "fig7b"};
  return names;
}

SweepSpec figure_preset(std::string_view name, int points) {
  const int n = points > 0 ? points : kDefaultPoints;
  SweepSpec spec;
  spec.name = std::string(name);
  spec.delta2_rule = Delta2Rule::Equal;
  PhysicalParams& p = spec.base;
  p = figure_base(-0.5);
  const std::vector<std::string> entanglement4{"margin", "E_a1b", "E_a2b", "E_a1m", "E_a2m"};

  if (name == "fig2a") {
    p.Delta_m = 0.9 * p.omega_b;
    spec.axes = {axis("Delta_1", -2.0, 0.0, Unit::OmegaB, n), axis("eta", -1.0, 1.0, Unit::Dimensionless, n)};
    spec.quantities = {"margin", "E_a2m"};
  } else if (name == "fig2b") {
    p.Delta_1 = p.Delta_2 = -0.91 * p.omega_b;
    spec.axes = {axis("Delta_m", 0.0, 2.0, Unit::OmegaB, n), axis("eta", -1.0, 1.0, Unit::Dimensionless, n)};
    spec.quantities = {"margin", "E_a2m"};
  } else if (name == "fig2c") {
    at_optimum(p);
    spec.axes = {axis("temperature_T", 0.0, 0.4, Unit::Kelvin, n),
                 axis("eta", -1.0, 1.0, Unit::Dimensionless, n)};
    spec.quantities = {"margin", "E_a2m"};
  } else if (name == "fig2d") {
    at_optimum(p);
    spec.axes = {axis("temperature_T", 0.0, 0.4, Unit::Kelvin, n)};
    spec.quantities = {"margin", "E_a1m", "E_a2m"};
  } else if (name == "fig3") {
    spec.axes = {axis("Delta_1", -2.0, 0.0, Unit::OmegaB, n), axis("Delta_m", 0.0, 2.0, Unit::OmegaB, n)};
    spec.quantities = {"margin", "st_a2_to_m", "st_m_to_a2"};
  } else if (name == "fig4a") {
    at_optimum(p);
    spec.axes = {axis("J", 0.0, 4.0, Unit::Kappa1, points > 0 ? points : 401)};
    spec.quantities = entanglement4;
  } else if (name == "fig4b") {
    at_optimum(p);
    spec.axes = {axis("g_ma", 0.0, 5.0, Unit::Kappa1, n)};
    spec.quantities = entanglement4;
  } else if (name == "fig4c") {
    at_optimum(p);
    spec.axes = {axis("G_mb", 0.0, 5.0, Unit::Kappa1, n)};
    spec.quantities = entanglement4;
  } else if (name == "fig5a") {
    at_optimum(p);
    spec.axes = {axis("J", 0.0, 4.0, Unit::Kappa1, n)};
    spec.quantities = {"margin", "steering"};
  } else if (name == "fig5b") {
    p.Delta_1 = 0.06 * p.omega_b;
    p.Delta_2 = -p.Delta_1;
    p.Delta_m = 0.375 * p.omega_b;
    spec.delta2_rule = Delta2Rule::Opposite;
    spec.axes = {axis("J", 0.0, 4.0, Unit::Kappa1, n)};
    spec.quantities = {"margin", "steering"};
  } else if (name == "fig6") {
    spec.axes = {axis("Delta_1", -2.0, 0.0, Unit::OmegaB, n), axis("Delta_m", 0.0, 2.0, Unit::OmegaB, n)};
    spec.quantities = {"margin", "E_a1m", "E_a2m", "E_a1a2"};
  } else if (name == "fig6d" || name == "fig6e") {
    p.Delta_m = (name == "fig6d" ? 0.87 : 0.06) * p.omega_b;
    spec.axes = {axis("Delta_1", -2.0, 0.0, Unit::OmegaB, n)};
    spec.quantities = {"margin", "E_a1m", "E_a2m", "E_a1a2"};
  } else if (name == "fig7a" || name == "fig7b") {
    p.Delta_1 = p.Delta_2 = (name == "fig7a" ? -0.96 : -0.13) * p.omega_b;
    spec.axes = {axis("Delta_m", 0.0, 2.0, Unit::OmegaB, n)};
    spec.quantities = {"margin", "st_a2_to_m", "st_m_to_a2", "st_a1_to_a2", "st_a2_to_a1"};
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  return spec;
}

}  // namespace magnocorr
