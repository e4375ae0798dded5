/**
 * @file oracle.cpp
 * @brief Adaptive Gauss-Kronrod quadrature and Monte-Carlo moments.
 */
#include "hyperint/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace hyperint::oracle {

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1] (QUADPACK values).
// Even-indexed abscissae carry the embedded 7-point Gauss rule.
constexpr int kNodes = 8;  // non-negative abscissae; others mirror
constexpr double kAbscissa[kNodes] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kKronrodW[kNodes] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  int depth = 0;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    return x.err < y.err;
  }
};

/// One Gauss-Kronrod 7/15 evaluation; err is the raw |K15 - G7| difference,
/// a deliberately conservative bound for the Kronrod value's true error.
Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kron = 0.0;
  double gauss = 0.0;
  bool finite = true;
  for (int i = 0; i < kNodes; ++i) {
    const double dx = h * kAbscissa[i];
    double fsum = f(c + dx);
    if (i != kNodes - 1) fsum += f(c - dx);
    if (!std::isfinite(fsum)) {
      finite = false;
      break;
    }
    kron += kKronrodW[i] * fsum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.depth = depth;
  if (!finite) {
    // A non-finite sample forces this panel to be refined toward the
    // offending point; it contributes nothing until it becomes finite.
    p.value = 0.0;
    p.err = HUGE_VAL;
    return p;
  }
  p.value = kron * h;
  p.err = std::fabs((kron - gauss) * h);
  return p;
}

constexpr int kMaxDepth = 60;
constexpr std::size_t kMaxPanels = 30000;

QuadratureResult adapt(const std::function<double(double)>& f, double a,
                       double b, double abs_tol, double rel_tol) {
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
  Panel root = evaluate_panel(f, a, b, 0);
  double total_value = root.value;
  double total_err = root.err;
  double retired_err = 0.0;  // panels at max depth: they cannot improve
  std::size_t panels = 1;
  active.push(root);

  auto tolerance = [&] {
    return std::max(abs_tol, rel_tol * std::fabs(total_value));
  };

  while (!active.empty() && total_err + retired_err > tolerance() &&
         panels < kMaxPanels) {
    Panel worst = active.top();
    active.pop();
    total_err -= worst.err;
    if (worst.depth >= kMaxDepth) {
      retired_err += std::isfinite(worst.err) ? worst.err : 1.0;
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1);
    Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1);
    total_value += left.value + right.value - worst.value;
    total_err += left.err + right.err;
    active.push(left);
    active.push(right);
    ++panels;
  }

  QuadratureResult r;
  r.value = total_value;
  r.abs_err_est = total_err + retired_err;
  r.subdivisions = panels;
  r.converged = r.abs_err_est <= tolerance();
  return r;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("integrate requires finite a < b");
  return adapt(f, a, b, abs_tol, rel_tol);
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     double abs_tol, double rel_tol) {
  // x = t/(1-t), dx = dt/(1-t)^2 maps (0, inf) onto (0, 1).
  auto g = [&f](double t) {
    const double om = 1.0 - t;
    // Deeply subdivided panels can round a node onto t = 1 (x = inf); an
    // integrable decaying f contributes nothing there.
    if (om <= 0.0) return 0.0;
    const double x = t / om;
    if (!std::isfinite(x)) return 0.0;
    return f(x) / (om * om);
  };
  return adapt(g, 0.0, 1.0, abs_tol, rel_tol);
}

MomentEstimate mc_moment(const std::function<double()>& sampler, unsigned n,
                         std::size_t count) {
  if (count < 1000)
    throw DomainError("mc_moment requires count >= 1000");
  // Welford running mean/variance of x^n: numerically stable in one pass.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 1; i <= count; ++i) {
    double x = sampler();
    double p = 1.0;
    for (unsigned k = 0; k < n; ++k) p *= x;
    const double delta = p - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (p - mean);
  }
  MomentEstimate e;
  e.estimate = mean;
  const double nd = static_cast<double>(count);
  e.std_err = std::sqrt(std::max(0.0, m2 / (nd - 1.0)) / nd);
  return e;
}

}  // namespace hyperint::oracle
