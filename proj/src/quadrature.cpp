#include "qpart/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

namespace qpart {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; symmetric).
// Even indices of xk are the embedded 7-point Gauss nodes.
constexpr double xk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  std::size_t seq;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;  // max-heap on error
    return x.seq > y.seq;                              // deterministic tie-break
  }
};

Panel gk15(const std::function<double(double)>& f, double a, double b, std::size_t seq,
           std::size_t& evals) {
  double c = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fc = f(c);
  double resk = wk[7] * fc;
  double resg = wg[3] * fc;
  double resabs = wk[7] * std::fabs(fc);
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    double x = h * xk[j];
    double f1 = f(c - x);
    double f2 = f(c + x);
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += wk[j] * (f1 + f2);
    resabs += wk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  evals += 15;
  double mean = 0.5 * resk;
  double resasc = wk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += wk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[14 - j] - mean));
  double value = resk * h;
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);
  double err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(err, 50.0 * eps * resabs);
  return Panel{a, b, value, err, seq};
}

std::vector<double> seeded_edges(double a, double b, const std::vector<double>& breakpoints) {
  std::vector<double> edges;
  edges.push_back(a);
  std::vector<double> bp(breakpoints);
  std::sort(bp.begin(), bp.end());
  double span = b - a;
  for (double x : bp) {
    if (x <= a || x >= b) continue;
    if (x - edges.back() < 1e-14 * span) continue;
    edges.push_back(x);
  }
  if (b - edges.back() < 1e-14 * span && edges.size() > 1) edges.pop_back();
  edges.push_back(b);
  return edges;
}

[[noreturn]] void fail_accuracy(const char* rule, double value, double error) {
  std::ostringstream os;
  os << rule << " quadrature did not reach the requested tolerance; achieved estimate " << value
     << " with error ~ " << error;
  throw AccuracyError(os.str());
}

}  // namespace

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        const std::vector<double>& breakpoints, const QuadOptions& opt) {
  if (!(b > a)) throw ConfigError("integrate_gk: requires b > a");
  std::vector<double> edges = seeded_edges(a, b, breakpoints);
  std::size_t evals = 0;
  std::size_t seq = 0;
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap;
  double total = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gk15(f, edges[i], edges[i + 1], seq++, evals);
    total += p.value;
    err += p.error;
    heap.push(p);
  }
  double min_width = 1e-15 * (std::fabs(a) + std::fabs(b) + 1.0);
  std::size_t stuck = 0;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::fabs(total))) {
    if (heap.size() >= opt.max_intervals) fail_accuracy("Gauss-Kronrod", total, err);
    Panel worst = heap.top();
    if (worst.b - worst.a < min_width) {
      // Cannot subdivide further; likely a genuine singularity.
      if (++stuck > heap.size()) fail_accuracy("Gauss-Kronrod", total, err);
      heap.pop();
      Panel kept = worst;
      kept.error = 0.0;  // accept as-is, keep its value
      heap.push(kept);
      continue;
    }
    stuck = 0;
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid, seq++, evals);
    Panel right = gk15(f, mid, worst.b, seq++, evals);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    if (err < 0.0) err = 0.0;
    heap.push(left);
    heap.push(right);
  }
  return QuadResult{total, err, evals};
}

QuadResult integrate_simpson(const std::function<double(double)>& f, double a, double b,
                             const std::vector<double>& breakpoints, const QuadOptions& opt) {
  if (!(b > a)) throw ConfigError("integrate_simpson: requires b > a");
  std::vector<double> edges = seeded_edges(a, b, breakpoints);
  std::size_t nseg = edges.size() - 1;
  double seg_tol = opt.abs_tol / static_cast<double>(nseg);
  std::size_t evals = 0;
  double total = 0.0;
  double err = 0.0;

  struct Frame {
    double a, fa, b, fb, m, fm, whole, tol;
    std::size_t depth;
  };

  auto simpson = [](double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
  };

  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double sa = edges[i], sb = edges[i + 1];
    double fa = f(sa), fb = f(sb);
    double m = 0.5 * (sa + sb);
    double fm = f(m);
    evals += 3;
    std::vector<Frame> stack;
    stack.push_back(Frame{sa, fa, sb, fb, m, fm, simpson(fa, fm, fb, sb - sa), seg_tol, 0});
    while (!stack.empty()) {
      Frame fr = stack.back();
      stack.pop_back();
      double lm = 0.5 * (fr.a + fr.m);
      double rm = 0.5 * (fr.m + fr.b);
      double flm = f(lm), frm = f(rm);
      evals += 2;
      double h = fr.b - fr.a;
      double left = simpson(fr.fa, flm, fr.fm, 0.5 * h);
      double right = simpson(fr.fm, frm, fr.fb, 0.5 * h);
      double delta = left + right - fr.whole;
      if (std::fabs(delta) <= 15.0 * fr.tol || h < 1e-15 * (std::fabs(fr.a) + std::fabs(fr.b) + 1.0)) {
        total += left + right + delta / 15.0;
        err += std::fabs(delta) / 15.0;
        continue;
      }
      if (fr.depth >= opt.max_depth)
        fail_accuracy("adaptive Simpson", total + left + right, err + std::fabs(delta));
      stack.push_back(Frame{fr.m, fr.fm, fr.b, fr.fb, rm, frm, right, 0.5 * fr.tol, fr.depth + 1});
      stack.push_back(Frame{fr.a, fr.fa, fr.m, fr.fm, lm, flm, left, 0.5 * fr.tol, fr.depth + 1});
    }
  }
  return QuadResult{total, err, evals};
}

double power_tail(double f_at_L, double L, double p) {
  if (!(p > 1.0)) throw ConfigError("power_tail: requires decay exponent p > 1");
  if (!(L > 0.0)) throw ConfigError("power_tail: requires L > 0");
  return f_at_L * L / (p - 1.0);
}

}  // namespace qpart
