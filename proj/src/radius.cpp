#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "opineq/norms.hpp"

namespace opineq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kGridSize = 64;
constexpr int kBrackets = 3;
constexpr int kEnvelopeBudget = 400;
constexpr int kMaxEvaluations = 20000;
constexpr int kLevelSetRounds = 40;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  return t;
}

// f(theta) = lambda_max(H0 + e^{i theta} C + e^{-i theta} C*). Every such f is an
// upper envelope of sinusoids c + rho cos(theta - psi) with rho <= amplitude.
class TrigObjective {
 public:
  TrigObjective(ComplexMatrix h0, ComplexMatrix c, double amplitude)
      : h0_(std::move(h0)), c_(std::move(c)), amplitude_(amplitude) {}

  double operator()(double theta) {
    ++evaluations_;
    if (evaluations_ > kMaxEvaluations) raise(ErrorKind::NonConvergence, "radius scan exceeded evaluation cap");
    const Complex e = std::polar(1.0, theta);
    const Eigen::Index n = c_.rows();
    if (n == 1) return (h0_(0, 0) + 2.0 * (e * c_(0, 0)).real()).real();
    if (n == 2) {
      const double a = (h0_(0, 0) + 2.0 * (e * c_(0, 0)).real()).real();
      const double d = (h0_(1, 1) + 2.0 * (e * c_(1, 1)).real()).real();
      const Complex b = h0_(0, 1) + e * c_(0, 1) + std::conj(e * c_(1, 0));
      const double h = 0.5 * (a - d);
      return 0.5 * (a + d) + std::sqrt(h * h + std::norm(b));
    }
    ComplexMatrix k = h0_ + e * c_;
    k += (e * c_).adjoint().eval();
    solver_.compute(k, Eigen::EigenvaluesOnly);
    if (solver_.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "radius scan: eigensolver failed");
    return solver_.eigenvalues()(n - 1);
  }

  // upper bound on f over a gap of width delta, above the larger endpoint value
  double envelope(double delta) const {
    if (delta >= std::numbers::pi) return std::numeric_limits<double>::infinity();
    const double s = std::sin(0.25 * delta);
    return 2.0 * amplitude_ * s * s;
  }

  // Angles where gamma is an eigenvalue of H(theta). Uses the Cayley substitution
  // z = (1+s)/(1-s) rotated so that theta = pivot corresponds to s = infinity.
  std::vector<double> level_crossings(double gamma, double pivot) {
    ++evaluations_;
    const Eigen::Index n = c_.rows();
    const double phi = pivot - std::numbers::pi;
    const ComplexMatrix cr = std::polar(1.0, phi) * c_;
    const ComplexMatrix sym = cr + cr.adjoint();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix m2 = sym - h0_ + gamma * id;
    const ComplexMatrix m1 = 2.0 * (cr - cr.adjoint());
    const ComplexMatrix m0 = sym + h0_ - gamma * id;
    Eigen::LLT<ComplexMatrix> llt(m2);
    if (llt.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "radius level set: leading term not definite");
    auto congruence = [&](const ComplexMatrix& m) {
      ComplexMatrix t = llt.matrixL().solve(m);
      return ComplexMatrix(llt.matrixL().solve(t.adjoint()).adjoint());
    };
    const ComplexMatrix k1 = congruence(m1);
    const ComplexMatrix k0 = congruence(m0);
    ComplexMatrix comp = ComplexMatrix::Zero(2 * n, 2 * n);
    comp.topRightCorner(n, n) = id;
    comp.bottomLeftCorner(n, n) = -k0;
    comp.bottomRightCorner(n, n) = -k1;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(comp, false);
    if (es.info() != Eigen::Success) raise(ErrorKind::NonConvergence, "radius level set: eigensolver failed");
    std::vector<double> out;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const Complex s = es.eigenvalues()(j);
      if (std::abs(s.real()) <= 1e-7 * std::max(1.0, std::abs(s))) {
        out.push_back(wrap_angle(2.0 * std::atan(s.imag()) + phi));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int evaluations() const { return evaluations_; }

 private:
  ComplexMatrix h0_;
  ComplexMatrix c_;
  double amplitude_;
  int evaluations_ = 0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver_;
};

struct Gap {
  double lo, hi, vlo, vhi, ub;
  bool operator<(const Gap& o) const { return ub < o.ub; }
};

RadiusEstimate maximize(TrigObjective& f, double amplitude, double tol) {
  RadiusEstimate out;
  if (amplitude == 0.0) {
    out.value = f(0.0);
    out.evaluations = f.evaluations();
    return out;
  }
  std::map<double, double> samples;
  double best = -std::numeric_limits<double>::infinity();
  auto sample = [&](double theta) {
    theta = wrap_angle(theta);
    auto it = samples.find(theta);
    if (it != samples.end()) return it->second;
    const double v = f(theta);
    samples.emplace(theta, v);
    best = std::max(best, v);
    return v;
  };

  std::vector<double> grid(kGridSize);
  const double h = kTwoPi / kGridSize;
  for (int k = 0; k < kGridSize; ++k) grid[k] = sample(k * h);

  std::vector<int> peaks;
  for (int k = 0; k < kGridSize; ++k) {
    const double prev = grid[(k + kGridSize - 1) % kGridSize];
    const double next = grid[(k + 1) % kGridSize];
    if (grid[k] >= prev && grid[k] >= next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int a, int b) { return grid[a] > grid[b]; });
  if (peaks.size() > static_cast<std::size_t>(kBrackets)) peaks.resize(kBrackets);

  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k : peaks) {
    double a = (k - 1) * h, b = (k + 1) * h;
    double c = b - golden * (b - a), d = a + golden * (b - a);
    double fc = sample(c), fd = sample(d);
    for (int it = 0; it < 100 && f.envelope(b - a) > 0.25 * tol; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - golden * (b - a);
        fc = sample(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + golden * (b - a);
        fd = sample(d);
      }
    }
  }

  std::priority_queue<Gap> gaps;
  auto push_gap = [&](double lo, double hi, double vlo, double vhi) {
    gaps.push({lo, hi, vlo, vhi, std::max(vlo, vhi) + f.envelope(hi - lo)});
  };
  for (auto it = samples.begin(); it != samples.end(); ++it) {
    auto nx = std::next(it);
    if (nx == samples.end()) {
      push_gap(it->first, samples.begin()->first + kTwoPi, it->second, samples.begin()->second);
    } else {
      push_gap(it->first, nx->first, it->second, nx->second);
    }
  }
  for (int extra = 0; extra < kEnvelopeBudget; ++extra) {
    const Gap g = gaps.top();
    if (g.ub - best <= tol) {
      out.value = best;
      out.certified_error = std::max(0.0, g.ub - best);
      out.evaluations = f.evaluations();
      return out;
    }
    gaps.pop();
    const double mid = 0.5 * (g.lo + g.hi);
    const double vm = sample(mid);
    push_gap(g.lo, mid, g.vlo, vm);
    push_gap(mid, g.hi, vm, g.vhi);
  }

  // Plateau-like objective: certify through level sets instead.
  double pivot = samples.begin()->first;
  double lowest = samples.begin()->second;
  for (const auto& [t, v] : samples) {
    if (v < lowest) {
      lowest = v;
      pivot = t;
    }
  }
  for (int round = 0; round < kLevelSetRounds; ++round) {
    const double gamma = best + 0.5 * tol;
    const std::vector<double> cross = f.level_crossings(gamma, pivot);
    if (cross.empty()) break;
    const double before = best;
    for (std::size_t j = 0; j < cross.size(); ++j) {
      const double t0 = cross[j];
      const double t1 = j + 1 < cross.size() ? cross[j + 1] : cross[0] + kTwoPi;
      sample(t0);
      sample(0.5 * (t0 + t1));
    }
    if (best < gamma && best == before) break;  // only tangential or spurious crossings left
  }
  out.value = best;
  out.certified_error = 0.5 * tol;
  out.evaluations = f.evaluations();
  return out;
}

}  // namespace

double default_radius_tol(const ComplexMatrix& a) { return 1e-8 * std::max(1.0, operator_norm(a)); }

RadiusEstimate numerical_radius(const ComplexMatrix& a) { return numerical_radius(a, default_radius_tol(a)); }

RadiusEstimate numerical_radius(const ComplexMatrix& a, double tol) {
  if (a.rows() != a.cols()) raise(ErrorKind::DimensionMismatch, "numerical_radius: matrix is not square");
  if (!a.allFinite()) raise(ErrorKind::NonFinite, "numerical_radius: non-finite entries");
  if (!(tol > 0.0)) raise(ErrorKind::BadConfig, "numerical_radius: tolerance must be positive");
  const Eigen::Index n = a.rows();
  if (n == 0) return {};
  if (n == 1) return {std::abs(a(0, 0)), 0.0, 0};
  TrigObjective f(ComplexMatrix::Zero(n, n), 0.5 * a, operator_norm(a));
  return maximize(f, operator_norm(a), tol);
}

RadiusEstimate max_unimodular_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double scale = std::max({1.0, operator_norm(a), operator_norm(b)});
  return max_unimodular_norm(a, b, 1e-8 * scale);
}

RadiusEstimate max_unimodular_norm(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(ErrorKind::DimensionMismatch, "max_unimodular_norm: shapes differ");
  if (!a.allFinite() || !b.allFinite()) raise(ErrorKind::NonFinite, "max_unimodular_norm: non-finite entries");
  if (!(tol > 0.0)) raise(ErrorKind::BadConfig, "max_unimodular_norm: tolerance must be positive");
  const Eigen::Index m = a.rows(), n = a.cols();
  // ||A + e^{i theta} B|| is lambda_max of the Hermitian dilation [[0, A + zB], [(A + zB)*, 0]]
  ComplexMatrix h0 = ComplexMatrix::Zero(m + n, m + n);
  h0.topRightCorner(m, n) = a;
  h0.bottomLeftCorner(n, m) = a.adjoint();
  ComplexMatrix c = ComplexMatrix::Zero(m + n, m + n);
  c.topRightCorner(m, n) = b;
  const double amp = operator_norm(b);
  TrigObjective f(std::move(h0), std::move(c), amp);
  return maximize(f, amp, tol);
}

}  // namespace opineq
