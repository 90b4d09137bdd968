#include "ctm/stats.h"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>

#include "ctm/measures.h"

namespace ctm {

namespace {

// Correlations this close to +-1 make the partial-correlation denominator vanish.
constexpr double kPerfectCorrelation = 1.0 - 1e-12;

double residual_sum(std::span<const RuntimePoint> points, double alpha, double lambda) {
  double rss = 0.0;
  for (const RuntimePoint& p : points) {
    const double r = p.probability - alpha * std::exp(-lambda * static_cast<double>(p.steps));
    rss += r * r;
  }
  return rss;
}

std::pair<double, double> log_linear_guess(std::span<const RuntimePoint> points) {
  double n = 0, sk = 0, sy = 0, skk = 0, sky = 0;
  for (const RuntimePoint& p : points) {
    if (p.probability < DBL_MIN) continue;
    const double k = static_cast<double>(p.steps);
    const double y = std::log(p.probability);
    n += 1;
    sk += k;
    sy += y;
    skk += k * k;
    sky += k * y;
  }
  const double denom = n * skk - sk * sk;
  if (n < 2 || denom <= 0) throw FitError("log-linear start needs two runtimes with positive mass");
  const double slope = (n * sky - sk * sy) / denom;
  const double intercept = (sy - slope * sk) / n;
  return {std::exp(intercept), -slope};
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw StatsError("pearson: inputs differ in length");
  if (x.size() < 3) throw StatsError("pearson: need at least 3 points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) throw StatsError("pearson: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double partial_correlation(std::span<const double> x, std::span<const double> y, std::span<const double> z) {
  const double rxy = pearson(x, y);
  const double rxz = pearson(x, z);
  const double ryz = pearson(y, z);
  if (std::abs(rxz) >= kPerfectCorrelation || std::abs(ryz) >= kPerfectCorrelation) {
    throw StatsError("partial correlation: control variable perfectly correlated with an input");
  }
  return (rxy - rxz * ryz) / std::sqrt((1 - rxz * rxz) * (1 - ryz * ryz));
}

std::uint64_t RuntimeHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [steps, count] : counts) sum += count;
  return sum;
}

std::vector<RuntimePoint> normalize(const RuntimeHistogram& histogram) {
  const double total = static_cast<double>(histogram.total());
  if (total == 0) throw FitError("empty runtime histogram");
  std::vector<RuntimePoint> points;
  points.reserve(histogram.counts.size());
  for (const auto& [steps, count] : histogram.counts) {
    points.push_back({steps, static_cast<double>(count) / total});
  }
  return points;
}

FitResult fit_exponential(std::span<const RuntimePoint> points, const FitOptions& options) {
  const auto positive = std::ranges::count_if(points, [](const RuntimePoint& p) { return p.probability > 0; });
  if (positive < 2) throw FitError("exponential fit is under-determined: fewer than two runtimes with mass");

  auto [alpha, lambda] = options.start ? *options.start : log_linear_guess(points);
  double rss = residual_sum(points, alpha, lambda);

  for (int iteration = 1; iteration <= options.max_iterations; ++iteration) {
    // Normal equations J^T J delta = J^T r for the model alpha * exp(-lambda k).
    double jaa = 0, jal = 0, jll = 0, ga = 0, gl = 0;
    for (const RuntimePoint& p : points) {
      const double k = static_cast<double>(p.steps);
      const double e = std::exp(-lambda * k);
      const double da = e;
      const double dl = -alpha * k * e;
      const double r = p.probability - alpha * e;
      jaa += da * da;
      jal += da * dl;
      jll += dl * dl;
      ga += da * r;
      gl += dl * r;
    }
    const double det = jaa * jll - jal * jal;
    if (!(std::abs(det) > 0) || !std::isfinite(det)) throw FitError("exponential fit: singular normal equations");
    const double delta_alpha = (jll * ga - jal * gl) / det;
    const double delta_lambda = (jaa * gl - jal * ga) / det;

    double step = 1.0;
    bool accepted = false;
    double next_alpha = alpha, next_lambda = lambda, next_rss = rss;
    for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
      next_alpha = alpha + step * delta_alpha;
      next_lambda = lambda + step * delta_lambda;
      if (next_lambda <= 0) continue;
      next_rss = residual_sum(points, next_alpha, next_lambda);
      if (next_rss <= rss) {
        accepted = true;
        break;
      }
    }

    const double change = std::max(std::abs(step * delta_alpha) / std::abs(alpha),
                                   std::abs(step * delta_lambda) / std::abs(lambda));
    if (!accepted) {
      // No step lowers the residual: at the numerical minimum if the full step is negligible.
      const double full = std::max(std::abs(delta_alpha / alpha), std::abs(delta_lambda / lambda));
      if (full < 1e-8) return {alpha, lambda, rss, iteration};
      throw FitError("exponential fit: no descent step found");
    }
    alpha = next_alpha;
    lambda = next_lambda;
    rss = next_rss;
    if (change < options.tolerance) return {alpha, lambda, rss, iteration};
  }
  throw FitError("exponential fit did not converge within " + std::to_string(options.max_iterations) +
                 " iterations");
}

FitResult fit_exponential(const RuntimeHistogram& histogram, const FitOptions& options) {
  const std::vector<RuntimePoint> points = normalize(histogram);
  return fit_exponential(points, options);
}

double tail_mass_log10(double lambda, double cutoff) {
  if (!(lambda > 0)) throw StatsError("tail mass: lambda must be positive");
  return -cutoff * lambda / std::numbers::ln10;
}

CorrelationReport correlation_report(const Distribution& distribution) {
  std::vector<double> km, n, length, ld;
  for (const DistributionEntry& e : distribution.entries()) {
    km.push_back(e.km);
    n.push_back(e.min_n);
    length.push_back(static_cast<double>(e.length));
    ld.push_back(static_cast<double>(e.ld));
  }
  CorrelationReport report;
  report.points = km.size();
  report.r_km_n = pearson(km, n);
  report.r_km_n_given_l = partial_correlation(km, n, length);
  report.r_km_ld = pearson(km, ld);
  report.r_km_ld_given_l = partial_correlation(km, ld, length);
  return report;
}

}  // namespace ctm
