#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ctm {

class Distribution;

class StatsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sample Pearson correlation. Requires equal lengths >= 3 and nonzero
// variance in both inputs.
double pearson(std::span<const double> x, std::span<const double> y);

// Correlation of x and y controlling for z. Throws StatsError when z is
// perfectly correlated with x or y.
double partial_correlation(std::span<const double> x, std::span<const double> y,
                           std::span<const double> z);

// Halting-machine counts keyed by runtime in steps.
struct RuntimeHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;

  void add(std::uint64_t steps, std::uint64_t count = 1) { counts[steps] += count; }
  std::uint64_t total() const;
};

struct RuntimePoint {
  std::uint64_t steps = 0;
  double probability = 0.0;
};

// Per-step empirical probabilities, normalised by the histogram's own total.
std::vector<RuntimePoint> normalize(const RuntimeHistogram& histogram);

struct FitResult {
  double alpha = 0.0;
  double lambda = 0.0;
  double rss = 0.0;
  int iterations = 0;
};

struct FitOptions {
  int max_iterations = 200;
  double tolerance = 1e-10;  // relative parameter change
  // (alpha, lambda); when absent, taken from a log-linear regression.
  std::optional<std::pair<double, double>> start;
};

// Least-squares fit of p_k = alpha * exp(-lambda * k) by damped Gauss-Newton.
// The step is halved until the residual sum of squares does not increase.
FitResult fit_exponential(std::span<const RuntimePoint> points, const FitOptions& options = {});
FitResult fit_exponential(const RuntimeHistogram& histogram, const FitOptions& options = {});

// log10 of exp(-lambda * cutoff), computed without leaving log space.
double tail_mass_log10(double lambda, double cutoff);

struct CorrelationReport {
  std::size_t points = 0;
  double r_km_n = 0.0;
  double r_km_n_given_l = 0.0;
  double r_km_ld = 0.0;
  double r_km_ld_given_l = 0.0;
};

// One point per distinct string: Km, min instructions N, length L, LD.
CorrelationReport correlation_report(const Distribution& distribution);

}  // namespace ctm
