#pragma once

#include <optional>
#include <vector>

namespace ogan::survival {

// Executions-to-falsification per replica; a censored replica exhausted the
// budget, so its time is pinned at the budget.
struct SurvivalData {
  std::vector<int> time;        // in [1, budget]
  std::vector<bool> censored;   // censored[i] implies time[i] == budget
  int budget = 0;

  std::size_t size() const { return time.size(); }
  void validate() const;
};

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct SurvivalCurve {
  // Index t = 0..budget.
  std::vector<double> survival;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<int> at_risk;   // n_t, index 1..budget used
  std::vector<int> events;    // d_t
  int budget = 0;
};

struct RateEstimate {
  double rate = 0.0;
  ConfidenceInterval ci;
};

// Product-limit estimator with Greenwood variance and 95% log(-log)
// confidence bounds.
SurvivalCurve kaplan_meier(const SurvivalData& data);

// Falsification rate (#uncensored / N) with the confidence interval taken
// from the Kaplan-Meier bounds at the budget; degenerate rates 0 and 1 give
// point intervals.
RateEstimate falsification_rate(const SurvivalData& data);

// Mean executions over the successful replicas only; absent when every
// replica was censored.
std::optional<double> mean_executions(const SurvivalData& data);

struct LogRankResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// Two-sample log-rank test; the statistic is asymptotically chi-squared with
// one degree of freedom.
LogRankResult logrank_test(const SurvivalData& a, const SurvivalData& b);

// Upper tail of the chi-squared distribution with one degree of freedom.
double chi2_survival_1df(double x);

}  // namespace ogan::survival
