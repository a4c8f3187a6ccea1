#include "ogan/survival/survival.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ogan::survival {

namespace {

constexpr double kZ95 = 1.959963984540054;  // Phi^-1(0.975)

// 95% log(-log) interval around one survival estimate.
ConfidenceInterval loglog_interval(double surv, double greenwood_sum) {
  if (surv >= 1.0) return {1.0, 1.0};
  if (surv <= 0.0) return {0.0, 0.0};
  const double log_s = std::log(surv);
  const double se_theta = std::sqrt(greenwood_sum) / std::abs(log_s);
  const double theta = std::log(-log_s);
  const double lo = std::exp(-std::exp(theta + kZ95 * se_theta));
  const double hi = std::exp(-std::exp(theta - kZ95 * se_theta));
  return {lo, hi};
}

}  // namespace

void SurvivalData::validate() const {
  if (time.size() != censored.size()) {
    throw std::invalid_argument("survival data arrays disagree in length");
  }
  if (time.empty()) {
    throw std::invalid_argument("survival data needs at least one replica");
  }
  if (budget < 1) {
    throw std::invalid_argument("survival budget must be positive");
  }
  for (std::size_t i = 0; i < time.size(); ++i) {
    if (time[i] < 1 || time[i] > budget) {
      throw std::invalid_argument("event time outside [1, budget]");
    }
    if (censored[i] && time[i] != budget) {
      throw std::invalid_argument("censoring happens only at the budget");
    }
  }
}

SurvivalCurve kaplan_meier(const SurvivalData& data) {
  data.validate();
  const int budget = data.budget;
  const std::size_t n = data.size();

  SurvivalCurve curve;
  curve.budget = budget;
  curve.survival.assign(static_cast<std::size_t>(budget) + 1, 1.0);
  curve.lower.assign(static_cast<std::size_t>(budget) + 1, 1.0);
  curve.upper.assign(static_cast<std::size_t>(budget) + 1, 1.0);
  curve.at_risk.assign(static_cast<std::size_t>(budget) + 1, 0);
  curve.events.assign(static_cast<std::size_t>(budget) + 1, 0);

  for (std::size_t i = 0; i < n; ++i) {
    if (!data.censored[i]) {
      curve.events[static_cast<std::size_t>(data.time[i])] += 1;
    }
  }

  double surv = 1.0;
  double greenwood = 0.0;
  int failed_before = 0;
  for (int t = 1; t <= budget; ++t) {
    // Censoring only happens at the budget, so everyone not yet failed is
    // still at risk.
    const int at_risk = static_cast<int>(n) - failed_before;
    const int d = curve.events[static_cast<std::size_t>(t)];
    curve.at_risk[static_cast<std::size_t>(t)] = at_risk;
    if (d > 0 && at_risk > 0) {
      surv *= 1.0 - static_cast<double>(d) / static_cast<double>(at_risk);
      if (at_risk > d) {
        greenwood += static_cast<double>(d) /
                     (static_cast<double>(at_risk) *
                      static_cast<double>(at_risk - d));
      } else {
        surv = 0.0;
      }
      failed_before += d;
    }
    curve.survival[static_cast<std::size_t>(t)] = surv;
    const auto ci = loglog_interval(surv, greenwood);
    curve.lower[static_cast<std::size_t>(t)] = ci.lo;
    curve.upper[static_cast<std::size_t>(t)] = ci.hi;
  }
  return curve;
}

RateEstimate falsification_rate(const SurvivalData& data) {
  data.validate();
  int successes = 0;
  for (bool c : data.censored) {
    if (!c) ++successes;
  }
  const double n = static_cast<double>(data.size());
  RateEstimate est;
  est.rate = static_cast<double>(successes) / n;
  if (successes == 0) {
    est.ci = {0.0, 0.0};
  } else if (successes == static_cast<int>(data.size())) {
    est.ci = {1.0, 1.0};
  } else {
    const auto curve = kaplan_meier(data);
    const double s_lo = curve.lower[static_cast<std::size_t>(data.budget)];
    const double s_hi = curve.upper[static_cast<std::size_t>(data.budget)];
    est.ci = {1.0 - s_hi, 1.0 - s_lo};
  }
  return est;
}

std::optional<double> mean_executions(const SurvivalData& data) {
  data.validate();
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data.censored[i]) {
      sum += static_cast<double>(data.time[i]);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

LogRankResult logrank_test(const SurvivalData& a, const SurvivalData& b) {
  a.validate();
  b.validate();

  const int budget = std::max(a.budget, b.budget);
  auto at_risk = [](const SurvivalData& d, int t) {
    int n = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      // Still at risk at t when neither failed nor censored before t.
      if (d.time[i] >= t) ++n;
    }
    return n;
  };
  auto events_at = [](const SurvivalData& d, int t) {
    int n = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d.censored[i] && d.time[i] == t) ++n;
    }
    return n;
  };

  double observed_minus_expected = 0.0;
  double variance = 0.0;
  for (int t = 1; t <= budget; ++t) {
    const int na = at_risk(a, t);
    const int nb = at_risk(b, t);
    const int da = events_at(a, t);
    const int db = events_at(b, t);
    const int n = na + nb;
    const int d = da + db;
    if (d == 0 || n == 0) continue;
    const double expected_a =
        static_cast<double>(d) * static_cast<double>(na) /
        static_cast<double>(n);
    observed_minus_expected += static_cast<double>(da) - expected_a;
    if (n > 1) {
      // Hypergeometric variance of d_a.
      variance += static_cast<double>(d) *
                  (static_cast<double>(na) / n) *
                  (static_cast<double>(nb) / n) *
                  (static_cast<double>(n - d) / static_cast<double>(n - 1));
    }
  }

  LogRankResult result;
  if (variance <= 0.0) {
    result.statistic = 0.0;
    result.p_value = 1.0;
    return result;
  }
  result.statistic =
      observed_minus_expected * observed_minus_expected / variance;
  result.p_value = chi2_survival_1df(result.statistic);
  return result;
}

double chi2_survival_1df(double x) {
  if (x <= 0.0) return 1.0;
  // For one degree of freedom the upper tail is erfc(sqrt(x/2)).
  return std::erfc(std::sqrt(x / 2.0));
}

}  // namespace ogan::survival
