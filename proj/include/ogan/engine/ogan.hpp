#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogan/engine/rng.hpp"
#include "ogan/engine/sampler.hpp"
#include "ogan/input_space.hpp"
#include "ogan/nn/network.hpp"
#include "ogan/stl/monitor.hpp"
#include "ogan/sut/sut.hpp"

namespace ogan::engine {

enum class Variant { Adaptive, Nonadaptive };
enum class StopCondition { FirstFalsification, BudgetExhausted };

struct OganConfig {
  int budget = 300;                    // E, number of SUT executions
  int initial_samples = 75;            // N, Monte-Carlo warm-up
  double sampling_probability = 0.0;   // P, exploration coin
  int batch_size = 32;                 // B, generator batch
  int discriminator_epochs = 15;       // E_D
  int generator_epochs = 375;          // E_G
  double threshold_multiplier = 0.95;  // alpha
  int latent_dim = 20;                 // d_H
  SamplerKind sampler = SamplerKind::Uniform;
  Variant variant = Variant::Adaptive;
  StopCondition stop = StopCondition::FirstFalsification;
  std::uint64_t seed = 0;
  double discriminator_lr = 0.005;
  double generator_lr = 0.0001;

  void validate() const;
};

enum class TestRole { Initial, MonteCarlo, Generated };

struct ExecutedTest {
  input::TestInput test;
  double robustness = 1.0;  // scaled
  bool falsifying = false;  // robustness 0 confirmed by the Boolean monitor
  TestRole role = TestRole::Initial;
  // 1-based position in the budget accounting; the nonadaptive variant's
  // paired draws share one slot.
  int execution_index = 0;
  // True when this test's verdict counts toward the falsification outcome
  // (everything except the nonadaptive training-only draws).
  bool verdict = true;
  double generation_seconds = 0.0;
  double training_seconds = 0.0;
  double execution_seconds = 0.0;
};

struct FalsificationOutcome {
  bool falsified = false;
  // Executions needed for the first confirmed falsification; equals the
  // budget when censored.
  int executions_to_falsification = 0;
  bool censored = false;
  int executions_used = 0;
  std::vector<ExecutedTest> history;
};

// Generator/discriminator pair; fresh networks are made and trained every
// loop iteration.
struct Models {
  nn::Network generator;
  nn::Network discriminator;
  int latent_dim = 0;
  int test_dim = 0;
};

Models make_models(int latent_dim, int test_dim, bool vector_input);

// Reinitializes both networks, fits the discriminator to (tests, robustness)
// with full-data batches, then trains the generator against the frozen
// discriminator toward estimated robustness 0.
void train_models(Models& models, const std::vector<input::TestInput>& tests,
                  const std::vector<double>& robustness,
                  const OganConfig& config, RngStream& latent,
                  RngStream& weights);

double estimate_robustness(Models& models, const input::TestInput& test);

// accept_threshold <- 1 - alpha * (1 - accept_threshold)
double advance_threshold(double threshold, double alpha);

struct SampleOutcome {
  input::TestInput test;
  bool monte_carlo = false;
  // Discriminator estimates for every candidate drawn in this call.
  std::vector<double> estimates;
  double chosen_estimate = 0.0;
};

// One SAMPLE_TEST call: Monte-Carlo with probability P, otherwise the
// generator/priority-queue loop with the geometric acceptance threshold.
SampleOutcome sample_test(Models& models, const OganConfig& config,
                          RngStream& latent, RngStream& monte_carlo,
                          RngStream& coin, int dim);

// Requirement bundled with the declared signal ranges of its SUT.
struct Requirement {
  stl::FormulaPtr formula;
  stl::RangeMap ranges;
};

Requirement make_requirement(const sut::SutDescriptor& sut,
                             const std::string& formula_text);

// Scaled robustness of one executed trace plus the confirmed-falsification
// verdict (scaled 0 alone is only a candidate).
struct Evaluation {
  double scaled;
  bool falsifying;
};

Evaluation evaluate_trace(const Requirement& req, const stl::Trace& trace);

// Algorithm main loop (adaptive or per-config nonadaptive ablation).
FalsificationOutcome run_falsification(const sut::SutDescriptor& sut,
                                       const Requirement& req,
                                       const OganConfig& config);

// Convenience wrapper forcing the nonadaptive variant.
FalsificationOutcome run_nonadaptive(const sut::SutDescriptor& sut,
                                     const Requirement& req,
                                     OganConfig config);

}  // namespace ogan::engine
