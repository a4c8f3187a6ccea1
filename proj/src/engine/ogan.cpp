#include "ogan/engine/ogan.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

#include "ogan/nn/architectures.hpp"
#include "ogan/nn/loss.hpp"
#include "ogan/stl/parser.hpp"

namespace ogan::engine {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Stream ids for the master-seed derivation.
enum : std::uint64_t {
  kStreamSampler = 1,
  kStreamLatent = 2,
  kStreamWeights = 3,
  kStreamCoin = 4,
};

nn::Tensor batch_from_tests(const std::vector<input::TestInput>& tests) {
  const std::size_t n = tests.size();
  const std::size_t dim = tests.front().coords.size();
  nn::Tensor batch({n, dim});
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(tests[i].coords.begin(), tests[i].coords.end(),
              batch.data.begin() + static_cast<long>(i * dim));
  }
  return batch;
}

}  // namespace

void OganConfig::validate() const {
  if (budget < 1) throw std::invalid_argument("budget must be positive");
  if (initial_samples < 1 || initial_samples > budget) {
    throw std::invalid_argument(
        "initial sample count must satisfy 0 < N <= budget");
  }
  if (sampling_probability < 0.0 || sampling_probability > 1.0) {
    throw std::invalid_argument("sampling probability must lie in [0,1]");
  }
  if (threshold_multiplier <= 0.0 || threshold_multiplier >= 1.0) {
    throw std::invalid_argument("threshold multiplier must lie in (0,1)");
  }
  if (latent_dim < 1) throw std::invalid_argument("latent dimension >= 1");
  if (batch_size < 1 || discriminator_epochs < 1 || generator_epochs < 1) {
    throw std::invalid_argument("training epochs and batch size >= 1");
  }
}

Models make_models(int latent_dim, int test_dim, bool vector_input) {
  Models m;
  m.latent_dim = latent_dim;
  m.test_dim = test_dim;
  m.generator = nn::make_generator(static_cast<std::size_t>(latent_dim),
                                   static_cast<std::size_t>(test_dim));
  m.discriminator =
      vector_input
          ? nn::make_dense_discriminator(static_cast<std::size_t>(test_dim))
          : nn::make_conv_discriminator(static_cast<std::size_t>(test_dim));
  return m;
}

void train_models(Models& models, const std::vector<input::TestInput>& tests,
                  const std::vector<double>& robustness,
                  const OganConfig& config, RngStream& latent,
                  RngStream& weights) {
  if (tests.empty() || tests.size() != robustness.size()) {
    throw std::invalid_argument("training needs a nonempty (T, F) set");
  }

  models.generator.init_weights(weights.next_u64());
  models.discriminator.init_weights(weights.next_u64());
  models.generator.zero_grad();
  models.discriminator.zero_grad();

  // Discriminator: one batch per epoch holding the complete training data.
  models.discriminator.set_trainable(true);
  nn::Adam d_opt(config.discriminator_lr);
  const nn::Tensor full = batch_from_tests(tests);
  const std::vector<nn::Param*> d_params = models.discriminator.parameters();
  nn::Tensor grad_out({full.dim(0), 1});
  for (int epoch = 0; epoch < config.discriminator_epochs; ++epoch) {
    const nn::Tensor& pred = models.discriminator.forward(full);
    nn::batch_ogan_loss_grad(pred.data, robustness, grad_out.data);
    models.discriminator.backward(grad_out);
    d_opt.step(d_params);
  }

  // Generator against the frozen discriminator, target robustness 0.
  models.discriminator.set_trainable(false);
  nn::Adam g_opt(config.generator_lr);
  const std::vector<nn::Param*> g_params = models.generator.parameters();
  const std::vector<double> zeros(static_cast<std::size_t>(config.batch_size),
                                  0.0);
  nn::Tensor z({static_cast<std::size_t>(config.batch_size),
                static_cast<std::size_t>(models.latent_dim)});
  nn::Tensor g_grad_out({z.dim(0), 1});
  for (int epoch = 0; epoch < config.generator_epochs; ++epoch) {
    for (auto& v : z.data) v = latent.uniform(-1.0, 1.0);
    const nn::Tensor& gen = models.generator.forward(z);
    const nn::Tensor& pred = models.discriminator.forward(gen);
    nn::batch_ogan_loss_grad(pred.data, zeros, g_grad_out.data);
    const nn::Tensor& into_gen = models.discriminator.backward(g_grad_out);
    models.generator.backward(into_gen);
    g_opt.step(g_params);
  }
}

double estimate_robustness(Models& models, const input::TestInput& test) {
  nn::Tensor x({1, test.coords.size()});
  x.assign(test.coords);
  return models.discriminator.forward(x).data[0];
}

double advance_threshold(double threshold, double alpha) {
  return 1.0 - alpha * (1.0 - threshold);
}

namespace {

input::TestInput generator_draw(Models& models, RngStream& latent) {
  nn::Tensor z({1, static_cast<std::size_t>(models.latent_dim)});
  for (auto& v : z.data) v = latent.uniform(-1.0, 1.0);
  input::TestInput test;
  test.coords = models.generator.forward(z).to_vector();
  return test;
}

SampleOutcome sample_from_generator(Models& models, const OganConfig& config,
                                    RngStream& latent) {
  struct Entry {
    double estimate;
    std::size_t order;
  };
  auto cmp = [](const Entry& a, const Entry& b) {
    return a.estimate != b.estimate ? a.estimate > b.estimate
                                    : a.order > b.order;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
  std::vector<input::TestInput> candidates;

  SampleOutcome out;
  double threshold = 0.0;
  for (;;) {
    input::TestInput cand = generator_draw(models, latent);
    const double est = estimate_robustness(models, cand);
    queue.push(Entry{est, candidates.size()});
    candidates.push_back(std::move(cand));
    out.estimates.push_back(est);
    threshold = advance_threshold(threshold, config.threshold_multiplier);
    if (queue.top().estimate <= threshold) break;
  }
  out.test = candidates[queue.top().order];
  out.chosen_estimate = queue.top().estimate;
  out.monte_carlo = false;
  return out;
}

}  // namespace

SampleOutcome sample_test(Models& models, const OganConfig& config,
                          RngStream& latent, RngStream& monte_carlo,
                          RngStream& coin, int dim) {
  if (coin.uniform01() <= config.sampling_probability) {
    SampleOutcome out;
    out.test = sample(config.sampler, dim, 1, monte_carlo).front();
    out.monte_carlo = true;
    return out;
  }
  return sample_from_generator(models, config, latent);
}

Requirement make_requirement(const sut::SutDescriptor& sut,
                             const std::string& formula_text) {
  Requirement req;
  const std::string& text =
      formula_text.empty() ? sut.default_requirement : formula_text;
  req.formula = stl::parse_stl(text);
  req.ranges = sut::signal_ranges(sut);
  return req;
}

Evaluation evaluate_trace(const Requirement& req, const stl::Trace& trace) {
  const auto rob = stl::eval_robustness(req.formula, trace, req.ranges, 0);
  Evaluation ev;
  ev.scaled = rob.scaled;
  ev.falsifying =
      rob.scaled == 0.0 && !stl::eval_boolean(req.formula, trace, 0);
  return ev;
}

namespace {

class FalsificationRun {
 public:
  FalsificationRun(const sut::SutDescriptor& sut, const Requirement& req,
                   const OganConfig& config)
      : sut_(sut),
        req_(req),
        config_(config),
        sampler_rng_(derive_seed(config.seed, kStreamSampler)),
        latent_rng_(derive_seed(config.seed, kStreamLatent)),
        weights_rng_(derive_seed(config.seed, kStreamWeights)),
        coin_rng_(derive_seed(config.seed, kStreamCoin)),
        dim_(sut.input_spec.dimension()) {}

  FalsificationOutcome run() {
    config_.validate();
    initial_phase();
    if (!done_) {
      models_ = make_models(config_.latent_dim, dim_,
                            sut_.input_spec.is_vector_input());
      while (!done_ && outcome_.executions_used < config_.budget) {
        if (config_.variant == Variant::Adaptive) {
          adaptive_iteration();
        } else {
          nonadaptive_iteration();
        }
      }
    }
    finalize();
    return std::move(outcome_);
  }

 private:
  void initial_phase() {
    const auto tests =
        sample(config_.sampler, dim_, config_.initial_samples, sampler_rng_);
    for (const auto& test : tests) {
      if (done_) break;
      execute_and_record(test, TestRole::Initial, 0.0, 0.0, true, true);
    }
  }

  void adaptive_iteration() {
    const auto t_train = Clock::now();
    train_models(models_, suite_, robustness_, config_, latent_rng_,
                 weights_rng_);
    const double train_s = seconds_since(t_train);

    const auto t_gen = Clock::now();
    const auto sampled =
        sample_test(models_, config_, latent_rng_, sampler_rng_, coin_rng_,
                    dim_);
    const double gen_s = seconds_since(t_gen);

    auto& rec = execute_and_record(
        sampled.test,
        sampled.monte_carlo ? TestRole::MonteCarlo : TestRole::Generated,
        gen_s, train_s, true, true);
    (void)rec;
  }

  void nonadaptive_iteration() {
    const auto t_train = Clock::now();
    train_models(models_, suite_, robustness_, config_, latent_rng_,
                 weights_rng_);
    const double train_s = seconds_since(t_train);

    // t1: Monte-Carlo draw feeding the training data, no verdict.
    const auto t_gen1 = Clock::now();
    const auto t1 =
        sample(config_.sampler, dim_, 1, sampler_rng_).front();
    const double gen1_s = seconds_since(t_gen1);

    // t2: generator draw carrying the falsification verdict, not trained on.
    const auto t_gen2 = Clock::now();
    const auto t2 = sample_from_generator(models_, config_, latent_rng_);
    const double gen2_s = seconds_since(t_gen2);

    // The pair consumes a single execution slot.
    const int slot = outcome_.executions_used + 1;
    execute_pair_member(t1, TestRole::MonteCarlo, gen1_s, train_s, slot,
                        /*train_on=*/true, /*verdict=*/false);
    execute_pair_member(t2.test, TestRole::Generated, gen2_s, 0.0, slot,
                        /*train_on=*/false, /*verdict=*/true);
    outcome_.executions_used = slot;
    check_stop();
  }

  ExecutedTest& execute_and_record(const input::TestInput& test,
                                   TestRole role, double gen_s,
                                   double train_s, bool train_on,
                                   bool verdict) {
    ExecutedTest& rec = execute_pair_member(
        test, role, gen_s, train_s, outcome_.executions_used + 1, train_on,
        verdict);
    outcome_.executions_used += 1;
    check_stop();
    return rec;
  }

  ExecutedTest& execute_pair_member(const input::TestInput& test,
                                    TestRole role, double gen_s,
                                    double train_s, int slot, bool train_on,
                                    bool verdict) {
    const auto t_exec = Clock::now();
    const stl::Trace trace = sut::execute(sut_, test);
    const Evaluation ev = evaluate_trace(req_, trace);
    const double exec_s = seconds_since(t_exec);

    ExecutedTest rec;
    rec.test = test;
    rec.robustness = ev.scaled;
    rec.falsifying = ev.falsifying;
    rec.role = role;
    rec.execution_index = slot;
    rec.verdict = verdict;
    rec.generation_seconds = gen_s;
    rec.training_seconds = train_s;
    rec.execution_seconds = exec_s;
    outcome_.history.push_back(std::move(rec));

    if (train_on) {
      suite_.push_back(test);
      robustness_.push_back(ev.scaled);
    }
    if (verdict && ev.falsifying && !outcome_.falsified) {
      outcome_.falsified = true;
      outcome_.executions_to_falsification = slot;
    }
    return outcome_.history.back();
  }

  void check_stop() {
    if (config_.stop == StopCondition::FirstFalsification &&
        outcome_.falsified) {
      done_ = true;
    }
  }

  void finalize() {
    if (!outcome_.falsified) {
      outcome_.censored = true;
      outcome_.executions_to_falsification = outcome_.executions_used;
    }
  }

  const sut::SutDescriptor& sut_;
  const Requirement& req_;
  OganConfig config_;
  RngStream sampler_rng_;
  RngStream latent_rng_;
  RngStream weights_rng_;
  RngStream coin_rng_;
  int dim_;
  Models models_;
  std::vector<input::TestInput> suite_;
  std::vector<double> robustness_;
  FalsificationOutcome outcome_;
  bool done_ = false;
};

}  // namespace

FalsificationOutcome run_falsification(const sut::SutDescriptor& sut,
                                       const Requirement& req,
                                       const OganConfig& config) {
  FalsificationRun run(sut, req, config);
  return run.run();
}

FalsificationOutcome run_nonadaptive(const sut::SutDescriptor& sut,
                                     const Requirement& req,
                                     OganConfig config) {
  config.variant = Variant::Nonadaptive;
  return run_falsification(sut, req, config);
}

}  // namespace ogan::engine
