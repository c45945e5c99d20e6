#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "frost/common/exec.hpp"
#include "frost/neural/network.hpp"
#include "json.hpp"

namespace frost::neural {

struct AdamConfig {
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  bool operator==(const AdamConfig&) const = default;
};

struct AdamState {
  AdamConfig config;
  std::vector<double> m, v;
  std::uint64_t t = 0;

  AdamState() = default;
  AdamState(std::size_t n, AdamConfig config) : config(config), m(n, 0.0), v(n, 0.0) {}
};

// One bias-corrected Adam update. Throws ShapeMismatch on size disagreement.
void adam_step(std::vector<double>& params, std::span<const double> grads, AdamState& state);

inline constexpr double kClipNorm = 5.0;

// Rescales grad in place when its L2 norm exceeds max_norm; returns the norm before clipping.
double clip_global_norm(std::vector<double>& grad, double max_norm);

// Per-feature z-scores, plus an optional target standardization for regression.
// A zero spread is replaced by 1.
struct Normalizer {
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  double target_mean = 0.0;
  double target_scale = 1.0;
  bool operator==(const Normalizer&) const = default;
};

Normalizer fit_normalizer(const SequenceSet& data, std::span<const std::size_t> indices, bool standardize_target);
void normalize_inputs(const Normalizer& norm, std::span<double> sequence);

struct TrainConfig {
  std::size_t epochs = 30;
  std::size_t batch_size = 32;
  std::uint64_t seed = 0;
  LossKind loss = LossKind::mae;
  double lead_seconds = 0.0;   // recorded with the artifact
  double val_fraction = 0.1;   // size of each epoch's Monte-Carlo validation draw
  AdamConfig adam;
  double clip_norm = kClipNorm;
  bool standardize_target = true;  // regression only
  Exec exec = Exec::parallel;
};

struct ModelArtifact {
  NetworkSpec spec;
  ParamSet params;
  Normalizer normalizer;
  LossKind loss = LossKind::mae;
  std::size_t epochs = 0;
  std::size_t batch_size = 0;
  std::uint64_t seed = 0;
  double lead_seconds = 0.0;
  std::vector<double> train_loss;  // per epoch, in target units
  std::vector<double> val_loss;
  bool operator==(const ModelArtifact&) const = default;
};

// Fits the normalizer on `data`, then runs `epochs` of shuffled mini-batch Adam.
// Each epoch draws a fresh validation subset (with replacement) and trains on
// the examples it left out. Throws EmptyDataset, ShapeMismatch, DivergedLoss.
ModelArtifact train(const NetworkSpec& spec, const SequenceSet& data, const TrainConfig& config);

// Regression value in target units, or class probabilities.
std::vector<double> predict(const ModelArtifact& model, std::span<const double> x);
std::vector<std::vector<double>> predict_batch(const ModelArtifact& model, const SequenceSet& data,
                                               Exec exec = Exec::parallel);

struct MetricsReport {
  std::vector<double> y;
  std::vector<double> y_hat;  // regression value, or P(class 1)
  std::size_t n = 0;
  double mae = 0.0;
  double accuracy = 0.0;  // classification only
  std::vector<double> train_loss;
  std::vector<double> val_loss;
};

MetricsReport evaluate(const ModelArtifact& model, const SequenceSet& data, Exec exec = Exec::parallel);

inline constexpr const char* kModelFormat = "nn-format/1";

struct SerializedModel {
  nlohmann::json meta;
  std::vector<std::uint8_t> weights;  // little-endian float64, row-major, manifest order
};

SerializedModel serialize_model(const ModelArtifact& model);
// Throws VersionMismatch or ManifestShapeMismatch.
ModelArtifact deserialize_model(const nlohmann::json& meta, std::span<const std::uint8_t> weights);

}  // namespace frost::neural
