#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frost/common/exec.hpp"

namespace frost::neural {

enum class CellKind { rnn, lstm };
enum class HeadKind { linear, softmax };
enum class LossKind { mae, cce };

struct LayerSpec {
  CellKind kind = CellKind::lstm;
  std::size_t hidden = 32;
  bool operator==(const LayerSpec&) const = default;
};

// Many-to-one: one output per sequence, read from the top layer's last step.
struct NetworkSpec {
  std::vector<LayerSpec> layers;
  HeadKind head = HeadKind::linear;
  std::size_t seq_len = 1;
  std::size_t input_features = 1;

  std::size_t output_size() const { return head == HeadKind::linear ? 1 : 2; }
  bool operator==(const NetworkSpec&) const = default;
};

// Throws ShapeMismatch for empty layer lists or zero sizes.
void validate(const NetworkSpec& spec);

struct Slot {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t offset = 0;
  std::size_t size() const { return rows * cols; }
  bool operator==(const Slot&) const = default;
};

// Every parameter in one flat buffer. Layer l owns "l<l>.W"/"l<l>.b" (RNN) or
// the four gate matrices W_c, W_u, W_f, W_o followed by their biases (LSTM),
// laid out so the gates form one stacked [4H x (H+F)] matrix. The head owns
// "head.w"/"head.b" (linear) or "head.W"/"head.b" (softmax).
class ParamSet {
 public:
  ParamSet() = default;
  explicit ParamSet(const NetworkSpec& spec);

  const std::vector<Slot>& slots() const noexcept { return slots_; }
  const Slot& slot(const std::string& name) const;
  std::vector<double>& values() noexcept { return values_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<RowMatrix> matrix(const std::string& name);
  Eigen::Map<const RowMatrix> matrix(const std::string& name) const;

  bool operator==(const ParamSet&) const = default;

 private:
  std::vector<Slot> slots_;
  std::vector<double> values_;
};

// Uniform in +-1/sqrt(H+F) for recurrent weights, +-1/sqrt(H) for the head,
// zero biases, and +1 on the LSTM forget bias.
ParamSet init_params(const NetworkSpec& spec, std::uint64_t seed);

struct RnnLayerParams {
  Eigen::MatrixXd W;  // H x (H+F), acting on [a_prev; x]
  Eigen::VectorXd b;
};

struct LstmLayerParams {
  Eigen::MatrixXd W_c, W_u, W_f, W_o;
  Eigen::VectorXd b_c, b_u, b_f, b_o;
};

struct LstmState {
  Eigen::VectorXd a;
  Eigen::VectorXd c;
};

Eigen::VectorXd rnn_cell_forward(const RnnLayerParams& p, const Eigen::VectorXd& x, const Eigen::VectorXd& a_prev);
LstmState lstm_cell_forward(const LstmLayerParams& p, const Eigen::VectorXd& x, const LstmState& prev);

RnnLayerParams rnn_layer(const ParamSet& params, std::size_t layer);
LstmLayerParams lstm_layer(const ParamSet& params, std::size_t layer);

// Network output for one sequence (x is seq_len x input_features, row-major):
// the scalar regression value, or the two class probabilities.
std::vector<double> forward_sequence(const NetworkSpec& spec, const ParamSet& params, std::span<const double> x);

double mae_loss(std::span<const double> y, std::span<const double> y_hat);
// Probabilities are clamped to [kProbFloor, 1 - kProbFloor]. Throws BadDistribution.
double cce_loss(std::span<const double> label_onehot, std::span<const double> p);
inline constexpr double kProbFloor = 1e-12;

// Sequences with one target each: a regression value or a class index.
struct SequenceSet {
  std::size_t seq_len = 0;
  std::size_t features = 0;
  std::vector<double> inputs;  // n x seq_len x features
  std::vector<double> targets;

  std::size_t size() const noexcept { return targets.size(); }
  std::span<const double> sequence(std::size_t i) const {
    return {inputs.data() + i * seq_len * features, seq_len * features};
  }
  void push(std::span<const double> sequence, double target);
};

// Mean loss over `indices` and its exact gradient (BPTT). Per-example
// gradients are reduced in index order, so both Exec paths agree bit for bit.
double loss_and_gradient(const NetworkSpec& spec, const ParamSet& params, const SequenceSet& data,
                         std::span<const std::size_t> indices, LossKind loss, std::vector<double>& grad,
                         Exec exec = Exec::parallel);

double batch_loss(const NetworkSpec& spec, const ParamSet& params, const SequenceSet& data,
                  std::span<const std::size_t> indices, LossKind loss);

// Max over parameters of |g_a - g_n| / max(|g_a|, |g_n|, 1e-6 * max(1, |loss|)),
// with g_n from central differences of step eps.
double finite_difference_check(const NetworkSpec& spec, const ParamSet& params, const SequenceSet& data,
                               LossKind loss, double eps = 1e-5);

}  // namespace frost::neural
