#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace frwkv {

using Shape = std::vector<int>;

std::size_t numel(const Shape& shape);
std::string shape_str(const Shape& shape);

namespace detail {
struct TensorNode {
  Shape shape;
  std::vector<double> value;
  std::vector<double> grad;  // allocated when requires_grad is set
  bool requires_grad = false;
};
}  // namespace detail

/// Dense f64 tensor. A Tensor is a cheap handle; copies share the same
/// underlying buffer and gradient.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_vector(Shape shape, std::vector<double> values,
                            bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return static_cast<bool>(node_); }
  const Shape& shape() const;
  int rank() const;
  int dim(int axis) const;
  std::size_t size() const;

  double* data();
  const double* data() const;

  /// Value of a scalar (size-1) tensor.
  double item() const;

  bool requires_grad() const;
  Tensor& set_requires_grad(bool flag);
  double* grad();
  const double* grad() const;
  void zero_grad();

  bool all_finite() const;
  bool same_storage(const Tensor& other) const { return node_ == other.node_; }

  std::vector<double> values_copy() const;
  std::vector<double> grad_copy() const;

 private:
  std::shared_ptr<detail::TensorNode> node_;
  detail::TensorNode& node();
  const detail::TensorNode& node() const;
};

/// Reverse-mode tape. Operations append a backward closure as they execute;
/// backward() replays the closures in reverse order exactly once, so every
/// input of a recorded operation is visited after the operations that
/// consumed it.
class Tape {
 public:
  void record(std::function<void()> backward_step);
  std::size_t op_count() const { return steps_.size(); }

  /// Seeds d(loss)/d(loss) = 1 and replays the tape. `loss` must be a scalar
  /// recorded on this tape. Leaf gradients accumulate additively; callers
  /// zero parameter gradients before invoking backward.
  void backward(const Tensor& loss);

  void clear() { steps_.clear(); }

 private:
  std::vector<std::function<void()>> steps_;
};

}  // namespace frwkv
