#include "frwkv/tensor.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace frwkv {

std::size_t numel(const Shape& shape) {
  std::size_t n = 1;
  for (int d : shape) {
    if (d < 0) throw std::invalid_argument("negative dimension in shape " + shape_str(shape));
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

std::string shape_str(const Shape& shape) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << ", ";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

detail::TensorNode& Tensor::node() {
  if (!node_) throw std::logic_error("use of undefined tensor");
  return *node_;
}

const detail::TensorNode& Tensor::node() const {
  if (!node_) throw std::logic_error("use of undefined tensor");
  return *node_;
}

Tensor Tensor::zeros(Shape shape, bool requires_grad) {
  Tensor t;
  t.node_ = std::make_shared<detail::TensorNode>();
  t.node_->shape = std::move(shape);
  t.node_->value.assign(numel(t.node_->shape), 0.0);
  if (requires_grad) t.set_requires_grad(true);
  return t;
}

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
  Tensor t = zeros(std::move(shape), requires_grad);
  for (auto& x : t.node_->value) x = value;
  return t;
}

Tensor Tensor::from_vector(Shape shape, std::vector<double> values, bool requires_grad) {
  if (numel(shape) != values.size()) {
    throw std::invalid_argument("value count " + std::to_string(values.size()) +
                                " does not match shape " + shape_str(shape));
  }
  Tensor t;
  t.node_ = std::make_shared<detail::TensorNode>();
  t.node_->shape = std::move(shape);
  t.node_->value = std::move(values);
  if (requires_grad) t.set_requires_grad(true);
  return t;
}

Tensor Tensor::scalar(double value) { return from_vector({1}, {value}); }

const Shape& Tensor::shape() const { return node().shape; }

int Tensor::rank() const { return static_cast<int>(node().shape.size()); }

int Tensor::dim(int axis) const {
  const Shape& s = node().shape;
  if (axis < 0) axis += static_cast<int>(s.size());
  if (axis < 0 || axis >= static_cast<int>(s.size())) {
    throw std::out_of_range("axis " + std::to_string(axis) + " out of range for shape " + shape_str(s));
  }
  return s[static_cast<std::size_t>(axis)];
}

std::size_t Tensor::size() const { return node().value.size(); }

double* Tensor::data() { return node().value.data(); }
const double* Tensor::data() const { return node().value.data(); }

double Tensor::item() const {
  if (size() != 1) {
    throw std::invalid_argument("item() requires a scalar tensor, got shape " + shape_str(shape()));
  }
  return node().value[0];
}

bool Tensor::requires_grad() const { return node().requires_grad; }

Tensor& Tensor::set_requires_grad(bool flag) {
  auto& n = node();
  n.requires_grad = flag;
  if (flag && n.grad.size() != n.value.size()) {
    n.grad.assign(n.value.size(), 0.0);
  }
  return *this;
}

double* Tensor::grad() {
  auto& n = node();
  if (!n.requires_grad) throw std::logic_error("grad() on a tensor without gradient tracking");
  return n.grad.data();
}

const double* Tensor::grad() const {
  const auto& n = node();
  if (!n.requires_grad) throw std::logic_error("grad() on a tensor without gradient tracking");
  return n.grad.data();
}

void Tensor::zero_grad() {
  auto& n = node();
  if (n.requires_grad) n.grad.assign(n.value.size(), 0.0);
}

bool Tensor::all_finite() const {
  for (double x : node().value) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::vector<double> Tensor::values_copy() const { return node().value; }

std::vector<double> Tensor::grad_copy() const {
  const auto& n = node();
  if (!n.requires_grad) throw std::logic_error("grad_copy() on a tensor without gradient tracking");
  return n.grad;
}

void Tape::record(std::function<void()> backward_step) {
  steps_.push_back(std::move(backward_step));
}

void Tape::backward(const Tensor& loss) {
  if (loss.size() != 1) {
    throw std::invalid_argument("backward requires a scalar loss, got shape " + shape_str(loss.shape()));
  }
  if (!loss.requires_grad()) {
    throw std::invalid_argument("backward requires a loss recorded on the tape");
  }
  Tensor seed = loss;
  seed.grad()[0] = 1.0;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) (*it)();
}

}  // namespace frwkv
