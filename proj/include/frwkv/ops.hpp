#pragma once

#include <utility>
#include <vector>

#include "frwkv/tensor.hpp"

namespace frwkv {

/// Instrumentation counters for the recurrent path. Updated once per
/// operation call (never from inside parallel loops); intended for
/// single-threaded assertions in tests and benchmarks.
struct OpCounters {
  unsigned long long state_updates = 0;
  unsigned long long attention_flops = 0;
  unsigned long long tokens_processed = 0;
  void reset() { *this = OpCounters{}; }
};

OpCounters& op_counters();

namespace ops {

// Elementwise arithmetic. Shapes must match, or one operand may be a scalar
// or a vector matching the trailing axis of the other; anything else is
// rejected.
Tensor add(Tape* tape, const Tensor& a, const Tensor& b);
Tensor sub(Tape* tape, const Tensor& a, const Tensor& b);
Tensor mul(Tape* tape, const Tensor& a, const Tensor& b);
Tensor scale(Tape* tape, const Tensor& x, double factor);
Tensor sigmoid(Tape* tape, const Tensor& x);
Tensor tanh(Tape* tape, const Tensor& x);
Tensor exp(Tape* tape, const Tensor& x);

/// Strict 2-D matrix product [m,k] x [k,n] -> [m,n].
Tensor matmul(Tape* tape, const Tensor& a, const Tensor& b);

/// Contracts the last axis of `x` with the first axis of `w`:
/// [..., k] x [k, n] -> [..., n].
Tensor contract_last(Tape* tape, const Tensor& x, const Tensor& w);

/// Swaps the last two axes (rank >= 2).
Tensor transpose_last2(Tape* tape, const Tensor& x);

/// Sum of all elements -> scalar.
Tensor sum(Tape* tape, const Tensor& x);

/// Normalizes groups of `group_size` consecutive elements along the last
/// axis to unit Euclidean norm; group_size = 0 means the whole last axis.
/// A small epsilon in the denominator keeps zero groups at zero.
Tensor l2_normalize(Tape* tape, const Tensor& x, int group_size = 0);

/// Shifts tokens one step forward along the sequence axis; the first token
/// becomes zero. Accepts [L, C] or [S, L, C].
Tensor token_shift(Tape* tape, const Tensor& z);

/// out = (1 - mix) * z + mix * shifted, with mix a length-C vector
/// broadcast over the leading axes.
Tensor mix_tokens(Tape* tape, const Tensor& z, const Tensor& shifted, const Tensor& mix);

/// Extracts token `step` from [S, L, C] -> [S, C].
Tensor slice_step(Tape* tape, const Tensor& tokens, int step);

/// Stacks L tensors of shape [S, C] into [S, L, C].
Tensor stack_steps(Tape* tape, const std::vector<Tensor>& steps);

/// Zero-mean unit-variance normalization over the last axis with a
/// learnable per-channel gain.
Tensor channel_norm(Tape* tape, const Tensor& x, const Tensor& gain);

/// One step of the per-head state recursion:
///   G = Diag(decay) - key_norm * replace^T  (per head)
///   S = G * state + value * key_hat^T
/// state is [S, H, Dh, Dh]; the per-channel vectors are [S, C] with
/// C = H * Dh. Throws if the new state is not finite, naming `step_index`.
Tensor state_update(Tape* tape, const Tensor& state, const Tensor& decay,
                    const Tensor& key_norm, const Tensor& replace,
                    const Tensor& value, const Tensor& key_hat, int heads,
                    int step_index);

/// Per-head matrix-vector read: y = S * r, heads flattened back to C.
Tensor readout(Tape* tape, const Tensor& state, const Tensor& receptance, int heads);

/// Sums each head's channel slice: [S, C] -> [S, H].
Tensor head_sum(Tape* tape, const Tensor& x, int heads);

/// Multiplies each head's channel slice by a per-head scalar:
/// [S, C] x [S, H] -> [S, C].
Tensor head_scale(Tape* tape, const Tensor& x, const Tensor& weights, int heads);

}  // namespace ops

/// Standard Adam update with bias correction, applied in place.
/// `step_count` is the number of completed steps including this one (1-based).
void adam_step(std::vector<double>& params, const std::vector<double>& grads,
               std::vector<double>& moment1, std::vector<double>& moment2,
               long long step_count, double lr, double beta1, double beta2,
               double eps);

}  // namespace frwkv
