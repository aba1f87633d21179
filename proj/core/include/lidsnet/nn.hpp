#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lidsnet/rng.hpp"

namespace lidsnet::nn {

// ---------------------------------------------------------------------------
// Parameter blocks
// ---------------------------------------------------------------------------

// Valid 1D convolution weights. Kernel layout [k, d_in, filters] row-major,
// bias [filters].
template <typename T>
struct ConvBlock {
  std::int32_t kernel = 0;
  std::int32_t in_dim = 0;
  std::int32_t filters = 0;
  std::vector<T> w;
  std::vector<T> b;

  void resize() {
    w.assign(static_cast<std::size_t>(kernel) * in_dim * filters, T(0));
    b.assign(static_cast<std::size_t>(filters), T(0));
  }
};

// Single-direction LSTM. Gate order i, f, g, o. wx [input, 4H], wh [H, 4H],
// b [4H].
template <typename T>
struct LstmParams {
  std::int32_t input = 0;
  std::int32_t hidden = 0;
  std::vector<T> wx;
  std::vector<T> wh;
  std::vector<T> b;

  void resize() {
    wx.assign(static_cast<std::size_t>(input) * 4 * hidden, T(0));
    wh.assign(static_cast<std::size_t>(hidden) * 4 * hidden, T(0));
    b.assign(static_cast<std::size_t>(4) * hidden, T(0));
  }
};

// ---------------------------------------------------------------------------
// Elementwise helpers
// ---------------------------------------------------------------------------

template <typename T>
inline T sigmoid(T x) {
  return T(1) / (T(1) + std::exp(-x));
}

// ---------------------------------------------------------------------------
// Conv1D (valid) + ReLU
// ---------------------------------------------------------------------------

// x: [len, in_dim] -> y: [len-k+1, filters], post-ReLU.
// Throws std::invalid_argument when len < kernel.
template <typename T>
void conv1d_relu_forward(std::span<const T> x, std::int32_t len, const ConvBlock<T>& conv,
                         std::span<T> y) {
  const std::int32_t k = conv.kernel, d = conv.in_dim, f = conv.filters;
  if (len < k) throw std::invalid_argument("conv1d: input length < kernel size");
  const std::int32_t out_len = len - k + 1;
  for (std::int32_t t = 0; t < out_len; ++t) {
    T* yt = y.data() + static_cast<std::size_t>(t) * f;
    for (std::int32_t j = 0; j < f; ++j) yt[j] = conv.b[static_cast<std::size_t>(j)];
    for (std::int32_t a = 0; a < k; ++a) {
      const T* xa = x.data() + static_cast<std::size_t>(t + a) * d;
      const T* wa = conv.w.data() + static_cast<std::size_t>(a) * d * f;
      for (std::int32_t c = 0; c < d; ++c) {
        const T xv = xa[c];
        const T* wc = wa + static_cast<std::size_t>(c) * f;
        for (std::int32_t j = 0; j < f; ++j) yt[j] += xv * wc[j];
      }
    }
    for (std::int32_t j = 0; j < f; ++j) yt[j] = std::max(yt[j], T(0));
  }
}

// dy is the gradient w.r.t. the post-ReLU output y. Gradients accumulate
// into dx / dconv (callers zero them per batch).
template <typename T>
void conv1d_relu_backward(std::span<const T> x, std::int32_t len, const ConvBlock<T>& conv,
                          std::span<const T> y, std::span<const T> dy, std::span<T> dx,
                          ConvBlock<T>& dconv) {
  const std::int32_t k = conv.kernel, d = conv.in_dim, f = conv.filters;
  const std::int32_t out_len = len - k + 1;
  for (std::int32_t t = 0; t < out_len; ++t) {
    const T* yt = y.data() + static_cast<std::size_t>(t) * f;
    const T* dyt = dy.data() + static_cast<std::size_t>(t) * f;
    for (std::int32_t j = 0; j < f; ++j) {
      const T g = yt[j] > T(0) ? dyt[j] : T(0);
      if (g == T(0)) continue;
      dconv.b[static_cast<std::size_t>(j)] += g;
      for (std::int32_t a = 0; a < k; ++a) {
        const T* xa = x.data() + static_cast<std::size_t>(t + a) * d;
        T* dxa = dx.data() + static_cast<std::size_t>(t + a) * d;
        T* dwa = dconv.w.data() + static_cast<std::size_t>(a) * d * f;
        const T* wa = conv.w.data() + static_cast<std::size_t>(a) * d * f;
        for (std::int32_t c = 0; c < d; ++c) {
          dwa[static_cast<std::size_t>(c) * f + j] += xa[c] * g;
          dxa[c] += wa[static_cast<std::size_t>(c) * f + j] * g;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Max pooling over time
// ---------------------------------------------------------------------------

// x: [len, features] -> out: [features]; argmax keeps the first maximal
// index per feature so the backward route is deterministic.
template <typename T>
void maxpool_forward(std::span<const T> x, std::int32_t len, std::int32_t features,
                     std::span<T> out, std::int32_t* argmax) {
  if (len < 1) throw std::invalid_argument("maxpool: empty input");
  for (std::int32_t j = 0; j < features; ++j) {
    T best = x[static_cast<std::size_t>(j)];
    std::int32_t best_t = 0;
    for (std::int32_t t = 1; t < len; ++t) {
      const T v = x[static_cast<std::size_t>(t) * features + j];
      if (v > best) {
        best = v;
        best_t = t;
      }
    }
    out[static_cast<std::size_t>(j)] = best;
    if (argmax) argmax[j] = best_t;
  }
}

template <typename T>
void maxpool_backward(std::span<const T> dout, std::int32_t features, const std::int32_t* argmax,
                      std::span<T> dx) {
  for (std::int32_t j = 0; j < features; ++j) {
    dx[static_cast<std::size_t>(argmax[j]) * features + j] += dout[static_cast<std::size_t>(j)];
  }
}

// ---------------------------------------------------------------------------
// LSTM
// ---------------------------------------------------------------------------

// Per-sequence cache for backpropagation through time. Gate activations,
// cell and hidden states for each step.
template <typename T>
struct LstmTrace {
  std::int32_t steps = 0;
  std::int32_t hidden = 0;
  std::vector<T> i, f, g, o;  // [steps, H], post-activation
  std::vector<T> c, h;        // [steps, H]

  void resize(std::int32_t n, std::int32_t H) {
    steps = n;
    hidden = H;
    const std::size_t sz = static_cast<std::size_t>(n) * H;
    i.assign(sz, T(0));
    f.assign(sz, T(0));
    g.assign(sz, T(0));
    o.assign(sz, T(0));
    c.assign(sz, T(0));
    h.assign(sz, T(0));
  }
};

// x: [steps, input]. rec_mask (nullable): variational dropout mask [H]
// applied to the hidden-state input of every step. h_final gets h(steps-1).
// Initial h and c are zero.
template <typename T>
void lstm_forward(std::span<const T> x, std::int32_t steps, const LstmParams<T>& p,
                  const T* rec_mask, LstmTrace<T>* trace, std::span<T> h_final) {
  const std::int32_t D = p.input, H = p.hidden;
  if (steps < 1) throw std::invalid_argument("lstm: zero-length sequence");
  std::vector<T> h_prev(static_cast<std::size_t>(H), T(0));
  std::vector<T> c_prev(static_cast<std::size_t>(H), T(0));
  std::vector<T> z(static_cast<std::size_t>(4) * H);
  std::vector<T> h_masked(static_cast<std::size_t>(H));
  if (trace) trace->resize(steps, H);

  for (std::int32_t t = 0; t < steps; ++t) {
    std::copy(p.b.begin(), p.b.end(), z.begin());
    const T* xt = x.data() + static_cast<std::size_t>(t) * D;
    for (std::int32_t a = 0; a < D; ++a) {
      const T xv = xt[a];
      if (xv == T(0)) continue;
      const T* wrow = p.wx.data() + static_cast<std::size_t>(a) * 4 * H;
      for (std::int32_t j = 0; j < 4 * H; ++j) z[static_cast<std::size_t>(j)] += xv * wrow[j];
    }
    for (std::int32_t a = 0; a < H; ++a) {
      h_masked[static_cast<std::size_t>(a)] =
          rec_mask ? h_prev[static_cast<std::size_t>(a)] * rec_mask[a]
                   : h_prev[static_cast<std::size_t>(a)];
    }
    for (std::int32_t a = 0; a < H; ++a) {
      const T hv = h_masked[static_cast<std::size_t>(a)];
      if (hv == T(0)) continue;
      const T* wrow = p.wh.data() + static_cast<std::size_t>(a) * 4 * H;
      for (std::int32_t j = 0; j < 4 * H; ++j) z[static_cast<std::size_t>(j)] += hv * wrow[j];
    }
    for (std::int32_t j = 0; j < H; ++j) {
      const T iv = sigmoid(z[static_cast<std::size_t>(j)]);
      const T fv = sigmoid(z[static_cast<std::size_t>(H + j)]);
      const T gv = std::tanh(z[static_cast<std::size_t>(2 * H + j)]);
      const T ov = sigmoid(z[static_cast<std::size_t>(3 * H + j)]);
      const T cv = fv * c_prev[static_cast<std::size_t>(j)] + iv * gv;
      const T hv = ov * std::tanh(cv);
      if (trace) {
        const std::size_t idx = static_cast<std::size_t>(t) * H + j;
        trace->i[idx] = iv;
        trace->f[idx] = fv;
        trace->g[idx] = gv;
        trace->o[idx] = ov;
        trace->c[idx] = cv;
        trace->h[idx] = hv;
      }
      c_prev[static_cast<std::size_t>(j)] = cv;
      h_prev[static_cast<std::size_t>(j)] = hv;
    }
  }
  std::copy(h_prev.begin(), h_prev.end(), h_final.begin());
}

// Backpropagation through time from the gradient of the final hidden state.
// Accumulates into dp and dx.
template <typename T>
void lstm_backward(std::span<const T> x, const LstmParams<T>& p, const T* rec_mask,
                   const LstmTrace<T>& trace, std::span<const T> dh_final, LstmParams<T>& dp,
                   std::span<T> dx) {
  const std::int32_t D = p.input, H = p.hidden, n = trace.steps;
  std::vector<T> dh(dh_final.begin(), dh_final.end());
  std::vector<T> dc(static_cast<std::size_t>(H), T(0));
  std::vector<T> dz(static_cast<std::size_t>(4) * H);
  std::vector<T> h_masked(static_cast<std::size_t>(H));

  for (std::int32_t t = n - 1; t >= 0; --t) {
    const std::size_t base = static_cast<std::size_t>(t) * H;
    for (std::int32_t j = 0; j < H; ++j) {
      const T iv = trace.i[base + j], fv = trace.f[base + j], gv = trace.g[base + j],
              ov = trace.o[base + j], cv = trace.c[base + j];
      const T tc = std::tanh(cv);
      const T dhv = dh[static_cast<std::size_t>(j)];
      const T dov = dhv * tc;
      T dcv = dc[static_cast<std::size_t>(j)] + dhv * ov * (T(1) - tc * tc);
      const T c_prev = t > 0 ? trace.c[base - H + j] : T(0);
      const T div = dcv * gv;
      const T dfv = dcv * c_prev;
      const T dgv = dcv * iv;
      dz[static_cast<std::size_t>(j)] = div * iv * (T(1) - iv);
      dz[static_cast<std::size_t>(H + j)] = dfv * fv * (T(1) - fv);
      dz[static_cast<std::size_t>(2 * H + j)] = dgv * (T(1) - gv * gv);
      dz[static_cast<std::size_t>(3 * H + j)] = dov * ov * (T(1) - ov);
      dc[static_cast<std::size_t>(j)] = dcv * fv;
    }

    const T* xt = x.data() + static_cast<std::size_t>(t) * D;
    T* dxt = dx.data() + static_cast<std::size_t>(t) * D;
    for (std::int32_t a = 0; a < D; ++a) {
      const T* wrow = p.wx.data() + static_cast<std::size_t>(a) * 4 * H;
      T* dwrow = dp.wx.data() + static_cast<std::size_t>(a) * 4 * H;
      T acc = T(0);
      const T xv = xt[a];
      for (std::int32_t j = 0; j < 4 * H; ++j) {
        dwrow[j] += xv * dz[static_cast<std::size_t>(j)];
        acc += wrow[j] * dz[static_cast<std::size_t>(j)];
      }
      dxt[a] += acc;
    }

    // h(-1) is zero, so step 0 contributes nothing through wh.
    if (t > 0) {
      const std::size_t prev = base - H;
      for (std::int32_t a = 0; a < H; ++a) {
        h_masked[static_cast<std::size_t>(a)] =
            rec_mask ? trace.h[prev + a] * rec_mask[a] : trace.h[prev + a];
      }
      for (std::int32_t a = 0; a < H; ++a) {
        const T* wrow = p.wh.data() + static_cast<std::size_t>(a) * 4 * H;
        T* dwrow = dp.wh.data() + static_cast<std::size_t>(a) * 4 * H;
        T acc = T(0);
        const T hv = h_masked[static_cast<std::size_t>(a)];
        for (std::int32_t j = 0; j < 4 * H; ++j) {
          dwrow[j] += hv * dz[static_cast<std::size_t>(j)];
          acc += wrow[j] * dz[static_cast<std::size_t>(j)];
        }
        dh[static_cast<std::size_t>(a)] = acc * (rec_mask ? rec_mask[a] : T(1));
      }
    }
    for (std::int32_t j = 0; j < 4 * H; ++j) {
      dp.b[static_cast<std::size_t>(j)] += dz[static_cast<std::size_t>(j)];
    }
  }
}

// ---------------------------------------------------------------------------
// BiLSTM over the valid prefix of a padded sequence
// ---------------------------------------------------------------------------

template <typename T>
struct BiLstmTrace {
  LstmTrace<T> fwd, bwd;
  std::vector<T> x_rev;  // reversed valid prefix fed to the backward pass
};

// x: [t_max_or_more, input] with `true_length` valid steps. Output is
// concat(h_forward(final), h_backward(final)) of size 2H. Padding rows are
// never read.
template <typename T>
void bilstm_forward(std::span<const T> x, std::int32_t true_length, const LstmParams<T>& fwd,
                    const LstmParams<T>& bwd, const T* rec_mask_fwd, const T* rec_mask_bwd,
                    BiLstmTrace<T>* trace, std::span<T> out) {
  const std::int32_t D = fwd.input, H = fwd.hidden;
  if (true_length < 1) throw std::invalid_argument("bilstm: true_length must be >= 1");
  std::vector<T> x_rev(static_cast<std::size_t>(true_length) * D);
  for (std::int32_t t = 0; t < true_length; ++t) {
    std::copy(x.begin() + static_cast<std::size_t>(true_length - 1 - t) * D,
              x.begin() + static_cast<std::size_t>(true_length - t) * D,
              x_rev.begin() + static_cast<std::size_t>(t) * D);
  }
  lstm_forward<T>(std::span<const T>(x.data(), static_cast<std::size_t>(true_length) * D),
                  true_length, fwd, rec_mask_fwd, trace ? &trace->fwd : nullptr,
                  out.subspan(0, static_cast<std::size_t>(H)));
  lstm_forward<T>(std::span<const T>(x_rev.data(), x_rev.size()), true_length, bwd, rec_mask_bwd,
                  trace ? &trace->bwd : nullptr,
                  out.subspan(static_cast<std::size_t>(H), static_cast<std::size_t>(H)));
  if (trace) trace->x_rev = std::move(x_rev);
}

// dout: [2H]. dx covers the valid prefix [true_length, input].
template <typename T>
void bilstm_backward(std::span<const T> x, std::int32_t true_length, const LstmParams<T>& fwd,
                     const LstmParams<T>& bwd, const T* rec_mask_fwd, const T* rec_mask_bwd,
                     const BiLstmTrace<T>& trace, std::span<const T> dout, LstmParams<T>& dfwd,
                     LstmParams<T>& dbwd, std::span<T> dx) {
  const std::int32_t D = fwd.input, H = fwd.hidden;
  lstm_backward<T>(std::span<const T>(x.data(), static_cast<std::size_t>(true_length) * D), fwd,
                   rec_mask_fwd, trace.fwd, dout.subspan(0, static_cast<std::size_t>(H)), dfwd,
                   dx);
  std::vector<T> dx_rev(static_cast<std::size_t>(true_length) * D, T(0));
  lstm_backward<T>(std::span<const T>(trace.x_rev.data(), trace.x_rev.size()), bwd, rec_mask_bwd,
                   trace.bwd, dout.subspan(static_cast<std::size_t>(H), static_cast<std::size_t>(H)),
                   dbwd, std::span<T>(dx_rev));
  for (std::int32_t t = 0; t < true_length; ++t) {
    T* dst = dx.data() + static_cast<std::size_t>(true_length - 1 - t) * D;
    const T* src = dx_rev.data() + static_cast<std::size_t>(t) * D;
    for (std::int32_t a = 0; a < D; ++a) dst[a] += src[a];
  }
}

// ---------------------------------------------------------------------------
// Dense layer
// ---------------------------------------------------------------------------

enum class Activation { kNone, kRelu, kSoftmax };

// x: [in], w: [in, out] row-major, b: [out].
template <typename T>
void dense_forward(std::span<const T> x, std::span<const T> w, std::span<const T> b,
                   std::int32_t in, std::int32_t out, Activation act, std::span<T> y) {
  if (static_cast<std::int32_t>(x.size()) != in ||
      static_cast<std::int32_t>(w.size()) != in * out ||
      static_cast<std::int32_t>(b.size()) != out) {
    throw std::invalid_argument("dense: shape mismatch");
  }
  for (std::int32_t j = 0; j < out; ++j) y[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)];
  for (std::int32_t i = 0; i < in; ++i) {
    const T xv = x[static_cast<std::size_t>(i)];
    if (xv == T(0)) continue;
    const T* wrow = w.data() + static_cast<std::size_t>(i) * out;
    for (std::int32_t j = 0; j < out; ++j) y[static_cast<std::size_t>(j)] += xv * wrow[j];
  }
  switch (act) {
    case Activation::kNone:
      break;
    case Activation::kRelu:
      for (std::int32_t j = 0; j < out; ++j) {
        y[static_cast<std::size_t>(j)] = std::max(y[static_cast<std::size_t>(j)], T(0));
      }
      break;
    case Activation::kSoftmax: {
      T mx = y[0];
      for (std::int32_t j = 1; j < out; ++j) mx = std::max(mx, y[static_cast<std::size_t>(j)]);
      T sum = T(0);
      for (std::int32_t j = 0; j < out; ++j) {
        T e = std::exp(y[static_cast<std::size_t>(j)] - mx);
        y[static_cast<std::size_t>(j)] = e;
        sum += e;
      }
      for (std::int32_t j = 0; j < out; ++j) y[static_cast<std::size_t>(j)] /= sum;
      break;
    }
  }
}

// dy is the gradient w.r.t. the activated output y. Accumulates into
// dw/db/dx.
template <typename T>
void dense_backward(std::span<const T> x, std::span<const T> w, std::int32_t in, std::int32_t out,
                    Activation act, std::span<const T> y, std::span<const T> dy, std::span<T> dw,
                    std::span<T> db, std::span<T> dx) {
  std::vector<T> dpre(static_cast<std::size_t>(out));
  switch (act) {
    case Activation::kNone:
      std::copy(dy.begin(), dy.end(), dpre.begin());
      break;
    case Activation::kRelu:
      for (std::int32_t j = 0; j < out; ++j) {
        dpre[static_cast<std::size_t>(j)] =
            y[static_cast<std::size_t>(j)] > T(0) ? dy[static_cast<std::size_t>(j)] : T(0);
      }
      break;
    case Activation::kSoftmax: {
      T dot = T(0);
      for (std::int32_t j = 0; j < out; ++j) {
        dot += dy[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
      }
      for (std::int32_t j = 0; j < out; ++j) {
        dpre[static_cast<std::size_t>(j)] =
            y[static_cast<std::size_t>(j)] * (dy[static_cast<std::size_t>(j)] - dot);
      }
      break;
    }
  }
  for (std::int32_t i = 0; i < in; ++i) {
    const T xv = x[static_cast<std::size_t>(i)];
    const T* wrow = w.data() + static_cast<std::size_t>(i) * out;
    T* dwrow = dw.data() + static_cast<std::size_t>(i) * out;
    T acc = T(0);
    for (std::int32_t j = 0; j < out; ++j) {
      dwrow[j] += xv * dpre[static_cast<std::size_t>(j)];
      acc += wrow[j] * dpre[static_cast<std::size_t>(j)];
    }
    dx[static_cast<std::size_t>(i)] += acc;
  }
  for (std::int32_t j = 0; j < out; ++j) {
    db[static_cast<std::size_t>(j)] += dpre[static_cast<std::size_t>(j)];
  }
}

// ---------------------------------------------------------------------------
// Cross-entropy
// ---------------------------------------------------------------------------

inline constexpr double kProbFloor = 1e-12;

// probs must come from a softmax. Returns -log(probs[label]) with a floor
// inside the log; dprobs (when non-null) gets the gradient added.
template <typename T>
T cross_entropy(std::span<const T> probs, std::int32_t label, std::span<T> dprobs = {}) {
  if (label < 0 || label >= static_cast<std::int32_t>(probs.size())) {
    throw std::invalid_argument("cross_entropy: label out of range");
  }
  const T p = std::max(probs[static_cast<std::size_t>(label)], static_cast<T>(kProbFloor));
  if (!dprobs.empty()) dprobs[static_cast<std::size_t>(label)] += -T(1) / p;
  return -std::log(p);
}

// ---------------------------------------------------------------------------
// Dropout (inverted)
// ---------------------------------------------------------------------------

// mask entries are 0 or 1/(1-p_drop); applying the mask during training
// keeps inference a plain forward pass.
template <typename T>
void sample_dropout_mask(Rng& rng, double p_drop, std::span<T> mask) {
  const T keep_scale = static_cast<T>(1.0 / (1.0 - p_drop));
  for (auto& m : mask) m = rng.uniform() < p_drop ? T(0) : keep_scale;
}

// ---------------------------------------------------------------------------
// Adam
// ---------------------------------------------------------------------------

// Named view of one trainable tensor, the unit Adam and the serializer
// operate on.
template <typename T>
struct ParamRef {
  std::string name;
  std::vector<T>* data = nullptr;
  std::vector<std::size_t> shape;

  std::size_t size() const { return data->size(); }
};

struct AdamConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Moments mirror the registered parameter list; `t` counts optimizer steps.
template <typename T>
class AdamState {
 public:
  AdamState(const std::vector<ParamRef<T>>& params, AdamConfig cfg) : cfg_(cfg) {
    m_.reserve(params.size());
    v_.reserve(params.size());
    for (const auto& p : params) {
      m_.emplace_back(p.size(), T(0));
      v_.emplace_back(p.size(), T(0));
    }
  }

  // Standard bias-corrected update. Throws on a non-finite gradient,
  // naming the offending parameter.
  void step(const std::vector<ParamRef<T>>& params, const std::vector<ParamRef<T>>& grads) {
    if (params.size() != m_.size() || grads.size() != m_.size()) {
      throw std::invalid_argument("adam: parameter/gradient registration mismatch");
    }
    ++t_;
    const T b1 = static_cast<T>(cfg_.beta1), b2 = static_cast<T>(cfg_.beta2);
    const T corr1 = static_cast<T>(1.0 - std::pow(cfg_.beta1, static_cast<double>(t_)));
    const T corr2 = static_cast<T>(1.0 - std::pow(cfg_.beta2, static_cast<double>(t_)));
    const T lr = static_cast<T>(cfg_.lr), eps = static_cast<T>(cfg_.epsilon);
    for (std::size_t pi = 0; pi < params.size(); ++pi) {
      auto& p = *params[pi].data;
      const auto& g = *grads[pi].data;
      if (p.size() != m_[pi].size() || g.size() != m_[pi].size()) {
        throw std::invalid_argument("adam: shape mismatch for " + params[pi].name);
      }
      auto& m = m_[pi];
      auto& v = v_[pi];
      for (std::size_t k = 0; k < p.size(); ++k) {
        const T gk = g[k];
        if (!std::isfinite(static_cast<double>(gk))) {
          throw std::runtime_error("adam: non-finite gradient in " + params[pi].name);
        }
        m[k] = b1 * m[k] + (T(1) - b1) * gk;
        v[k] = b2 * v[k] + (T(1) - b2) * gk * gk;
        const T mhat = m[k] / corr1;
        const T vhat = v[k] / corr2;
        p[k] -= lr * mhat / (std::sqrt(vhat) + eps);
      }
    }
  }

  std::uint64_t steps_taken() const { return t_; }

 private:
  AdamConfig cfg_;
  std::uint64_t t_ = 0;
  std::vector<std::vector<T>> m_, v_;
};

// ---------------------------------------------------------------------------
// Weight init
// ---------------------------------------------------------------------------

template <typename T>
void glorot_uniform(Rng& rng, std::span<T> w, std::int32_t fan_in, std::int32_t fan_out) {
  const double limit = std::sqrt(6.0 / (fan_in + fan_out));
  for (auto& x : w) x = static_cast<T>(rng.uniform(-limit, limit));
}

// Glorot kernels, zero biases with forget-gate bias 1.
template <typename T>
void init_lstm(Rng& rng, LstmParams<T>& p) {
  p.resize();
  glorot_uniform<T>(rng, p.wx, p.input, 4 * p.hidden);
  glorot_uniform<T>(rng, p.wh, p.hidden, 4 * p.hidden);
  for (std::int32_t j = 0; j < p.hidden; ++j) {
    p.b[static_cast<std::size_t>(p.hidden + j)] = T(1);
  }
}

// Keras-style receptive-field fans for the conv kernel.
template <typename T>
void init_conv(Rng& rng, ConvBlock<T>& conv) {
  conv.resize();
  glorot_uniform<T>(rng, conv.w, conv.kernel * conv.in_dim, conv.kernel * conv.filters);
}

}  // namespace lidsnet::nn
