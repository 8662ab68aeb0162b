// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/disc_net.hpp"

#include <cmath>
#include <string>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

// Channel-major feature map: data[c * length + t].
struct FeatureMap {
  int channels = 1;
  long length = 0;
  std::vector<double> data;

  double at(int c, long t) const {
    return data[static_cast<std::size_t>(c) * static_cast<std::size_t>(length) +
                static_cast<std::size_t>(t)];
  }
};

FeatureMap apply_conv1d(const FeatureMap& in, const LayerSpec& layer,
                        const Tensor& weight, const Tensor& bias) {
  const long out_len = conv1d_output_length(in.length, layer.kernel, layer.stride,
                                            layer.dilation, layer.padding);
  if (out_len < 1)
    throw EmptyInputError("conv1d: input too short for receptive field");

  FeatureMap out;
  out.channels = layer.out_channels;
  out.length = out_len;
  out.data.resize(static_cast<std::size_t>(out.channels) *
                  static_cast<std::size_t>(out_len));

  const int group_in = layer.in_channels / layer.groups;
  const int group_out = layer.out_channels / layer.groups;
  for (int oc = 0; oc < layer.out_channels; ++oc) {
    const int g = oc / group_out;
    for (long t = 0; t < out_len; ++t) {
      double acc = static_cast<double>(bias.values[static_cast<std::size_t>(oc)]);
      for (int ic = 0; ic < group_in; ++ic) {
        const int in_c = g * group_in + ic;
        for (int k = 0; k < layer.kernel; ++k) {
          const long pos = t * layer.stride + static_cast<long>(k) * layer.dilation -
                           layer.padding;
          if (pos < 0 || pos >= in.length) continue;  // zero padding
          const std::size_t w_idx =
              (static_cast<std::size_t>(oc) * static_cast<std::size_t>(group_in) +
               static_cast<std::size_t>(ic)) *
                  static_cast<std::size_t>(layer.kernel) +
              static_cast<std::size_t>(k);
          acc += static_cast<double>(weight.values[w_idx]) * in.at(in_c, pos);
        }
      }
      out.data[static_cast<std::size_t>(oc) * static_cast<std::size_t>(out_len) +
               static_cast<std::size_t>(t)] = acc;
    }
  }
  return out;
}

FeatureMap apply_avg_pool1d(const FeatureMap& in, const LayerSpec& layer) {
  const long out_len =
      (in.length + 2L * layer.padding - layer.kernel) / layer.stride + 1;
  if (out_len < 1)
    throw EmptyInputError("avg_pool1d: input too short for window");

  FeatureMap out;
  out.channels = in.channels;
  out.length = out_len;
  out.data.resize(static_cast<std::size_t>(out.channels) *
                  static_cast<std::size_t>(out_len));
  for (int c = 0; c < in.channels; ++c) {
    for (long t = 0; t < out_len; ++t) {
      double acc = 0.0;
      for (int k = 0; k < layer.kernel; ++k) {
        const long pos = t * layer.stride + k - layer.padding;
        if (pos >= 0 && pos < in.length) acc += in.at(c, pos);
      }
      // Mean over the full window; zero pads count toward the divisor.
      out.data[static_cast<std::size_t>(c) * static_cast<std::size_t>(out_len) +
               static_cast<std::size_t>(t)] = acc / layer.kernel;
    }
  }
  return out;
}

FeatureMap run_layers(const std::vector<LayerSpec>& layers,
                      const std::map<std::string, Tensor>& tensors,
                      FeatureMap fm) {
  for (const auto& layer : layers) {
    switch (layer.kind) {
      case LayerSpec::Kind::kConv1d: {
        const auto w = tensors.find(layer.weight_name);
        const auto b = tensors.find(layer.bias_name);
        if (w == tensors.end() || b == tensors.end())
          throw ValidationError("conv1d: missing tensor '" +
                                (w == tensors.end() ? layer.weight_name
                                                    : layer.bias_name) +
                                "'");
        fm = apply_conv1d(fm, layer, w->second, b->second);
        break;
      }
      case LayerSpec::Kind::kLeakyRelu:
        for (auto& v : fm.data) v = v >= 0.0 ? v : layer.slope * v;
        break;
      case LayerSpec::Kind::kAvgPool1d:
        fm = apply_avg_pool1d(fm, layer);
        break;
    }
  }
  return fm;
}

FeatureMap waveform_map(const Waveform& w) {
  FeatureMap fm;
  fm.channels = 1;
  fm.length = static_cast<long>(w.samples.size());
  fm.data = w.samples;
  return fm;
}

// Seeded deterministic uniform source (splitmix64) so preset bundles
// are bit-identical across platforms and standard libraries.
class UniformSource {
 public:
  explicit UniformSource(uint64_t seed) : state_(seed) {}

  double next_unit() {  // [0, 1)
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53;
  }

  float next_signed(double scale) {
    return static_cast<float>((2.0 * next_unit() - 1.0) * scale);
  }

 private:
  uint64_t state_;
};

void add_random_conv(DiscriminatorBundle& bundle, std::vector<LayerSpec>& layers,
                     UniformSource& rng, const std::string& prefix, int in,
                     int out, int kernel, int stride, int dilation, int groups,
                     int padding) {
  const std::string w_name = prefix + ".weight";
  const std::string b_name = prefix + ".bias";
  layers.push_back(LayerSpec::conv1d(in, out, kernel, w_name, b_name, stride,
                                     dilation, groups, padding));
  Tensor weight;
  weight.shape = {static_cast<std::size_t>(out),
                  static_cast<std::size_t>(in / groups),
                  static_cast<std::size_t>(kernel)};
  const double scale = 1.0 / std::sqrt(static_cast<double>(in / groups) * kernel);
  weight.values.resize(weight.element_count());
  for (auto& v : weight.values) v = rng.next_signed(scale);
  Tensor bias;
  bias.shape = {static_cast<std::size_t>(out)};
  bias.values.resize(static_cast<std::size_t>(out));
  for (auto& v : bias.values) v = rng.next_signed(0.05);
  bundle.tensors.emplace(w_name, std::move(weight));
  bundle.tensors.emplace(b_name, std::move(bias));
}

}  // namespace

long conv1d_output_length(long length, int kernel, int stride, int dilation,
                          int padding) {
  const long numer = length + 2L * padding -
                     static_cast<long>(dilation) * (kernel - 1) - 1;
  if (numer < 0) return 0;
  return numer / stride + 1;
}

DiscriminatorOutput run_discriminator(const std::vector<LayerSpec>& layers,
                                      const std::map<std::string, Tensor>& tensors,
                                      const Waveform& w) {
  FeatureMap fm = run_layers(layers, tensors, waveform_map(w));
  if (fm.channels != 1)
    throw ValidationError("run_discriminator: final layer must output 1 channel");
  DiscriminatorOutput out;
  out.y_hat = std::move(fm.data);
  return out;
}

double disc_score(const DiscriminatorOutput& y_hat) {
  if (y_hat.y_hat.empty()) throw EmptyInputError("disc_score: empty output");
  double loss = 0.0;
  for (double y : y_hat.y_hat) loss += (y - 1.0) * (y - 1.0);
  loss /= static_cast<double>(y_hat.y_hat.size());
  return 1.0 - loss;
}

double mean_score(const std::vector<double>& scores) {
  if (scores.empty()) throw EmptyInputError("mean_score: empty score list");
  double acc = 0.0;
  for (double s : scores) acc += s;
  return acc / static_cast<double>(scores.size());
}

double score_waveform(const DiscriminatorBundle& bundle, const Waveform& w) {
  std::vector<double> scores;
  scores.reserve(bundle.discriminators.size());
  FeatureMap scale_input = waveform_map(w);
  for (std::size_t d = 0; d < bundle.discriminators.size(); ++d) {
    if (d > 0) scale_input = apply_avg_pool1d(scale_input, bundle.inter_scale_pool);
    FeatureMap fm = run_layers(bundle.discriminators[d], bundle.tensors, scale_input);
    DiscriminatorOutput out;
    out.y_hat = std::move(fm.data);
    scores.push_back(disc_score(out));
  }
  return mean_score(scores);
}

DiscriminatorBundle make_preset_bundle(PresetStyle style, uint64_t seed) {
  DiscriminatorBundle bundle;
  UniformSource rng(seed);
  if (style == PresetStyle::kParallelWaveGan) {
    bundle.name = "PGAN";
    std::vector<LayerSpec> layers;
    const int dilations[10] = {1, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    for (int l = 0; l < 10; ++l) {
      const int in = l == 0 ? 1 : 64;
      const int out = l == 9 ? 1 : 64;
      const int dilation = dilations[l];
      // same-length padding for kernel 3: one dilation span per side
      add_random_conv(bundle, layers, rng, "d0.l" + std::to_string(l), in, out,
                      3, 1, dilation, 1, dilation);
      if (l != 9) layers.push_back(LayerSpec::leaky_relu(0.2));
    }
    bundle.discriminators.push_back(std::move(layers));
  } else {
    bundle.name = "MelGAN";
    bundle.has_inter_scale_pool = true;
    bundle.inter_scale_pool = LayerSpec::avg_pool1d(4, 2, 1);
    for (int d = 0; d < 3; ++d) {
      std::vector<LayerSpec> layers;
      const std::string p = "d" + std::to_string(d) + ".l";
      add_random_conv(bundle, layers, rng, p + "0", 1, 16, 15, 1, 1, 1, 7);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "1", 16, 64, 41, 4, 1, 4, 20);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "2", 64, 256, 41, 4, 1, 16, 20);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "3", 256, 1024, 41, 4, 1, 64, 20);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "4", 1024, 1024, 41, 4, 1, 256, 20);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "5", 1024, 1024, 5, 1, 1, 1, 2);
      layers.push_back(LayerSpec::leaky_relu(0.2));
      add_random_conv(bundle, layers, rng, p + "6", 1024, 1, 3, 1, 1, 1, 1);
      bundle.discriminators.push_back(std::move(layers));
    }
  }
  bundle.validate();
  return bundle;
}

}  // namespace ttseval
