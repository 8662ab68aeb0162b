// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ttseval {

// One step of a discriminator stack. Only the fields for the given kind
// are meaningful.
struct LayerSpec {
  enum class Kind { kConv1d, kLeakyRelu, kAvgPool1d };
  Kind kind = Kind::kConv1d;

  // conv1d
  int in_channels = 1;
  int out_channels = 1;
  int kernel = 1;
  int stride = 1;
  int dilation = 1;
  int groups = 1;
  int padding = 0;
  std::string weight_name;
  std::string bias_name;

  // leaky_relu
  double slope = 0.2;

  static LayerSpec conv1d(int in, int out, int kernel, std::string weight,
                          std::string bias, int stride = 1, int dilation = 1,
                          int groups = 1, int padding = 0);
  static LayerSpec leaky_relu(double slope);
  static LayerSpec avg_pool1d(int kernel, int stride, int padding = 0);
};

struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<float> values;

  std::size_t element_count() const {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
  }
};

// Declarative discriminator topology plus named weight tensors, loaded
// from an NTB container. A bundle with several discriminators feeds
// discriminator k the input downsampled k times by inter_scale_pool.
struct DiscriminatorBundle {
  std::string name;
  std::vector<std::vector<LayerSpec>> discriminators;
  bool has_inter_scale_pool = false;
  LayerSpec inter_scale_pool;  // kind == kAvgPool1d when present
  std::map<std::string, Tensor> tensors;

  // Checks every structural invariant: layer parameter ranges, tensor
  // presence and shapes, channel chaining from 1 input channel to a
  // 1-channel final conv, and pool presence for multi-scale bundles.
  // Throws ValidationError naming the offending layer or tensor.
  void validate() const;
};

// NTB container: "NTB1" magic, little-endian u32 JSON header length, the
// UTF-8 JSON header, then a blob of little-endian float32 values at the
// element offsets stated per tensor.
DiscriminatorBundle load_bundle(const std::string& path);
void save_bundle(const std::string& path, const DiscriminatorBundle& bundle);

}  // namespace ttseval
