// Copyright 2026 The ttseval Authors
// Licensed under the Apache License, Version 2.0

#include "ttseval/bundle.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttseval/errors.hpp"

namespace ttseval {

namespace {

using nlohmann::ordered_json;

const char kMagic[4] = {'N', 'T', 'B', '1'};

std::string kind_name(LayerSpec::Kind kind) {
  switch (kind) {
    case LayerSpec::Kind::kConv1d: return "conv1d";
    case LayerSpec::Kind::kLeakyRelu: return "leaky_relu";
    default: return "avg_pool1d";
  }
}

ordered_json layer_to_json(const LayerSpec& layer) {
  ordered_json j;
  j["kind"] = kind_name(layer.kind);
  switch (layer.kind) {
    case LayerSpec::Kind::kConv1d:
      j["in_channels"] = layer.in_channels;
      j["out_channels"] = layer.out_channels;
      j["kernel"] = layer.kernel;
      j["stride"] = layer.stride;
      j["dilation"] = layer.dilation;
      j["groups"] = layer.groups;
      j["padding"] = layer.padding;
      j["weight"] = layer.weight_name;
      j["bias"] = layer.bias_name;
      break;
    case LayerSpec::Kind::kLeakyRelu:
      j["slope"] = layer.slope;
      break;
    case LayerSpec::Kind::kAvgPool1d:
      j["kernel"] = layer.kernel;
      j["stride"] = layer.stride;
      j["padding"] = layer.padding;
      break;
  }
  return j;
}

LayerSpec layer_from_json(const ordered_json& j) {
  LayerSpec layer;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "conv1d") {
    layer.kind = LayerSpec::Kind::kConv1d;
    layer.in_channels = j.at("in_channels").get<int>();
    layer.out_channels = j.at("out_channels").get<int>();
    layer.kernel = j.at("kernel").get<int>();
    layer.stride = j.at("stride").get<int>();
    layer.dilation = j.at("dilation").get<int>();
    layer.groups = j.at("groups").get<int>();
    layer.padding = j.at("padding").get<int>();
    layer.weight_name = j.at("weight").get<std::string>();
    layer.bias_name = j.at("bias").get<std::string>();
  } else if (kind == "leaky_relu") {
    layer.kind = LayerSpec::Kind::kLeakyRelu;
    layer.slope = j.at("slope").get<double>();
  } else if (kind == "avg_pool1d") {
    layer.kind = LayerSpec::Kind::kAvgPool1d;
    layer.kernel = j.at("kernel").get<int>();
    layer.stride = j.at("stride").get<int>();
    layer.padding = j.at("padding").get<int>();
  } else {
    throw FormatError("unknown layer kind: " + kind);
  }
  return layer;
}

void check(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

LayerSpec LayerSpec::conv1d(int in, int out, int kernel, std::string weight,
                            std::string bias, int stride, int dilation,
                            int groups, int padding) {
  LayerSpec layer;
  layer.kind = Kind::kConv1d;
  layer.in_channels = in;
  layer.out_channels = out;
  layer.kernel = kernel;
  layer.stride = stride;
  layer.dilation = dilation;
  layer.groups = groups;
  layer.padding = padding;
  layer.weight_name = std::move(weight);
  layer.bias_name = std::move(bias);
  return layer;
}

LayerSpec LayerSpec::leaky_relu(double slope) {
  LayerSpec layer;
  layer.kind = Kind::kLeakyRelu;
  layer.slope = slope;
  return layer;
}

LayerSpec LayerSpec::avg_pool1d(int kernel, int stride, int padding) {
  LayerSpec layer;
  layer.kind = Kind::kAvgPool1d;
  layer.kernel = kernel;
  layer.stride = stride;
  layer.padding = padding;
  return layer;
}

void DiscriminatorBundle::validate() const {
  check(!discriminators.empty(), "bundle '" + name + "': no discriminators");
  check(discriminators.size() == 1 || has_inter_scale_pool,
        "bundle '" + name + "': multi-scale bundle needs inter_scale_pool");
  if (has_inter_scale_pool) {
    check(inter_scale_pool.kind == LayerSpec::Kind::kAvgPool1d,
          "bundle '" + name + "': inter_scale_pool must be avg_pool1d");
    check(inter_scale_pool.kernel >= 1 && inter_scale_pool.stride >= 1 &&
              inter_scale_pool.padding >= 0,
          "bundle '" + name + "': bad inter_scale_pool parameters");
  }

  for (std::size_t d = 0; d < discriminators.size(); ++d) {
    const auto& layers = discriminators[d];
    const std::string where = "bundle '" + name + "' discriminator " + std::to_string(d);
    check(!layers.empty(), where + ": empty layer list");
    int channels = 1;  // waveform input
    int last_conv_out = -1;
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const auto& layer = layers[l];
      const std::string at = where + " layer " + std::to_string(l);
      switch (layer.kind) {
        case LayerSpec::Kind::kConv1d: {
          check(layer.in_channels >= 1 && layer.out_channels >= 1 &&
                    layer.kernel >= 1 && layer.stride >= 1 &&
                    layer.dilation >= 1 && layer.groups >= 1 && layer.padding >= 0,
                at + ": conv parameter out of range");
          check(layer.in_channels % layer.groups == 0,
                at + ": in_channels not divisible by groups");
          check(layer.out_channels % layer.groups == 0,
                at + ": out_channels not divisible by groups");
          check(layer.in_channels == channels,
                at + ": expects " + std::to_string(layer.in_channels) +
                    " input channels, gets " + std::to_string(channels));
          const auto w = tensors.find(layer.weight_name);
          check(w != tensors.end(), at + ": missing tensor '" + layer.weight_name + "'");
          const std::vector<std::size_t> expect = {
              static_cast<std::size_t>(layer.out_channels),
              static_cast<std::size_t>(layer.in_channels / layer.groups),
              static_cast<std::size_t>(layer.kernel)};
          check(w->second.shape == expect,
                at + ": tensor '" + layer.weight_name + "' shape mismatch");
          const auto b = tensors.find(layer.bias_name);
          check(b != tensors.end(), at + ": missing tensor '" + layer.bias_name + "'");
          check(b->second.shape ==
                    std::vector<std::size_t>{static_cast<std::size_t>(layer.out_channels)},
                at + ": tensor '" + layer.bias_name + "' shape mismatch");
          channels = layer.out_channels;
          last_conv_out = layer.out_channels;
          break;
        }
        case LayerSpec::Kind::kLeakyRelu:
          break;
        case LayerSpec::Kind::kAvgPool1d:
          check(layer.kernel >= 1 && layer.stride >= 1 && layer.padding >= 0,
                at + ": pool parameter out of range");
          break;
      }
    }
    check(last_conv_out == 1, where + ": final layer must output exactly 1 channel");
  }

  for (const auto& [tensor_name, tensor] : tensors)
    check(tensor.element_count() == tensor.values.size(),
          "bundle '" + name + "': tensor '" + tensor_name +
              "' declares " + std::to_string(tensor.element_count()) +
              " elements but holds " + std::to_string(tensor.values.size()));
}

DiscriminatorBundle load_bundle(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open bundle: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string bytes = buf.str();

  if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("bad bundle magic: " + path);
  uint32_t header_len = 0;
  std::memcpy(&header_len, bytes.data() + 4, 4);
  if (8 + static_cast<std::size_t>(header_len) > bytes.size())
    throw FormatError("truncated bundle header: " + path);

  ordered_json header;
  try {
    header = ordered_json::parse(bytes.substr(8, header_len));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bundle header is not valid JSON: " + std::string(e.what()));
  }

  const std::size_t blob_start = 8 + header_len;
  const std::size_t blob_elements = (bytes.size() - blob_start) / 4;

  DiscriminatorBundle bundle;
  try {
    bundle.name = header.at("name").get<std::string>();
    for (const auto& disc : header.at("discriminators")) {
      std::vector<LayerSpec> layers;
      for (const auto& layer : disc) layers.push_back(layer_from_json(layer));
      bundle.discriminators.push_back(std::move(layers));
    }
    if (header.contains("inter_scale_pool") && !header["inter_scale_pool"].is_null()) {
      auto pool = header["inter_scale_pool"];
      pool["kind"] = "avg_pool1d";
      bundle.inter_scale_pool = layer_from_json(pool);
      bundle.has_inter_scale_pool = true;
    }
    for (const auto& t : header.at("tensors")) {
      const auto tensor_name = t.at("name").get<std::string>();
      if (t.at("dtype").get<std::string>() != "f32")
        throw FormatError("tensor '" + tensor_name + "': only dtype f32 is supported");
      Tensor tensor;
      for (const auto& d : t.at("shape"))
        tensor.shape.push_back(d.get<std::size_t>());
      const auto offset = t.at("offset").get<std::size_t>();
      const std::size_t count = tensor.element_count();
      if (offset + count > blob_elements)
        throw ValidationError("tensor '" + tensor_name + "' extends past blob end");
      tensor.values.resize(count);
      std::memcpy(tensor.values.data(), bytes.data() + blob_start + offset * 4,
                  count * 4);
      if (!bundle.tensors.emplace(tensor_name, std::move(tensor)).second)
        throw ValidationError("duplicate tensor name '" + tensor_name + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bundle header schema error: " + std::string(e.what()));
  }

  bundle.validate();
  return bundle;
}

void save_bundle(const std::string& path, const DiscriminatorBundle& bundle) {
  ordered_json header;
  header["name"] = bundle.name;
  header["discriminators"] = ordered_json::array();
  for (const auto& disc : bundle.discriminators) {
    ordered_json layers = ordered_json::array();
    for (const auto& layer : disc) layers.push_back(layer_to_json(layer));
    header["discriminators"].push_back(layers);
  }
  if (bundle.has_inter_scale_pool) {
    ordered_json pool = layer_to_json(bundle.inter_scale_pool);
    pool.erase("kind");
    header["inter_scale_pool"] = pool;
  } else {
    header["inter_scale_pool"] = nullptr;
  }

  header["tensors"] = ordered_json::array();
  std::size_t offset = 0;
  std::string blob;
  for (const auto& [tensor_name, tensor] : bundle.tensors) {
    ordered_json t;
    t["name"] = tensor_name;
    t["shape"] = tensor.shape;
    t["offset"] = offset;
    t["dtype"] = "f32";
    header["tensors"].push_back(t);
    const std::size_t bytes = tensor.values.size() * 4;
    const std::size_t old = blob.size();
    blob.resize(old + bytes);
    std::memcpy(blob.data() + old, tensor.values.data(), bytes);
    offset += tensor.values.size();
  }

  const std::string header_str = header.dump();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open bundle for writing: " + path);
  out.write(kMagic, 4);
  const auto len = static_cast<uint32_t>(header_str.size());
  char len_le[4] = {static_cast<char>(len & 0xFF),
                    static_cast<char>((len >> 8) & 0xFF),
                    static_cast<char>((len >> 16) & 0xFF),
                    static_cast<char>((len >> 24) & 0xFF)};
  out.write(len_le, 4);
  out.write(header_str.data(), static_cast<std::streamsize>(header_str.size()));
  out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out) throw FormatError("short write: " + path);
}

}  // namespace ttseval
