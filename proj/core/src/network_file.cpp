// Copyright 2026 The neurofault Authors
// SPDX-License-Identifier: Apache-2.0

#include "neurofault/io/network_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "neurofault/error.hpp"
#include "neurofault/fault/binary32.hpp"

namespace neurofault::io {
namespace {

// Float-typed JSON so the decimal columns print the shortest binary32
// round-trip representation instead of 17 significant double digits.
using Json = nlohmann::basic_json<std::map, std::vector, std::string, bool, std::int64_t,
                                  std::uint64_t, float>;

std::size_t get_count(const Json& obj, const char* key, std::size_t layer) {
  const std::string where = "layer " + std::to_string(layer);
  if (!obj.contains(key) || !obj[key].is_number_unsigned()) {
    raise(ErrorKind::Format, where + ": missing or non-integer '" + key + "'");
  }
  return obj[key].get<std::size_t>();
}

std::vector<float> parse_hex_array(const Json& arr, const std::string& where) {
  if (!arr.is_array()) raise(ErrorKind::Format, where + ": expected an array");
  std::vector<float> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) raise(ErrorKind::Format, where + ": expected hex strings");
    out.push_back(fault::from_hex(item.get_ref<const std::string&>()));
  }
  return out;
}

}  // namespace

std::string network_to_json(const nn::Network& net) {
  Json layers = Json::array();
  for (const nn::Layer& layer : net.layers()) {
    Json weights_hex = Json::array();
    Json weights = Json::array();
    for (std::size_t i = 0; i < layer.out_count; ++i) {
      Json hex_row = Json::array();
      Json dec_row = Json::array();
      for (float w : layer.row(i)) {
        hex_row.push_back(fault::to_hex(w));
        dec_row.push_back(w);
      }
      weights_hex.push_back(std::move(hex_row));
      weights.push_back(std::move(dec_row));
    }
    Json biases_hex = Json::array();
    Json biases = Json::array();
    for (float b : layer.biases) {
      biases_hex.push_back(fault::to_hex(b));
      biases.push_back(b);
    }
    Json record;
    record["in"] = layer.in_count;
    record["out"] = layer.out_count;
    record["activation"] = std::string(nn::to_string(layer.activation));
    record["weights_hex"] = std::move(weights_hex);
    record["biases_hex"] = std::move(biases_hex);
    record["weights"] = std::move(weights);
    record["biases"] = std::move(biases);
    layers.push_back(std::move(record));
  }
  Json doc;
  doc["version"] = kNetworkFormatVersion;
  doc["input_dim"] = net.input_dim();
  doc["layers"] = std::move(layers);
  return doc.dump() + "\n";
}

nn::Network network_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Format, std::string("network file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer()) {
    raise(ErrorKind::Format, "network file lacks an integer 'version'");
  }
  const auto version = doc["version"].get<std::int64_t>();
  if (version != kNetworkFormatVersion) {
    raise(ErrorKind::UnsupportedVersion, "network file version " + std::to_string(version) +
                                             " (supported: " +
                                             std::to_string(kNetworkFormatVersion) + ")");
  }
  if (!doc.contains("input_dim") || !doc["input_dim"].is_number_unsigned()) {
    raise(ErrorKind::Format, "network file lacks 'input_dim'");
  }
  if (!doc.contains("layers") || !doc["layers"].is_array()) {
    raise(ErrorKind::Format, "network file lacks a 'layers' array");
  }

  std::vector<nn::Layer> layers;
  std::size_t index = 0;
  for (const auto& record : doc["layers"]) {
    const std::string where = "layer " + std::to_string(index);
    if (!record.is_object()) raise(ErrorKind::Format, where + ": expected an object");
    nn::Layer layer;
    layer.in_count = get_count(record, "in", index);
    layer.out_count = get_count(record, "out", index);
    if (!record.contains("activation") || !record["activation"].is_string()) {
      raise(ErrorKind::Format, where + ": missing 'activation'");
    }
    layer.activation = nn::parse_activation(record["activation"].get<std::string>());

    if (!record.contains("weights_hex") || !record["weights_hex"].is_array()) {
      raise(ErrorKind::Format, where + ": missing 'weights_hex'");
    }
    const auto& rows = record["weights_hex"];
    if (rows.size() != layer.out_count) {
      raise(ErrorKind::Consistency, where + ": " + std::to_string(rows.size()) +
                                        " weight rows for out=" + std::to_string(layer.out_count));
    }
    layer.weights.reserve(layer.in_count * layer.out_count);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::vector<float> row = parse_hex_array(rows[i], where + " row " + std::to_string(i));
      if (row.size() != layer.in_count) {
        raise(ErrorKind::Consistency, where + ": weight row " + std::to_string(i) + " has " +
                                          std::to_string(row.size()) + " entries, expected " +
                                          std::to_string(layer.in_count));
      }
      layer.weights.insert(layer.weights.end(), row.begin(), row.end());
    }
    if (!record.contains("biases_hex")) raise(ErrorKind::Format, where + ": missing 'biases_hex'");
    layer.biases = parse_hex_array(record["biases_hex"], where + " biases");
    if (layer.biases.size() != layer.out_count) {
      raise(ErrorKind::Consistency, where + ": " + std::to_string(layer.biases.size()) +
                                        " biases for out=" + std::to_string(layer.out_count));
    }
    layers.push_back(std::move(layer));
    ++index;
  }
  return nn::Network(doc["input_dim"].get<std::size_t>(), std::move(layers));
}

void save_network(const nn::Network& net, const std::filesystem::path& path) {
  const std::string text = network_to_json(net);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::Io, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) raise(ErrorKind::Io, "short write to " + path.string());
}

nn::Network load_network(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

}  // namespace neurofault::io
