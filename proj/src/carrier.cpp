#include "relkit/carrier.hpp"

#include <algorithm>

#include "relkit/errors.hpp"

namespace relkit {

bool is_valid_token(std::string_view s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '#' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

Carrier::Carrier() : Carrier("_", {}) {}

Carrier::Carrier(std::string name, std::vector<std::string> labels) {
  if (!is_valid_token(name)) throw Error("invalid carrier name '" + name + "'");
  auto data = std::make_shared<Data>();
  data->name = std::move(name);
  data->index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!is_valid_token(labels[i]))
      throw Error("carrier " + data->name + ": invalid label '" + labels[i] + "'");
    if (!data->index.emplace(labels[i], i).second)
      throw Error("carrier " + data->name + ": duplicate label '" + labels[i] + "'");
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

Carrier Carrier::numbered(std::string name, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Carrier(std::move(name), std::move(labels));
}

std::optional<std::size_t> Carrier::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool Carrier::identical(const Carrier& other) const {
  return data_ == other.data_ || (name() == other.name() && labels() == other.labels());
}

std::string Carrier::describe() const { return name() + "(" + std::to_string(size()) + ")"; }

}  // namespace relkit
