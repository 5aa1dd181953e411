#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace relkit {

/// A finite, named set of labelled elements. Copies share storage.
///
/// Two carriers compare equal when their names and sizes agree; labels are
/// presentation only. Labels must be unique, non-empty, and free of
/// whitespace and '#', so that every carrier survives the text format.
class Carrier {
 public:
  Carrier();
  Carrier(std::string name, std::vector<std::string> labels);

  /// Carrier with labels "0" .. "n-1".
  static Carrier numbered(std::string name, std::size_t n);

  const std::string& name() const { return data_->name; }
  std::size_t size() const { return data_->labels.size(); }
  bool empty() const { return data_->labels.empty(); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }

  std::optional<std::size_t> find(std::string_view label) const;

  /// Same name and identical label sequence.
  bool identical(const Carrier& other) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.data_ == b.data_ || (a.name() == b.name() && a.size() == b.size());
  }

  /// "name(size)", used in diagnostics.
  std::string describe() const;

 private:
  struct Data {
    std::string name;
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

bool is_valid_token(std::string_view s);

}  // namespace relkit
