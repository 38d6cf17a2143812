#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace framize {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Ordered list of scalar indeterminates.  The position of a name fixes its
/// significance in the monomial order, so the list must stay fixed for the
/// lifetime of any value built over it.
class ParameterField {
public:
  explicit ParameterField(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j) {
        if (names_[i] == names_[j])
          throw std::invalid_argument("duplicate indeterminate '" + names_[i] + "'");
      }
      if (names_[i] == "y0")
        throw std::invalid_argument("y0 is a reserved token, not an indeterminate");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const ParameterField& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
};

using FieldPtr = std::shared_ptr<const ParameterField>;

inline FieldPtr make_field(std::vector<std::string> names) {
  return std::make_shared<const ParameterField>(std::move(names));
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace framize
