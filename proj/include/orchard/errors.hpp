#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orchard {

/// Malformed arguments: bad subsets, out-of-range ranks, shape mismatches.
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation requested on the wrong symmetry kind.
class kind_error : public input_error {
 public:
  using input_error::input_error;
};

/// A file could not be parsed. `where()` names the location.
class parse_error : public input_error {
 public:
  parse_error(std::string where, const std::string& what)
      : input_error(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// A point configuration has a (d+1)-subset with zero orientation.
class degeneracy_error : public input_error {
 public:
  degeneracy_error(std::vector<int> subset, const std::string& what)
      : input_error(what), subset_(std::move(subset)) {}

  /// 1-based point indices of the offending subset, increasing.
  const std::vector<int>& subset() const noexcept { return subset_; }

 private:
  std::vector<int> subset_;
};

/// The relation is not defined for this (n, d), i.e. n < d + 2.
class unsupported_configuration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A self-check that a theorem guarantees failed. Never expected to fire.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orchard
