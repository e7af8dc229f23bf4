#pragma once

#include <string>
#include <vector>

#include "loclab/core.hpp"

namespace loclab {

/// A permutation of {0,...,degree-1}, stored as its image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2)(3 4)".
  /// "()" or an empty string denotes the identity.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  Perm compose(const Perm& other) const;  // this then other
  Perm inverse() const;
  bool is_identity() const;

  /// Cycle notation with 1-based points.
  std::string to_cycles() const;

  const std::vector<int>& images() const { return images_; }
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace loclab
