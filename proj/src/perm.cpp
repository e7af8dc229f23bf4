#include "loclab/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace loclab {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw Error("invalid-permutation", "image array is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error("parse-error", "expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw Error("parse-error", "unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("parse-error", "bad character in cycle: " + text);
      int pt = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        pt = pt * 10 + (text[i++] - '0');
      if (pt < 1 || pt > degree)
        throw Error("parse-error",
                    "point " + std::to_string(pt) + " out of range 1.." +
                        std::to_string(degree));
      cycle.push_back(pt - 1);
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& other) const {
  if (degree() != other.degree())
    throw Error("degree-mismatch", "cannot compose permutations of different degree");
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[x] = other.images_[images_[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (int x = 0; x < degree(); ++x) img[images_[x]] = x;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out << '(';
    int y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out << ' ';
      out << (y + 1);
      first = false;
      y = images_[y];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace loclab
