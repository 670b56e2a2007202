#include "kpalg/multidegree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kpalg {

MultiDegree MultiDegree::unit(std::size_t k, std::size_t color) {
  MultiDegree d(k);
  d.coords_.at(color) = 1;
  return d;
}

MultiDegree MultiDegree::uniform(std::size_t k, std::uint32_t value) {
  return MultiDegree(std::vector<std::uint32_t>(k, value));
}

std::uint32_t MultiDegree::total() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint32_t{0});
}

bool MultiDegree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

bool MultiDegree::leq(const MultiDegree& other) const {
  assert(arity() == other.arity());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

MultiDegree MultiDegree::join(const MultiDegree& other) const {
  assert(arity() == other.arity());
  MultiDegree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = std::max(coords_[i], other.coords_[i]);
  }
  return out;
}

MultiDegree MultiDegree::meet(const MultiDegree& other) const {
  assert(arity() == other.arity());
  MultiDegree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = std::min(coords_[i], other.coords_[i]);
  }
  return out;
}

MultiDegree MultiDegree::operator+(const MultiDegree& other) const {
  assert(arity() == other.arity());
  MultiDegree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

MultiDegree MultiDegree::operator-(const MultiDegree& other) const {
  if (!other.leq(*this)) {
    throw std::invalid_argument("degree subtraction below zero: " + to_string() + " - " +
                                other.to_string());
  }
  MultiDegree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

std::vector<std::uint32_t> MultiDegree::canonical_colors() const {
  std::vector<std::uint32_t> colors;
  colors.reserve(total());
  for (std::uint32_t c = 0; c < coords_.size(); ++c) {
    colors.insert(colors.end(), coords_[c], c);
  }
  return colors;
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  return os.str();
}

std::vector<MultiDegree> degree_box(const MultiDegree& lo, const MultiDegree& hi) {
  std::vector<MultiDegree> out;
  if (!lo.leq(hi)) return out;
  MultiDegree cur = lo;
  const std::size_t k = lo.arity();
  while (true) {
    out.push_back(cur);
    // odometer, last coordinate fastest
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

GradeDegree GradeDegree::difference(const MultiDegree& a, const MultiDegree& b) {
  assert(a.arity() == b.arity());
  GradeDegree g(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    g.coords_[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
  }
  return g;
}

bool GradeDegree::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

GradeDegree GradeDegree::operator+(const GradeDegree& other) const {
  GradeDegree out(*this);
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

GradeDegree GradeDegree::operator-(const GradeDegree& other) const { return *this + (-other); }

GradeDegree GradeDegree::operator-() const {
  GradeDegree out(*this);
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::string GradeDegree::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  return os.str();
}

}  // namespace kpalg
