#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kpalg {

/// An element of N^k. The built-in ordering is lexicographic and exists only
/// so degrees can key ordered containers; the componentwise partial order is
/// `leq`.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t k) : coords_(k, 0) {}
  explicit MultiDegree(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  static MultiDegree unit(std::size_t k, std::size_t color);
  static MultiDegree uniform(std::size_t k, std::uint32_t value);

  std::size_t arity() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  std::uint32_t total() const;
  bool is_zero() const;

  /// Componentwise m <= n.
  bool leq(const MultiDegree& other) const;
  MultiDegree join(const MultiDegree& other) const;
  MultiDegree meet(const MultiDegree& other) const;

  MultiDegree operator+(const MultiDegree& other) const;
  /// Requires other.leq(*this).
  MultiDegree operator-(const MultiDegree& other) const;

  /// The color sequence of the canonical word of this degree: color 0 repeated
  /// coords[0] times, then color 1, and so on.
  std::vector<std::uint32_t> canonical_colors() const;

  /// Comma separated, e.g. "1,0,2".
  std::string to_string() const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// Every d with lo <= d <= hi componentwise, in lexicographic order.
std::vector<MultiDegree> degree_box(const MultiDegree& lo, const MultiDegree& hi);

/// An element of Z^k, the grading group.
class GradeDegree {
 public:
  GradeDegree() = default;
  explicit GradeDegree(std::size_t k) : coords_(k, 0) {}
  explicit GradeDegree(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}

  static GradeDegree difference(const MultiDegree& a, const MultiDegree& b);

  std::size_t arity() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  bool is_zero() const;

  GradeDegree operator+(const GradeDegree& other) const;
  GradeDegree operator-(const GradeDegree& other) const;
  GradeDegree operator-() const;

  std::string to_string() const;

  friend bool operator==(const GradeDegree&, const GradeDegree&) = default;
  friend auto operator<=>(const GradeDegree&, const GradeDegree&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

}  // namespace kpalg
