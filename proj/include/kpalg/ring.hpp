#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kpalg {

class RingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class RingKind { Rationals, PrimeField, Integers };

/// Coefficient ring: Q, F_p or Z.
class RingSpec {
 public:
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  /// Throws RingError unless p is prime.
  static RingSpec prime_field(std::uint64_t p);
  /// "Q", "Z" or "Fp:<p>".
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}
  RingKind kind_;
  std::uint64_t modulus_;
};

/// An exact ring element. Rationals are kept in lowest terms, integers have
/// denominator 1, residues lie in [0, p).
class RingValue {
 public:
  explicit RingValue(RingSpec spec);  // zero
  RingValue(RingSpec spec, long value);
  /// num/den interpreted in the ring; throws RingError when den is not
  /// invertible (zero, a multiple of p, or a non-divisor over Z).
  static RingValue fraction(RingSpec spec, const mpz_class& num, const mpz_class& den);
  static RingValue from_rational(RingSpec spec, const mpq_class& q);

  static RingValue zero(RingSpec spec) { return RingValue(spec); }
  static RingValue one(RingSpec spec) { return RingValue(spec, 1); }

  const RingSpec& spec() const { return spec_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  /// Sign of the stored representative (residues are never negative).
  int sign() const { return sgn(value_); }

  RingValue operator+(const RingValue& o) const;
  RingValue operator-(const RingValue& o) const;
  RingValue operator*(const RingValue& o) const;
  RingValue operator-() const;
  RingValue& operator+=(const RingValue& o) { return *this = *this + o; }
  RingValue& operator-=(const RingValue& o) { return *this = *this - o; }
  RingValue& operator*=(const RingValue& o) { return *this = *this * o; }

  /// Multiplicative inverse. Throws RingError "not a field" over Z and
  /// "inverse of zero" for 0.
  RingValue inverse() const;
  RingValue abs() const;

  /// "5/6", "-3", residues as "2".
  std::string to_string() const;

  friend bool operator==(const RingValue& a, const RingValue& b) {
    return a.spec_ == b.spec_ && a.value_ == b.value_;
  }

 private:
  RingValue(RingSpec spec, mpq_class v, bool) : spec_(spec), value_(std::move(v)) {}
  void check(const RingValue& o) const;
  static mpq_class reduce(const RingSpec& spec, mpq_class v);

  RingSpec spec_;
  mpq_class value_;
};

/// Dense matrix over one ring.
class Matrix {
 public:
  Matrix(RingSpec spec, std::size_t rows, std::size_t cols);

  const RingSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const RingValue& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, RingValue v);

 private:
  RingSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingValue> entries_;
};

using Vector = std::vector<RingValue>;

/// Sparse row used to assemble large, mostly-zero systems. Entries sorted by
/// column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;

/// Basis of the right null space of M.
///
/// Over Q and F_p the basis is the reduced row echelon form of the null space
/// (each vector's first nonzero entry is 1). Over Z it is the Hermite normal
/// form of the integer kernel lattice: primitive vectors with positive leading
/// entries.
std::vector<Vector> kernel(const Matrix& m);

/// Same, for a system given as sparse rows with integer or rational entries
/// already reduced into `spec`.
std::vector<Vector> kernel(RingSpec spec, std::size_t cols, const std::vector<SparseRow>& rows);

/// Rank over the fraction field.
std::size_t rank(const Matrix& m);

}  // namespace kpalg
