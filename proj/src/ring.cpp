#include "kpalg/ring.hpp"

#include <charconv>

namespace kpalg {

RingSpec RingSpec::prime_field(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw RingError("modulus " + std::to_string(p) + " is not prime");
  }
  return RingSpec(RingKind::PrimeField, p);
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime_field(p);
    }
  }
  throw RingError("unknown ring '" + std::string(text) + "' (expected Q, Z or Fp:<prime>)");
}

std::string RingSpec::to_string() const {
  switch (kind_) {
    case RingKind::Rationals: return "Q";
    case RingKind::Integers: return "Z";
    case RingKind::PrimeField: return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

namespace {

mpz_class modulus_of(const RingSpec& spec) {
  mpz_class m;
  std::uint64_t p = spec.modulus();
  mpz_import(m.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return m;
}

}  // namespace

mpq_class RingValue::reduce(const RingSpec& spec, mpq_class v) {
  v.canonicalize();
  switch (spec.kind()) {
    case RingKind::Rationals:
      return v;
    case RingKind::Integers:
      if (v.get_den() != 1) throw RingError("not an integer: " + v.get_str());
      return v;
    case RingKind::PrimeField: {
      mpz_class p = modulus_of(spec);
      mpz_class den = v.get_den();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
        throw RingError("denominator " + den.get_str() + " is not invertible mod " + p.get_str());
      }
      mpz_class r = v.get_num() * inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
      return mpq_class(r);
    }
  }
  return v;
}

RingValue::RingValue(RingSpec spec) : spec_(spec), value_(0) {}

RingValue::RingValue(RingSpec spec, long value) : spec_(spec), value_(reduce(spec, mpq_class(value))) {}

RingValue RingValue::fraction(RingSpec spec, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw RingError("division by zero");
  if (spec.kind() == RingKind::Integers && num % den != 0) {
    throw RingError("not a field: " + num.get_str() + "/" + den.get_str() + " is not an integer");
  }
  return RingValue(spec, reduce(spec, mpq_class(num, den)), true);
}

RingValue RingValue::from_rational(RingSpec spec, const mpq_class& q) {
  return fraction(spec, q.get_num(), q.get_den());
}

void RingValue::check(const RingValue& o) const {
  if (!(spec_ == o.spec_)) {
    throw RingError("ring mismatch: " + spec_.to_string() + " vs " + o.spec_.to_string());
  }
}

RingValue RingValue::operator+(const RingValue& o) const {
  check(o);
  if (spec_.kind() == RingKind::PrimeField) return RingValue(spec_, reduce(spec_, value_ + o.value_), true);
  return RingValue(spec_, value_ + o.value_, true);
}

RingValue RingValue::operator-(const RingValue& o) const {
  check(o);
  if (spec_.kind() == RingKind::PrimeField) return RingValue(spec_, reduce(spec_, value_ - o.value_), true);
  return RingValue(spec_, value_ - o.value_, true);
}

RingValue RingValue::operator*(const RingValue& o) const {
  check(o);
  if (spec_.kind() == RingKind::PrimeField) return RingValue(spec_, reduce(spec_, value_ * o.value_), true);
  return RingValue(spec_, value_ * o.value_, true);
}

RingValue RingValue::operator-() const {
  if (spec_.kind() == RingKind::PrimeField) return RingValue(spec_, reduce(spec_, -value_), true);
  return RingValue(spec_, -value_, true);
}

RingValue RingValue::inverse() const {
  if (spec_.kind() == RingKind::Integers) throw RingError("not a field: cannot invert in Z");
  if (is_zero()) throw RingError("inverse of zero");
  if (spec_.kind() == RingKind::PrimeField) {
    return RingValue(spec_, reduce(spec_, mpq_class(1) / value_), true);
  }
  return RingValue(spec_, mpq_class(1) / value_, true);
}

RingValue RingValue::abs() const {
  if (spec_.kind() == RingKind::PrimeField) return *this;
  return RingValue(spec_, ::abs(value_), true);
}

std::string RingValue::to_string() const { return value_.get_str(); }

Matrix::Matrix(RingSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, RingValue(spec)) {}

void Matrix::set(std::size_t r, std::size_t c, RingValue v) {
  if (!(v.spec() == spec_)) throw RingError("matrix entry from a different ring");
  entries_.at(r * cols_ + c) = std::move(v);
}

}  // namespace kpalg
