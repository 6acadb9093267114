// Exact scalars: reduced rationals or residues modulo a prime p >= 5.
#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace admp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ModeMismatch : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
// A precondition on the mathematical content failed (invalid algebra, degenerate r, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// p == 0 denotes the rationals.
class Field {
 public:
  Field() = default;
  static Field rational() { return Field{}; }
  static Field gf(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

class Scalar {
 public:
  // Rational zero.
  Scalar() : v_(Residue{0, 0}) {}
  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  static Scalar parse(Field f, std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical text: "n", "n/d" or the residue in [0, p).
  std::string str() const;
  // Residue value; only valid in field mode.
  std::uint64_t residue() const;
  // Rational value; only valid in rational mode.
  const mpq_class& rational() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;  // 0 marks the rational zero placeholder
  };
  explicit Scalar(Residue r) : v_(r) {}
  explicit Scalar(mpq_class q);
  // Rational zero is stored as Residue{0,0} to keep default construction cheap.
  bool is_rational_mode() const;

  std::variant<Residue, mpq_class> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class ArithKind { add, sub, mul, div };
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithKind kind);

}  // namespace admp
