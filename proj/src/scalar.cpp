#include "admp/scalar.hpp"

#include <charconv>
#include <ostream>

namespace admp {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_signed(long v, std::uint64_t p) {
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return static_cast<std::uint64_t>(m);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % static_cast<unsigned long>(p);
  if (m < 0) m += static_cast<unsigned long>(p);
  return m.get_ui();
}

}  // namespace

Field Field::gf(std::uint64_t p) {
  if (p == 2 || p == 3)
    throw InvalidInput("characteristic " + std::to_string(p) +
                       " is not allowed: the identities divide by 2 and 3");
  // Products of two residues must fit in 64 bits.
  if (p >= (1ULL << 31)) throw InvalidInput("modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw InvalidInput("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("rational") : "gf " + std::to_string(p_);
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {}

bool Scalar::is_rational_mode() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->p == 0;
  return true;
}

Field Scalar::field() const {
  if (auto* r = std::get_if<Residue>(&v_); r && r->p != 0) return Field(r->p);
  return Field::rational();
}

Scalar Scalar::zero(Field f) {
  return f.is_rational() ? Scalar() : Scalar(Residue{0, f.modulus()});
}

Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long v) {
  if (f.is_rational()) return v == 0 ? Scalar() : Scalar(mpq_class(v));
  return Scalar(Residue{reduce_signed(v, f.modulus()), f.modulus()});
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) return q == 0 ? Scalar() : Scalar(q);
  std::uint64_t p = f.modulus();
  std::uint64_t den = reduce_mpz(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator " + q.get_den().get_str() + " vanishes mod " +
                                     std::to_string(p));
  std::uint64_t num = reduce_mpz(q.get_num(), p);
  return Scalar(Residue{num * pow_mod(den, p - 2, p) % p, p});
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string t(text);
  auto valid = [&] {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    bool digit = false, slash = false, after = false;
    for (; i < t.size(); ++i) {
      char c = t[i];
      if (c >= '0' && c <= '9') {
        (slash ? after : digit) = true;
      } else if (c == '/' && !slash && digit) {
        slash = true;
      } else {
        return false;
      }
    }
    return digit && (!slash || after);
  };
  if (!valid()) throw InvalidInput("not a scalar: '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw InvalidInput("not a scalar: '" + t + "'");
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + t + "'");
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->p != 0 && r->value == 1 % r->p;
  return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
  auto* r = std::get_if<Residue>(&v_);
  if (!r || r->p == 0) throw ModeMismatch("residue() on a rational scalar");
  return r->value;
}

const mpq_class& Scalar::rational() const {
  static const mpq_class kZero(0);
  if (auto* r = std::get_if<Residue>(&v_)) {
    if (r->p != 0) throw ModeMismatch("rational() on a residue");
    return kZero;
  }
  return std::get<mpq_class>(v_);
}

namespace {

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw ModeMismatch("scalar mode mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

// Residue fast paths first; rational arithmetic otherwise.
#define ADMP_RESIDUE_PAIR(a, b, ra, rb)                 \
  auto* ra = std::get_if<Scalar::Residue>(&(a).v_);             \
  auto* rb = std::get_if<Scalar::Residue>(&(b).v_);             \
  bool a_gf = ra && ra->p != 0, b_gf = rb && rb->p != 0; \
  if (a_gf != b_gf || (a_gf && ra->p != rb->p)) mismatch(a, b);

Scalar operator+(const Scalar& a, const Scalar& b) {
  ADMP_RESIDUE_PAIR(a, b, ra, rb)
  if (a_gf) {
    std::uint64_t s = ra->value + rb->value;
    if (s >= ra->p) s -= ra->p;
    return Scalar(Scalar::Residue{s, ra->p});
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  mpq_class q = a.rational() + b.rational();
  return q == 0 ? Scalar() : Scalar(std::move(q));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  ADMP_RESIDUE_PAIR(a, b, ra, rb)
  if (a_gf) {
    std::uint64_t s = ra->value + ra->p - rb->value;
    if (s >= ra->p) s -= ra->p;
    return Scalar(Scalar::Residue{s, ra->p});
  }
  if (b.is_zero()) return a;
  mpq_class q = a.rational() - b.rational();
  return q == 0 ? Scalar() : Scalar(std::move(q));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  ADMP_RESIDUE_PAIR(a, b, ra, rb)
  if (a_gf) return Scalar(Scalar::Residue{ra->value * rb->value % ra->p, ra->p});
  if (a.is_zero() || b.is_zero()) return Scalar();
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  ADMP_RESIDUE_PAIR(a, b, ra, rb)
  if (b.is_zero()) throw DivisionByZero("division by zero");
  if (a_gf) {
    std::uint64_t inv = pow_mod(rb->value, ra->p - 2, ra->p);
    return Scalar(Scalar::Residue{ra->value * inv % ra->p, ra->p});
  }
  if (a.is_zero()) return Scalar();
  return Scalar(mpq_class(a.rational() / b.rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  ADMP_RESIDUE_PAIR(a, b, ra, rb)
  if (a_gf) return ra->value == rb->value;
  return a.rational() == b.rational();
}

#undef ADMP_RESIDUE_PAIR

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Residue>(&v_)) {
    if (r->p == 0) return *this;
    return Scalar(Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }

std::string Scalar::str() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
  }
  throw Error("unknown arithmetic kind");
}

}  // namespace admp
