// Verdicts of identity checks, with the first failing instance as witness.
#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "admp/tensor.hpp"

namespace admp {

// A scalar, vector, matrix or 3-tensor flattened row-major, kept for printing.
struct Value {
  std::vector<std::size_t> shape;
  std::vector<Scalar> data;

  static Value of(const Scalar& s);
  static Value of(const Vec& v);
  static Value of(const Matrix& m);
  static Value of(const Tensor3& t);
  std::string str() const;
  friend bool operator==(const Value& a, const Value& b) { return a.shape == b.shape && a.data == b.data; }
};

struct Witness {
  std::string identity;
  std::vector<std::size_t> indices;  // zero-based basis indices
  Value lhs, rhs;
};

struct AxiomReport {
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t checked = 0;  // index tuples examined
  std::string unit = "cases";

  explicit operator bool() const { return holds; }
};

// "FAIL <identity> at (i,j,k): lhs=... rhs=..." with one-based indices.
std::string format_failure(const Witness& w);
// "OK <name> (dim n, N <unit> checked)".
std::string format_success(const std::string& name, std::size_t dim, const AxiomReport& r);

// Records the first violated identity; later calls become no-ops.
class Checker {
 public:
  explicit Checker(std::string unit) { report_.unit = std::move(unit); }

  template <class T>
  bool expect(const char* identity, std::initializer_list<std::size_t> idx, const T& lhs, const T& rhs) {
    if (!report_.holds) return false;
    if (lhs == rhs) return true;
    report_.holds = false;
    report_.witness = Witness{identity, std::vector<std::size_t>(idx), Value::of(lhs), Value::of(rhs)};
    return false;
  }
  // Checks that a residual-free identity has both sides equal; zero rhs is implied.
  template <class T>
  bool expect_zero(const char* identity, std::initializer_list<std::size_t> idx, const T& value) {
    if (!report_.holds) return false;
    if (value.is_zero()) return true;
    T zero = value;
    zero -= value;
    return expect(identity, idx, value, zero);
  }

  void count() { ++report_.checked; }
  bool ok() const { return report_.holds; }
  // Records a failure that is not an equality of two values.
  bool fail(Witness w) {
    if (!report_.holds) return false;
    report_.holds = false;
    report_.witness = std::move(w);
    return false;
  }
  // Merges a sub-report, keeping the first failure; its identity gets `prefix`.
  bool absorb(const AxiomReport& sub, const std::string& prefix = "");
  AxiomReport finish() const { return report_; }

 private:
  AxiomReport report_;
};

}  // namespace admp
