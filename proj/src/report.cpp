#include "admp/report.hpp"

#include <sstream>

namespace admp {

Value Value::of(const Scalar& s) { return Value{{}, {s}}; }

Value Value::of(const Vec& v) { return Value{{v.dim()}, v.coords()}; }

Value Value::of(const Matrix& m) {
  Value out{{m.rows(), m.cols()}, {}};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.data.push_back(m(i, j));
  return out;
}

Value Value::of(const Tensor3& t) {
  std::size_t n = t.dim();
  return Value{{n, n, n}, t.data()};
}

namespace {

std::string matrix_text(const std::vector<Scalar>& d, std::size_t off, std::size_t rows, std::size_t cols) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows; ++i) {
    if (i) os << " ; ";
    for (std::size_t j = 0; j < cols; ++j) os << (j ? "," : "") << d[off + i * cols + j];
  }
  os << ']';
  return os.str();
}

}  // namespace

std::string Value::str() const {
  std::ostringstream os;
  switch (shape.size()) {
    case 0:
      os << data.at(0);
      break;
    case 1:
      os << '(';
      for (std::size_t i = 0; i < data.size(); ++i) os << (i ? ", " : "") << data[i];
      os << ')';
      break;
    case 2:
      os << matrix_text(data, 0, shape[0], shape[1]);
      break;
    default: {
      std::size_t block = shape[1] * shape[2];
      os << '{';
      for (std::size_t i = 0; i < shape[0]; ++i)
        os << (i ? " | " : "") << matrix_text(data, i * block, shape[1], shape[2]);
      os << '}';
    }
  }
  return os.str();
}

std::string format_failure(const Witness& w) {
  std::ostringstream os;
  os << "FAIL " << w.identity << " at (";
  for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i] + 1;
  os << "): lhs=" << w.lhs.str() << " rhs=" << w.rhs.str();
  return os.str();
}

std::string format_success(const std::string& name, std::size_t dim, const AxiomReport& r) {
  std::ostringstream os;
  os << "OK " << name << " (dim " << dim << ", " << r.checked << ' ' << r.unit << " checked)";
  return os.str();
}

bool Checker::absorb(const AxiomReport& sub, const std::string& prefix) {
  report_.checked += sub.checked;
  if (!report_.holds) return false;
  if (!sub.holds) {
    report_.holds = false;
    report_.witness = sub.witness;
    report_.witness->identity = prefix + report_.witness->identity;
  }
  return report_.holds;
}

}  // namespace admp
