#include "admp/fileformat.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace admp {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string& msg)
    : InvalidInput("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

template <class V>
auto find_named(V& v, std::string_view name) -> decltype(&v[0]) {
  for (auto& e : v)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

const MulTensor* AlgebraFile::op(std::string_view name) const {
  auto* e = find_named(ops, name);
  return e ? &e->m : nullptr;
}
const NamedTensor* AlgebraFile::tensor(std::string_view name) const { return find_named(tensors, name); }
const NamedFamily* AlgebraFile::family(std::string_view name) const { return find_named(families, name); }
const Matrix* AlgebraFile::map(std::string_view name) const {
  auto* e = find_named(maps, name);
  return e ? &e->m : nullptr;
}

void AlgebraFile::set_op(const std::string& name, MulTensor m) {
  if (auto* e = find_named(ops, name)) e->m = std::move(m);
  else ops.push_back({name, std::move(m)});
}

void AlgebraFile::set_tensor(const std::string& name, Matrix t) {
  NamedTensor nt{name, 2, std::move(t), Tensor3()};
  if (auto* e = find_named(tensors, name)) *e = std::move(nt);
  else tensors.push_back(std::move(nt));
}

void AlgebraFile::set_tensor(const std::string& name, Tensor3 t) {
  NamedTensor nt{name, 3, Matrix(), std::move(t)};
  if (auto* e = find_named(tensors, name)) *e = std::move(nt);
  else tensors.push_back(std::move(nt));
}

void AlgebraFile::set_family(const std::string& name, const Family& f) {
  NamedFamily nf{name, {}};
  for (std::size_t i = 0; i < f.size(); ++i) nf.entries.emplace(i, f[i]);
  if (auto* e = find_named(families, name)) *e = std::move(nf);
  else families.push_back(std::move(nf));
}

void AlgebraFile::set_map(const std::string& name, Matrix m) {
  if (auto* e = find_named(maps, name)) e->m = std::move(m);
  else maps.push_back({name, std::move(m)});
}

Family resolve_family(const NamedFamily& f, std::size_t n, Field field, std::optional<std::size_t> m) {
  std::size_t size = 0;
  if (!f.entries.empty()) size = f.entries.begin()->second.rows();
  else if (m) size = *m;
  else throw InvalidInput("family '" + f.name + "' has no entries and its size is unknown");
  if (m && *m != size)
    throw DimensionMismatch("family '" + f.name + "' has " + std::to_string(size) + "x" + std::to_string(size) +
                            " matrices, expected " + std::to_string(*m));
  Family out(n, Matrix(field, size, size));
  for (const auto& [i, mat] : f.entries) {
    if (i >= n)
      throw DimensionMismatch("family '" + f.name + "' has an entry for e" + std::to_string(i + 1) +
                              " but the algebra has dimension " + std::to_string(n));
    require_same_field(mat.field(), field, "family");
    out[i] = mat;
  }
  return out;
}

namespace {

const std::set<std::string> kKeywords = {"format", "field", "dim", "op", "tensor", "rep", "map"};

// Cursor over one line; columns are one-based.
class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const { throw ParseError(line_, col, msg); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    }
    if (b == pos_) fail("expected a name");
    return std::string(s_.substr(b, pos_ - b));
  }
  std::size_t number() {
    ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    std::string t(s_.substr(b, pos_ - b));
    if (t.size() > 9) fail_at(b + 1, "number too large: " + t);
    return std::stoul(t);
  }
  // True if a scalar literal starts here (optional sign then a digit).
  bool at_scalar() {
    ws();
    std::size_t q = pos_;
    if (q < s_.size() && (s_[q] == '-' || s_[q] == '+')) ++q;
    return q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]));
  }
  Scalar scalar(Field f) {
    ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    std::string_view tok = s_.substr(b, pos_ - b);
    try {
      return Scalar::parse(f, tok);
    } catch (const Error& e) {
      fail_at(b + 1, e.what());
    }
  }
  // eK with K >= 1; returns K - 1.
  std::size_t basis(std::size_t bound) {
    ws();
    std::size_t b = pos_;
    if (pos_ >= s_.size() || s_[pos_] != 'e') fail("expected a basis element like e1");
    ++pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a basis element like e1");
    std::size_t k = number();
    if (k == 0 || k > bound)
      fail_at(b + 1, "basis index e" + std::to_string(k) + " out of range 1.." + std::to_string(bound));
    return k - 1;
  }
  Matrix matrix(Field f) {
    expect('[');
    std::vector<std::vector<Scalar>> rows(1);
    std::size_t start = column();
    while (true) {
      if (!at_scalar()) fail("expected a matrix entry");
      rows.back().push_back(scalar(f));
      if (accept(',')) continue;
      if (accept(';')) {
        rows.emplace_back();
        continue;
      }
      expect(']');
      break;
    }
    std::size_t cols = rows[0].size();
    for (const auto& r : rows)
      if (r.size() != cols) fail_at(start, "matrix rows have different lengths");
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }
  void end() {
    if (!done()) fail("unexpected text");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0, line_;
};

struct Parser {
  AlgebraFile out;
  bool have_field = false, have_dim = false, have_format = false;
  std::map<std::string, std::size_t> op_dims;
  std::set<std::pair<std::string, std::pair<std::size_t, std::size_t>>> seen_products;
  std::set<std::pair<std::string, std::vector<std::size_t>>> seen_coeffs;

  void need_header(Cursor& c) {
    if (!have_field) c.fail("missing 'field' before this line");
    if (!have_dim) c.fail("missing 'dim' before this line");
  }

  void check_fresh_name(Cursor& c, std::size_t col, const std::string& name) {
    if (kKeywords.count(name)) c.fail_at(col, "'" + name + "' is a keyword");
    if (out.op(name) || out.tensor(name) || out.family(name) || out.map(name))
      c.fail_at(col, "name '" + name + "' is already used");
  }

  void statement(Cursor& c) {
    std::size_t col = (c.peek(), c.column());
    std::string word = c.ident();
    if (word == "format") {
      if (have_format || have_field || have_dim || !out.ops.empty()) c.fail_at(col, "'format' must come first");
      std::size_t v = c.number();
      if (v != 1) c.fail_at(col, "unsupported format version " + std::to_string(v));
      have_format = true;
      c.end();
    } else if (word == "field") {
      if (have_field) c.fail_at(col, "duplicate 'field'");
      std::size_t kcol = (c.peek(), c.column());
      std::string kind = c.ident();
      if (kind == "rational") {
        out.field = Field::rational();
      } else if (kind == "gf") {
        std::size_t pcol = (c.peek(), c.column());
        std::size_t p = c.number();
        try {
          out.field = Field::gf(p);
        } catch (const Error& e) {
          c.fail_at(pcol, e.what());
        }
      } else {
        c.fail_at(kcol, "expected 'rational' or 'gf P'");
      }
      have_field = true;
      c.end();
    } else if (word == "dim") {
      if (have_dim) c.fail_at(col, "duplicate 'dim'");
      std::size_t ncol = (c.peek(), c.column());
      std::size_t n = c.number();
      if (n == 0) c.fail_at(ncol, "dimension must be positive");
      out.dim = n;
      have_dim = true;
      c.end();
    } else if (word == "op") {
      need_header(c);
      std::size_t ncol = (c.peek(), c.column());
      std::string name = c.ident();
      check_fresh_name(c, ncol, name);
      std::size_t d = out.dim;
      if (!c.done()) {
        std::size_t dcol = (c.peek(), c.column());
        if (c.ident() != "dim") c.fail_at(dcol, "expected 'dim'");
        d = c.number();
        if (d == 0) c.fail_at(dcol, "dimension must be positive");
      }
      c.end();
      out.ops.push_back({name, MulTensor(out.field, d)});
    } else if (word == "tensor") {
      need_header(c);
      tensor_line(c);
    } else if (word == "rep") {
      need_header(c);
      rep_line(c);
    } else if (word == "map") {
      need_header(c);
      std::size_t ncol = (c.peek(), c.column());
      std::string name = c.ident();
      check_fresh_name(c, ncol, name);
      c.expect('=');
      Matrix m = c.matrix(out.field);
      c.end();
      out.maps.push_back({name, std::move(m)});
    } else {
      need_header(c);
      product_line(c, col, word);
    }
  }

  void product_line(Cursor& c, std::size_t col, const std::string& name) {
    auto it = std::find_if(out.ops.begin(), out.ops.end(), [&](const NamedOp& o) { return o.name == name; });
    if (it == out.ops.end()) c.fail_at(col, "unknown statement or undeclared operation '" + name + "'");
    MulTensor& m = it->m;
    std::size_t n = m.dim();
    c.expect(':');
    std::size_t i = c.basis(n), j = c.basis(n);
    if (!seen_products.insert({name, {i, j}}).second)
      c.fail_at(col, "duplicate product e" + std::to_string(i + 1) + " e" + std::to_string(j + 1));
    c.expect('=');
    bool first = true;
    while (first || !c.done()) {
      Scalar sign = Scalar::one(out.field);
      if (!first) {
        if (c.accept('-')) sign = -sign;
        else c.expect('+');
      }
      Scalar coef = Scalar::one(out.field);
      if (c.at_scalar()) coef = c.scalar(out.field);
      else if (first && c.accept('-')) sign = -sign;
      std::size_t k = c.basis(n);
      m(i, j, k) += sign * coef;
      first = false;
    }
  }

  void tensor_line(Cursor& c) {
    std::size_t ncol = (c.peek(), c.column());
    std::string name = c.ident();
    NamedTensor* t = find_named(out.tensors, name);
    if (!t) check_fresh_name(c, ncol, name);
    auto create = [&](int rank) {
      if (rank == 2) out.tensors.push_back({name, 2, Matrix(out.field, out.dim, out.dim), Tensor3()});
      else out.tensors.push_back({name, 3, Matrix(), Tensor3(out.field, out.dim)});
      return &out.tensors.back();
    };
    if (c.peek() != ':') {
      std::size_t rcol = (c.peek(), c.column());
      if (c.ident() != "rank") c.fail_at(rcol, "expected 'rank' or ':'");
      std::size_t k = c.number();
      if (k != 2 && k != 3) c.fail_at(rcol, "tensor rank must be 2 or 3");
      c.end();
      if (t) c.fail_at(ncol, "tensor '" + name + "' is already declared");
      create(static_cast<int>(k));
      return;
    }
    c.expect(':');
    std::vector<std::size_t> idx;
    while (c.peek() == 'e') idx.push_back(c.basis(out.dim));
    if (idx.size() != 2 && idx.size() != 3) c.fail("a tensor coefficient needs 2 or 3 basis indices");
    if (!t) t = create(static_cast<int>(idx.size()));
    if (static_cast<std::size_t>(t->rank) != idx.size())
      c.fail_at(ncol, "tensor '" + name + "' has rank " + std::to_string(t->rank));
    if (!seen_coeffs.insert({name, idx}).second) c.fail_at(ncol, "duplicate tensor coefficient");
    c.expect('=');
    Scalar v = c.scalar(out.field);
    c.end();
    if (t->rank == 2) t->t2(idx[0], idx[1]) = v;
    else t->t3(idx[0], idx[1], idx[2]) = v;
  }

  void rep_line(Cursor& c) {
    std::size_t ncol = (c.peek(), c.column());
    std::string name = c.ident();
    NamedFamily* f = find_named(out.families, name);
    if (!f) check_fresh_name(c, ncol, name);
    std::size_t bcol = (c.peek(), c.column());
    std::size_t i = c.basis(1000000);
    c.expect('=');
    std::size_t mcol = (c.peek(), c.column());
    Matrix m = c.matrix(out.field);
    c.end();
    if (!m.is_square()) c.fail_at(mcol, "representation matrices must be square");
    if (!f) {
      out.families.push_back({name, {}});
      f = &out.families.back();
    }
    if (!f->entries.empty() && f->entries.begin()->second.rows() != m.rows())
      c.fail_at(mcol, "matrices of family '" + name + "' must all have the same size");
    if (!f->entries.emplace(i, std::move(m)).second) c.fail_at(bcol, "duplicate entry for e" + std::to_string(i + 1));
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

AlgebraFile parse_file(std::string_view text) {
  Parser p;
  std::size_t line = 0, last = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!trim(raw).empty()) {
      Cursor c(raw, line);
      p.statement(c);
      last = line;
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (!p.have_field) throw ParseError(last + 1, 1, "missing 'field'");
  if (!p.have_dim) throw ParseError(last + 1, 1, "missing 'dim'");
  return std::move(p.out);
}

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string matrix_literal(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += " ; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace

std::string print_file(const AlgebraFile& a) {
  std::ostringstream os;
  os << "format 1\n";
  os << "field " << a.field.name() << "\n";
  os << "dim " << a.dim << "\n";
  for (const auto& [name, m] : a.ops) {
    os << "op " << name;
    if (m.dim() != a.dim) os << " dim " << m.dim();
    os << "\n";
    std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::string terms;
        for (std::size_t k = 0; k < n; ++k) {
          if (m(i, j, k).is_zero()) continue;
          if (!terms.empty()) terms += " + ";
          terms += m(i, j, k).str() + " " + basis_name(k);
        }
        if (!terms.empty()) os << name << ": " << basis_name(i) << " " << basis_name(j) << " = " << terms << "\n";
      }
  }
  for (const auto& t : a.tensors) {
    os << "tensor " << t.name << " rank " << t.rank << "\n";
    std::size_t n = t.rank == 2 ? t.t2.rows() : t.t3.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (t.rank == 2) {
          if (!t.t2(i, j).is_zero())
            os << "tensor " << t.name << ": " << basis_name(i) << " " << basis_name(j) << " = " << t.t2(i, j).str()
               << "\n";
          continue;
        }
        for (std::size_t k = 0; k < n; ++k)
          if (!t.t3(i, j, k).is_zero())
            os << "tensor " << t.name << ": " << basis_name(i) << " " << basis_name(j) << " " << basis_name(k)
               << " = " << t.t3(i, j, k).str() << "\n";
      }
  }
  for (const auto& f : a.families)
    for (const auto& [i, m] : f.entries)
      os << "rep " << f.name << " " << basis_name(i) << " = " << matrix_literal(m) << "\n";
  for (const auto& [name, m] : a.maps) os << "map " << name << " = " << matrix_literal(m) << "\n";
  return os.str();
}

std::vector<std::string> split_documents(std::string_view text) {
  std::vector<std::string> docs(1);
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (trim(line) == "---") docs.emplace_back();
    else docs.back().append(line).append("\n");
    start = end + 1;
  }
  docs.erase(std::remove_if(docs.begin(), docs.end(),
                            [](const std::string& d) {
                              for (char ch : d)
                                if (!std::isspace(static_cast<unsigned char>(ch))) return false;
                              return true;
                            }),
             docs.end());
  return docs;
}

}  // namespace admp
