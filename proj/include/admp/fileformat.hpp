// Line-based text format for algebras, tensors, representations and maps.
//
//   format 1                        optional header
//   field rational | field gf P
//   dim N
//   op NAME [dim M]                 declares a product (dimension defaults to N)
//   NAME: eI eJ = c eK + c eK       unlisted products are zero
//   tensor NAME rank K              declares a rank-2 or rank-3 tensor
//   tensor NAME: eI eJ [eK] = c     one coefficient (declares the tensor if needed)
//   rep NAME eI = [a,b ; c,d]       one matrix of a family
//   map NAME = [a,b ; c,d]          a linear map, rows separated by ';'
//
// '#' starts a comment; blank lines are ignored. Indices are one-based.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "admp/tensor.hpp"

namespace admp {

struct ParseError : InvalidInput {
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line, column;
};

struct NamedOp {
  std::string name;
  MulTensor m;
};

struct NamedTensor {
  std::string name;
  int rank = 2;
  Matrix t2;   // rank 2
  Tensor3 t3;  // rank 3
};

struct NamedFamily {
  std::string name;
  std::map<std::size_t, Matrix> entries;  // zero-based basis index -> matrix
};

struct NamedMap {
  std::string name;
  Matrix m;
};

struct AlgebraFile {
  Field field;
  std::size_t dim = 0;
  std::vector<NamedOp> ops;
  std::vector<NamedTensor> tensors;
  std::vector<NamedFamily> families;
  std::vector<NamedMap> maps;

  const MulTensor* op(std::string_view name) const;
  const NamedTensor* tensor(std::string_view name) const;
  const NamedFamily* family(std::string_view name) const;
  const Matrix* map(std::string_view name) const;

  // Replaces or appends.
  void set_op(const std::string& name, MulTensor m);
  void set_tensor(const std::string& name, Matrix t);
  void set_tensor(const std::string& name, Tensor3 t);
  void set_family(const std::string& name, const Family& f);
  void set_map(const std::string& name, Matrix m);
};

// The family as n matrices of size m; absent entries are zero. Throws InvalidInput
// if the family is missing and `m` cannot be inferred, or if an index exceeds n.
Family resolve_family(const NamedFamily& f, std::size_t n, Field field, std::optional<std::size_t> m = {});

AlgebraFile parse_file(std::string_view text);
// Canonical text; parse_file(print_file(a)) reproduces a and printing is idempotent.
std::string print_file(const AlgebraFile& a);

// Splits a stream of files separated by lines consisting of "---".
std::vector<std::string> split_documents(std::string_view text);

}  // namespace admp
