#include <gtest/gtest.h>

#include "admp/fileformat.hpp"
#include "support.hpp"

using namespace admp;
using namespace admp::testing;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_file(text);
  } catch (const ParseError& e) {
    return e.line;
  }
  return 0;
}

}  // namespace

TEST(FileFormat, ParsesTheBasicExample) {
  AlgebraFile f = parse_file("field rational\ndim 1\nop star\nstar: e1 e1 = 1 e1\n");
  EXPECT_TRUE(f.field.is_rational());
  EXPECT_EQ(f.dim, 1u);
  ASSERT_TRUE(f.op("star"));
  EXPECT_EQ((*f.op("star"))(0, 0, 0), S(Q(), 1));
}

TEST(FileFormat, TermSyntax) {
  AlgebraFile f = parse_file(
      "# comment line\n"
      "field gf 5\n"
      "dim 2   # trailing comment\n"
      "\n"
      "op star\n"
      "star: e1 e2 = 1 e2 + -1/2 e1\n"
      "star: e2 e1 = e2 - e1\n"
      "star: e2 e2 = -e1\n");
  const MulTensor& m = *f.op("star");
  EXPECT_EQ(m(0, 1, 1), S(gf5(), 1));
  EXPECT_EQ(m(0, 1, 0), S(gf5(), -1, 2));
  EXPECT_EQ(m(1, 0, 0), S(gf5(), -1));
  EXPECT_EQ(m(1, 1, 0), S(gf5(), -1));
  EXPECT_TRUE(m(0, 0, 0).is_zero());
}

TEST(FileFormat, TensorsRepsAndMaps) {
  AlgebraFile f = parse_file(
      "field rational\ndim 2\n"
      "tensor r: e1 e2 = 3\n"
      "tensor alpha rank 3\n"
      "tensor alpha: e2 e1 e1 = -1/3\n"
      "rep L e2 = [0,1 ; 0,0]\n"
      "map theta = [1,0 ; 0,2]\n"
      "op small dim 1\nsmall: e1 e1 = 2 e1\n");
  EXPECT_EQ(f.tensor("r")->rank, 2);
  EXPECT_EQ(f.tensor("r")->t2(0, 1), S(Q(), 3));
  EXPECT_EQ(f.tensor("alpha")->t3(1, 0, 0), S(Q(), -1, 3));
  Family L = resolve_family(*f.family("L"), 2, Q());
  EXPECT_TRUE(L[0].is_zero());
  EXPECT_EQ(L[1](0, 1), S(Q(), 1));
  EXPECT_EQ((*f.map("theta"))(1, 1), S(Q(), 2));
  EXPECT_EQ(f.op("small")->dim(), 1u);
}

TEST(FileFormat, Errors) {
  EXPECT_EQ(error_line("field rational\nop star\n"), 2u);
  EXPECT_GT(error_line("field gf 5\n"), 0u);
  try {
    parse_file("field gf 3\ndim 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("characteristic"), std::string::npos);
    EXPECT_EQ(e.line, 1u);
  }
  EXPECT_EQ(error_line("field gf 4\ndim 1\n"), 1u);
  EXPECT_EQ(error_line("field rational\ndim 2\nop star\nstar: e1 e3 = 1 e1\n"), 4u);
  EXPECT_EQ(error_line("field rational\ndim 2\nop star\nstar: e1 e1 = 1 e0\n"), 4u);
  EXPECT_EQ(error_line("field rational\ndim 2\nop star\nop star\n"), 4u);
  EXPECT_EQ(error_line("field rational\ndim 2\nstar: e1 e1 = 1 e1\n"), 3u);
  EXPECT_EQ(error_line("field rational\ndim 2\nop star\nstar: e1 e1 = x e1\n"), 4u);
  EXPECT_EQ(error_line("field rational\ndim 2\nmap m = [1,2 ; 3]\n"), 3u);
  EXPECT_EQ(error_line("field rational\ndim 2\nbogus line\n"), 3u);
  try {
    parse_file("field rational\ndim 2\nop star\nstar: e1 e3 = 1 e1\n");
  } catch (const ParseError& e) {
    EXPECT_GT(e.column, 1u);
  }
}

TEST(FileFormat, RandomRoundTrip) {
  Rng rng(71);
  for (int s = 0; s < 100; ++s) {
    AlgebraFile f;
    f.field = s % 2 ? Q() : Field::gf(7);
    f.dim = 1 + s % 3;
    f.set_op("star", random_tensor(f.field, f.dim, rng));
    f.set_op("circ", random_tensor(f.field, f.dim, rng));
    f.set_tensor("r", random_matrix(f.field, f.dim, f.dim, rng));
    Tensor3 t(f.field, f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) t(i, 0, i) = random_scalar(f.field, rng);
    f.set_tensor("alpha", t);
    f.set_family("l", random_family(f.field, f.dim, 2, rng));
    f.set_map("theta", random_matrix(f.field, f.dim, 2, rng));
    std::string text = print_file(f);
    AlgebraFile g = parse_file(text);
    EXPECT_EQ(print_file(g), text);
    EXPECT_EQ(*g.op("star"), *f.op("star"));
    EXPECT_EQ(*g.op("circ"), *f.op("circ"));
    EXPECT_EQ(g.tensor("r")->t2, f.tensor("r")->t2);
    EXPECT_EQ(g.tensor("alpha")->t3, f.tensor("alpha")->t3);
    EXPECT_EQ(resolve_family(*g.family("l"), f.dim, f.field), resolve_family(*f.family("l"), f.dim, f.field));
    EXPECT_EQ(*g.map("theta"), *f.map("theta"));
  }
}

TEST(FileFormat, SplitDocuments) {
  auto docs = split_documents("field rational\ndim 1\n---\nfield gf 5\ndim 2\n---\n\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(parse_file(docs[1]).dim, 2u);
}

TEST(FileFormat, VersionHeader) {
  EXPECT_EQ(parse_file("format 1\nfield gf 5\ndim 1\n").dim, 1u);
  EXPECT_EQ(error_line("format 2\nfield gf 5\ndim 1\n"), 1u);
}
