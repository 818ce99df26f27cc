#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "sharptree/matrix.hpp"
#include "sharptree/tree.hpp"

namespace sharptree::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline WeightedTree fixture(const std::string& name) {
  return parse_tree(read_file(std::string(SHARPTREE_FIXTURE_DIR) + "/" + name));
}

inline WeightedTree p5() { return fixture("p5.txt"); }
inline WeightedTree t6() { return fixture("t6.txt"); }
inline WeightedTree t1() { return fixture("t1.txt"); }
inline WeightedTree t2() { return fixture("t2.txt"); }
inline WeightedTree star12() { return fixture("star12.txt"); }

/// Symmetric matrix from 1-based (i, j, "p/q") entries.
inline ExactMatrix symmetric(std::size_t n,
                             std::initializer_list<std::tuple<std::size_t, std::size_t, const char*>> entries) {
  ExactMatrix m = ExactMatrix::zero(n);
  for (const auto& [i, j, w] : entries) {
    m(i - 1, j - 1) = Rational::parse(w);
    m(j - 1, i - 1) = Rational::parse(w);
  }
  return m;
}

inline Vertex vertex(const WeightedTree& t, const std::string& label) { return *t.graph().find(label); }

}  // namespace sharptree::testing
