#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanocheck/errors.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/perm.hpp"
#include "fanocheck/rational.hpp"

namespace fanocheck {

/// Symmetric matrix of pairings between labelled divisor classes, with the
/// self-pairing -2 on the diagonal.
struct GramMatrix {
  std::vector<std::string> labels;
  ExactMatrix<Rational> matrix;

  GramMatrix(std::vector<std::string> l, ExactMatrix<Rational> m)
      : labels(std::move(l)), matrix(std::move(m)) {
    if (matrix.rows() != labels.size() || matrix.cols() != labels.size())
      throw std::invalid_argument("Gram matrix size differs from the label count");
    if (!matrix.is_symmetric())
      throw std::invalid_argument("Gram matrix is not symmetric");
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (!(matrix(i, i) == Rational(-2)))
        throw std::invalid_argument("Gram diagonal entry for " + labels[i] + " is not -2");
  }

  std::size_t size() const { return labels.size(); }
};

inline ExactMatrix<Rational> integer_matrix(const std::vector<std::vector<long>> &rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto &row : rows)
    r.emplace_back(row.begin(), row.end());
  return ExactMatrix<Rational>(r, Rational());
}

/// Entry (a, b) is the sum of g over orbit a times orbit b.
inline ExactMatrix<Rational> orbit_sum_gram(const GramMatrix &g,
                                            const std::vector<std::vector<std::size_t>> &orbits) {
  std::vector<int> hits(g.size(), 0);
  for (const auto &o : orbits) {
    if (o.empty())
      throw InvalidPartition("empty block");
    for (auto i : o) {
      if (i >= g.size())
        throw InvalidPartition("index " + std::to_string(i) + " out of range");
      ++hits[i];
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (hits[i] != 1)
      throw InvalidPartition("class " + g.labels[i] + " covered " + std::to_string(hits[i]) + " times");
  ExactMatrix<Rational> out(orbits.size(), orbits.size(), Rational());
  for (std::size_t a = 0; a < orbits.size(); ++a)
    for (std::size_t b = 0; b < orbits.size(); ++b) {
      Rational s;
      for (auto i : orbits[a])
        for (auto j : orbits[b])
          s += g.matrix(i, j);
      out(a, b) = s;
    }
  return out;
}

/// Orbits of a permutation group on {0..n-1}, each sorted, ordered by
/// smallest member.
inline std::vector<std::vector<std::size_t>> orbits_of_action(const std::vector<Perm> &action,
                                                              std::size_t n) {
  std::vector<long> block(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (block[i] >= 0)
      continue;
    std::vector<std::size_t> o;
    for (const auto &g : action)
      if (block[g(i)] < 0) {
        block[g(i)] = static_cast<long>(out.size());
        o.push_back(g(i));
      }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

/// Dimension of the invariants of V/K, where V is the permutation module on
/// the classes and K the kernel of the Gram form, as the group average of
/// fix(g) - trace(g on K).
inline long invariant_dimension_via_trace(const GramMatrix &g, const std::vector<Perm> &action) {
  const std::size_t n = g.size();
  for (const auto &p : action) {
    if (p.degree() != n)
      throw ActionNotGramPreserving("permutation degree differs from the class count");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(g.matrix(p(i), p(j)) == g.matrix(i, j)))
          throw ActionNotGramPreserving(p.to_string() + " moves pairing (" + g.labels[i] + ", " +
                                        g.labels[j] + ")");
  }
  const auto kernel = kernel_basis(g.matrix);
  Rational total;
  for (const auto &p : action) {
    const Perm inv = p.inverse();
    // (p b)[i] = b[p^-1(i)]; the coordinate of a kernel vector on basis
    // vector l is its entry at free column l.
    Rational trace;
    for (std::size_t l = 0; l < kernel.vectors.size(); ++l)
      trace += kernel.vectors[l][inv(kernel.free_columns[l])];
    total += Rational(static_cast<long>(p.fixed_points())) - trace;
  }
  const Rational avg = total / Rational(static_cast<long>(action.size()));
  if (!avg.is_integer())
    throw Error("trace average " + avg.to_string() + " is not an integer");
  return avg.num().get_si();
}

/// {"labels": [...], "rows": [[int]]}
inline nlohmann::json gram_to_json(const std::vector<std::string> &labels, const ExactMatrix<Rational> &m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer())
        throw std::invalid_argument("fixture matrices hold integers only");
      row.push_back(m(i, j).num().get_si());
    }
    rows.push_back(std::move(row));
  }
  return {{"labels", labels}, {"rows", rows}};
}

struct LabelledMatrix {
  std::vector<std::string> labels;
  ExactMatrix<Rational> matrix;
};

inline LabelledMatrix gram_from_json(const nlohmann::json &j) {
  auto labels = j.at("labels").get<std::vector<std::string>>();
  auto rows = j.at("rows").get<std::vector<std::vector<long>>>();
  if (rows.size() != labels.size())
    throw std::invalid_argument("matrix fixture has " + std::to_string(rows.size()) + " rows for " +
                                std::to_string(labels.size()) + " labels");
  for (const auto &r : rows)
    if (r.size() != labels.size())
      throw std::invalid_argument("matrix fixture row has the wrong length");
  return {std::move(labels), integer_matrix(rows)};
}

inline LabelledMatrix load_gram_fixture(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open fixture " + path);
  return gram_from_json(nlohmann::json::parse(in));
}

} // namespace fanocheck
