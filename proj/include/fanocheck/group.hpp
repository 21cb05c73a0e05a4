#pragma once

#include <cctype>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fanocheck/errors.hpp"
#include "fanocheck/matrix.hpp"
#include "fanocheck/mpoly.hpp"
#include "fanocheck/number_field.hpp"
#include "fanocheck/perm.hpp"

namespace fanocheck {

using Point = std::vector<FieldElement>;

/// Scales a projective point so its first nonzero coordinate is 1.
inline Point canonical_point(const Point &p) {
  for (const auto &c : p)
    if (!c.is_zero()) {
      const FieldElement inv = c.inverse();
      Point out;
      out.reserve(p.size());
      for (const auto &x : p)
        out.push_back(x * inv);
      return out;
    }
  throw std::invalid_argument("the zero vector is not a projective point");
}

inline std::string object_key(const Point &p) {
  std::string k;
  for (const auto &c : p)
    k += c.key();
  return k;
}

inline std::string point_to_string(const Point &p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += " : ";
    out += p[i].to_string();
  }
  return out + "]";
}

/// Invertible square matrix over a number field, acting on column vectors.
class MatElem {
public:
  explicit MatElem(ExactMatrix<FieldElement> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
      throw std::invalid_argument("group matrices must be square");
    if (determinant(m_).is_zero())
      throw std::invalid_argument("group matrices must be invertible");
  }

  const ExactMatrix<FieldElement> &matrix() const { return m_; }
  std::size_t dimension() const { return m_.rows(); }
  const FieldElement &operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  MatElem identity_like() const {
    return MatElem(ExactMatrix<FieldElement>::identity(dimension(), m_.zero()));
  }

  MatElem inverse() const {
    const std::size_t n = dimension();
    ExactMatrix<FieldElement> aug(n, 2 * n, m_.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        aug(i, j) = m_(i, j);
      aug(i, n + i) = m_.zero().one_like();
    }
    const auto e = rref(aug).matrix;
    ExactMatrix<FieldElement> inv(n, n, m_.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        inv(i, j) = e(i, n + j);
    return MatElem(std::move(inv));
  }

  friend MatElem operator*(const MatElem &a, const MatElem &b) { return MatElem(a.m_ * b.m_); }
  friend bool operator==(const MatElem &a, const MatElem &b) { return a.m_ == b.m_; }

  /// Representative of the projective class: first nonzero entry scaled to 1.
  MatElem canonical() const {
    const std::size_t n = dimension();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!m_(i, j).is_zero()) {
          const FieldElement inv = m_(i, j).inverse();
          ExactMatrix<FieldElement> s = m_;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              s(a, b) = s(a, b) * inv;
          return MatElem(std::move(s));
        }
    return *this;
  }

  bool projectively_equal(const MatElem &o) const { return canonical() == o.canonical(); }
  bool is_scalar() const { return projectively_equal(identity_like()); }

  std::string to_string() const { return m_.to_string(); }

private:
  ExactMatrix<FieldElement> m_;
};

inline std::string object_key(const MatElem &g) {
  std::string k;
  const auto c = g.canonical();
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (std::size_t j = 0; j < c.dimension(); ++j)
      k += c(i, j).key();
  return k;
}

inline MatElem canonical_element(const MatElem &g) { return g.canonical(); }
inline Perm canonical_element(const Perm &g) { return g; }

/// Point action x -> g x.
inline Point act_on_point(const MatElem &g, const Point &x) {
  if (x.size() != g.dimension())
    throw std::invalid_argument("point and matrix sizes differ");
  Point y(x.size(), g.matrix().zero());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      y[i] = y[i] + g(i, j) * x[j];
  return y;
}

/// Coordinate permutation: the entry in position i moves to position g(i).
inline Point act_on_point(const Perm &g, const Point &x) {
  Point y = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    y[g(i)] = x[i];
  return y;
}

/// p composed with g^-1: variable i is replaced by x_{g(i)}.
template <ExactScalar S>
MPoly<S> act_on_poly(const Perm &g, const MPoly<S> &p) {
  if (g.degree() != p.arity())
    throw RingMismatch("permutation degree differs from ring arity");
  std::vector<MPoly<S>> images;
  for (std::size_t i = 0; i < p.arity(); ++i)
    images.push_back(p.var(g(i)));
  return p.substitute(images);
}

/// p composed with g^-1 on the first dim(g) variables; the remaining
/// variables are fixed.
inline MPoly<FieldElement> act_on_poly(const MatElem &g, const MPoly<FieldElement> &p) {
  if (g.dimension() > p.arity())
    throw RingMismatch("matrix larger than ring arity");
  const MatElem inv = g.inverse();
  std::vector<MPoly<FieldElement>> images;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (i >= g.dimension()) {
      images.push_back(p.var(i));
      continue;
    }
    MPoly<FieldElement> im = p.zero_like();
    for (std::size_t j = 0; j < g.dimension(); ++j)
      if (!inv(i, j).is_zero())
        im += p.var(j).scaled(inv(i, j));
    images.push_back(std::move(im));
  }
  return p.substitute(images);
}

/// A finite group enumerated in full together with a spanning tree of the
/// Cayley graph: elements[i] = generators[via[i]] * elements[parent[i]]
/// for i > 0, and elements[0] is the identity.
template <class G>
struct Group {
  std::vector<G> generators;
  std::vector<G> elements;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t order() const { return elements.size(); }

  std::optional<std::size_t> find(const G &g) const {
    auto it = index.find(object_key(g));
    if (it == index.end())
      return std::nullopt;
    return it->second;
  }
};

/// Closure of the generators under multiplication, matrices compared
/// projectively.
template <class G>
Group<G> generate_group(const std::vector<G> &generators, std::size_t order_bound) {
  if (generators.empty())
    throw std::invalid_argument("at least one generator is required");
  Group<G> grp;
  for (const auto &g : generators)
    grp.generators.push_back(canonical_element(g));
  const G id = canonical_element(generators.front().identity_like());
  grp.elements.push_back(id);
  grp.parent.push_back(0);
  grp.via.push_back(0);
  grp.index.emplace(object_key(id), 0);
  for (std::size_t head = 0; head < grp.elements.size(); ++head) {
    for (std::size_t k = 0; k < grp.generators.size(); ++k) {
      G next = canonical_element(grp.generators[k] * grp.elements[head]);
      std::string key = object_key(next);
      if (grp.index.count(key))
        continue;
      if (grp.elements.size() >= order_bound)
        throw OrderBoundExceeded("closure exceeds " + std::to_string(order_bound) + " elements");
      grp.index.emplace(std::move(key), grp.elements.size());
      grp.elements.push_back(std::move(next));
      grp.parent.push_back(head);
      grp.via.push_back(k);
    }
  }
  return grp;
}

/// Permutation of a finite set induced by every group element, given the
/// permutations induced by the generators (in generator order).
template <class G>
std::vector<Perm> induced_action(const Group<G> &grp, const std::vector<Perm> &generator_perms) {
  if (generator_perms.size() != grp.generators.size())
    throw std::invalid_argument("one permutation per generator is required");
  std::vector<Perm> out;
  out.reserve(grp.order());
  out.push_back(generator_perms.front().identity_like());
  for (std::size_t i = 1; i < grp.order(); ++i)
    out.push_back(generator_perms[grp.via[i]] * out[grp.parent[i]]);
  return out;
}

template <class X>
struct Orbit {
  X representative;
  std::vector<X> members;
  std::size_t stabilizer_order;

  std::size_t size() const { return members.size(); }
};

/// Breadth-first closure of {x} under the generators. `canonicalize` must be
/// idempotent and constant on projective scalings.
template <class X, class G, class Act, class Canon>
Orbit<X> orbit_of(const X &x, const std::vector<G> &generators, Act act, Canon canonicalize,
                  std::size_t group_order) {
  const X start = canonicalize(x);
  std::vector<X> members{start};
  std::unordered_map<std::string, std::size_t> seen{{object_key(start), 0}};
  for (std::size_t head = 0; head < members.size(); ++head)
    for (const auto &g : generators) {
      X y = canonicalize(act(g, members[head]));
      std::string key = object_key(y);
      if (seen.count(key))
        continue;
      seen.emplace(std::move(key), members.size());
      members.push_back(std::move(y));
    }
  if (group_order % members.size() != 0)
    throw Error("orbit length " + std::to_string(members.size()) + " does not divide the group order " +
                std::to_string(group_order));
  const std::size_t stabilizer = group_order / members.size();
  return {start, std::move(members), stabilizer};
}

/// Word in named generators, e.g. "R^2M^3", "RM^4N", "Id". Letters are an
/// upper-case character optionally followed by lower-case characters or
/// digits; exponents may be negative.
struct GroupWord {
  std::vector<std::pair<std::string, int>> letters;

  static GroupWord parse(const std::string &text) {
    GroupWord w;
    if (text == "Id" || text.empty())
      return w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (!std::isupper(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad group word: " + text);
      std::string name(1, text[i++]);
      while (i < text.size() && (std::islower(static_cast<unsigned char>(text[i])) ||
                                 std::isdigit(static_cast<unsigned char>(text[i]))))
        name += text[i++];
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t used = 0;
        e = std::stoi(text.substr(i), &used);
        i += used;
      }
      w.letters.emplace_back(std::move(name), e);
    }
    return w;
  }

  std::string to_string() const {
    if (letters.empty())
      return "Id";
    std::string out;
    for (const auto &[name, e] : letters)
      out += e == 1 ? name : name + "^" + std::to_string(e);
    return out;
  }
};

/// Left-to-right product of the word's letters.
template <class G>
G eval_word(const GroupWord &w, const std::map<std::string, G> &assignment, const G &identity) {
  G out = identity;
  for (const auto &[name, e] : w.letters) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw UnboundLetter("no element assigned to letter " + name);
    const G g = e < 0 ? it->second.inverse() : it->second;
    for (int k = 0; k < (e < 0 ? -e : e); ++k)
      out = out * g;
  }
  return out;
}

inline bool is_transitive(const Group<Perm> &grp) {
  const std::size_t n = grp.elements.front().degree();
  std::vector<bool> hit(n, false);
  for (const auto &g : grp.elements)
    hit[g(0)] = true;
  for (bool h : hit)
    if (!h)
      return false;
  return true;
}

inline Group<Perm> symmetric_group_s6() {
  return generate_group(std::vector<Perm>{Perm::from_cycles(6, {{0, 1}}),
                                          Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})},
                        720);
}

/// Even permutations of {0..4}, fixing 5.
inline Group<Perm> subgroup_standard_A5() {
  auto grp = generate_group(std::vector<Perm>{Perm::from_cycles(6, {{0, 1, 2, 3, 4}}),
                                              Perm::from_cycles(6, {{0, 1, 2}})},
                            60);
  if (grp.order() != 60)
    throw ConstructionFailed("standard A5 has order " + std::to_string(grp.order()));
  for (const auto &g : grp.elements)
    if (!g.is_even() || g(5) != 5)
      throw ConstructionFailed("standard A5 element " + g.to_string() + " is odd or moves 5");
  return grp;
}

/// A transitive A5 inside A6.
inline Group<Perm> subgroup_nonstandard_A5() {
  auto grp = generate_group(std::vector<Perm>{Perm::from_cycles(6, {{0, 1, 2, 3, 4}}),
                                              Perm::from_cycles(6, {{0, 5}, {1, 4}})},
                            60);
  if (grp.order() != 60)
    throw ConstructionFailed("non-standard A5 candidate has order " + std::to_string(grp.order()));
  for (const auto &g : grp.elements)
    if (!g.is_even())
      throw ConstructionFailed("non-standard A5 contains the odd permutation " + g.to_string());
  if (!is_transitive(grp))
    throw ConstructionFailed("non-standard A5 candidate is not transitive");
  return grp;
}

} // namespace fanocheck
