#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanocheck {

/// Permutation of {0, ..., n-1}; p(i) = images[i]. The product a * b
/// applies b first.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || seen[x])
        throw std::invalid_argument("not a permutation");
      seen[x] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = i;
    return Perm(std::move(v));
  }

  /// Product of the given cycles (each cycle a -> b -> ... -> a).
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>> &cycles) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = i;
    Perm p(v);
    for (const auto &cyc : cycles) {
      std::vector<std::size_t> w(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = i;
      for (std::size_t k = 0; k < cyc.size(); ++k)
        w.at(cyc[k]) = cyc[(k + 1) % cyc.size()];
      p = Perm(w) * p;
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t> &images() const { return images_; }

  Perm identity_like() const { return identity(images_.size()); }

  Perm inverse() const {
    std::vector<std::size_t> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      v[images_[i]] = i;
    return Perm(std::move(v));
  }

  friend Perm operator*(const Perm &a, const Perm &b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("permutations of different degrees");
    std::vector<std::size_t> v(a.degree());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.images_[b.images_[i]];
    return Perm(std::move(v));
  }

  friend bool operator==(const Perm &a, const Perm &b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm &a, const Perm &b) { return a.images_ < b.images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      n += images_[i] == i ? 1 : 0;
    return n;
  }

  bool is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  /// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
  std::string to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i)
        continue;
      out += "(";
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (j != i)
          out += " ";
        out += std::to_string(j);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

private:
  std::vector<std::size_t> images_;
};

inline std::string object_key(const Perm &p) {
  std::string k;
  for (auto x : p.images())
    k += std::to_string(x) + ",";
  return k;
}

} // namespace fanocheck
