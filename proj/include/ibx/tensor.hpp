#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ibx/rational.hpp"
#include "ibx/space.hpp"

namespace ibx {

struct BadPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Index = std::vector<int>;

// Sparse tensor over a list of typed legs. Entries are keyed by the row-major
// flat index, so map order equals lexicographic order of index tuples. Zero
// entries are never stored.
class Tensor {
 public:
  Tensor() { reshape(); }
  explicit Tensor(std::vector<Space> legs) : legs_(std::move(legs)) { reshape(); }

  const std::vector<Space>& legs() const { return legs_; }
  std::size_t arity() const { return legs_.size(); }
  std::size_t size() const { return size_; }  // product of leg dimensions
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::size_t, Rational>& entries() const { return entries_; }

  std::size_t flat(std::span<const int> idx) const {
    if (idx.size() != legs_.size()) throw DimensionMismatch("index arity mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 0 || idx[k] >= legs_[k].dim())
        throw std::out_of_range("tensor index out of range on leg " + std::to_string(k));
      f = f * legs_[k].dim() + idx[k];
    }
    return f;
  }
  std::size_t flat(std::initializer_list<int> idx) const {
    return flat(std::span<const int>(idx.begin(), idx.size()));
  }
  Index unflat(std::size_t f) const {
    Index idx(legs_.size());
    for (std::size_t k = legs_.size(); k-- > 0;) {
      idx[k] = static_cast<int>(f % legs_[k].dim());
      f /= legs_[k].dim();
    }
    return idx;
  }

  Rational at(std::span<const int> idx) const { return at_flat(flat(idx)); }
  Rational at(std::initializer_list<int> idx) const { return at_flat(flat(idx)); }
  Rational at_flat(std::size_t f) const {
    auto it = entries_.find(f);
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(std::span<const int> idx, const Rational& v) { set_flat(flat(idx), v); }
  void set(std::initializer_list<int> idx, const Rational& v) { set_flat(flat(idx), v); }
  void set_flat(std::size_t f, const Rational& v) {
    if (f >= size_) throw std::out_of_range("flat index out of range");
    if (v.is_zero())
      entries_.erase(f);
    else
      entries_[f] = v;
  }
  void add(std::span<const int> idx, const Rational& v) { add_flat(flat(idx), v); }
  void add(std::initializer_list<int> idx, const Rational& v) { add_flat(flat(idx), v); }
  void add_flat(std::size_t f, const Rational& v) {
    if (v.is_zero()) return;
    if (f >= size_) throw std::out_of_range("flat index out of range");
    auto [it, fresh] = entries_.try_emplace(f, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  // (index tuple, value) pairs in lexicographic order.
  std::vector<std::pair<Index, Rational>> records() const {
    std::vector<std::pair<Index, Rational>> out;
    out.reserve(entries_.size());
    for (auto& [f, v] : entries_) out.emplace_back(unflat(f), v);
    return out;
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_legs(o);
    for (auto& [f, v] : o.entries_) add_flat(f, v);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_legs(o);
    for (auto& [f, v] : o.entries_) add_flat(f, -v);
    return *this;
  }
  Tensor& operator*=(const Rational& c) {
    if (c.is_zero()) {
      entries_.clear();
      return *this;
    }
    for (auto& [f, v] : entries_) v *= c;
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& c, Tensor a) { return a *= c; }
  friend Tensor operator-(Tensor a) { return a *= Rational(-1); }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_ == b.legs_ && a.entries_ == b.entries_;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [idx, v] : records()) {
      if (!first) os << " + ";
      first = false;
      os << v << "*";
      for (std::size_t k = 0; k < idx.size(); ++k)
        os << (k ? "(x)" : "") << legs_[k].labels()[idx[k]];
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void reshape() {
    size_ = 1;
    for (auto& s : legs_) size_ *= static_cast<std::size_t>(s.dim());
  }
  void require_same_legs(const Tensor& o) const {
    if (!(legs_ == o.legs_)) throw DimensionMismatch("tensor legs differ");
  }

  std::vector<Space> legs_;
  std::size_t size_ = 1;
  std::map<std::size_t, Rational> entries_;
};

// Legs of a followed by legs of b.
inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
  std::vector<Space> legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  Tensor out(std::move(legs));
  const std::size_t nb = b.size();
  for (auto& [fa, va] : a.entries())
    for (auto& [fb, vb] : b.entries()) out.set_flat(fa * nb + fb, va * vb);
  return out;
}

// Sum over the diagonal of legs i and j; both legs are removed.
inline Tensor contract(const Tensor& t, std::size_t i, std::size_t j) {
  if (i == j || i >= t.arity() || j >= t.arity())
    throw DimensionMismatch("bad contraction axes");
  if (!(t.legs()[i] == t.legs()[j]))
    throw DimensionMismatch("contracted legs have different spaces");
  std::vector<Space> legs;
  for (std::size_t k = 0; k < t.arity(); ++k)
    if (k != i && k != j) legs.push_back(t.legs()[k]);
  Tensor out(std::move(legs));
  Index rest;
  for (auto& [f, v] : t.entries()) {
    Index idx = t.unflat(f);
    if (idx[i] != idx[j]) continue;
    rest.clear();
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (k != i && k != j) rest.push_back(idx[k]);
    out.add(rest, v);
  }
  return out;
}

// Axis k of the result is axis perm[k] of t.
inline Tensor permute(const Tensor& t, std::span<const int> perm) {
  const std::size_t n = t.arity();
  if (perm.size() != n) throw BadPermutation("permutation length differs from arity");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[p])
      throw BadPermutation("not a permutation");
    hit[p] = true;
  }
  std::vector<Space> legs;
  for (int p : perm) legs.push_back(t.legs()[p]);
  Tensor out(std::move(legs));
  Index j(n);
  for (auto& [f, v] : t.entries()) {
    Index i = t.unflat(f);
    for (std::size_t k = 0; k < n; ++k) j[k] = i[perm[k]];
    out.set(j, v);
  }
  return out;
}
inline Tensor permute(const Tensor& t, std::initializer_list<int> perm) {
  return permute(t, std::span<const int>(perm.begin(), perm.size()));
}

// Basis vector of a single space as an arity-1 tensor.
inline Tensor basis_vector(const Space& s, int i) {
  Tensor t({s});
  t.set({i}, Rational(1));
  return t;
}

}  // namespace ibx
