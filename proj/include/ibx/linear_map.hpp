#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ibx/tensor.hpp"

namespace ibx {

// A tensor whose first n_in legs are inputs and remaining legs are outputs.
// Viewed as a sparse matrix with rows = input tuples, cols = output tuples.
// Structure maps of arity 3 are either 2 -> 1 (products, actions) or 1 -> 2
// (coproducts, coactions); entry (i,j,k) means e_i (x) e_j -> e_k or
// e_i -> e_j (x) e_k respectively.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(const std::vector<Space>& ins, const std::vector<Space>& outs)
      : t_(concat(ins, outs)), n_in_(ins.size()) {}
  LinearMap(Tensor t, std::size_t n_in) : t_(std::move(t)), n_in_(n_in) {
    if (n_in_ > t_.arity()) throw DimensionMismatch("more inputs than legs");
  }

  const Tensor& tensor() const { return t_; }
  std::size_t n_in() const { return n_in_; }
  std::size_t n_out() const { return t_.arity() - n_in_; }
  std::vector<Space> ins() const {
    return {t_.legs().begin(), t_.legs().begin() + n_in_};
  }
  std::vector<Space> outs() const {
    return {t_.legs().begin() + n_in_, t_.legs().end()};
  }
  std::size_t in_size() const { return span_size(0, n_in_); }
  std::size_t out_size() const { return span_size(n_in_, t_.arity()); }
  bool is_zero() const { return t_.is_zero(); }

  // Entry addressed by the full index tuple (inputs then outputs).
  Rational at(std::initializer_list<int> idx) const { return t_.at(idx); }
  void set(std::initializer_list<int> idx, const Rational& v) { t_.set(idx, v); }
  void add(std::initializer_list<int> idx, const Rational& v) { t_.add(idx, v); }
  void add(std::span<const int> idx, const Rational& v) { t_.add(idx, v); }
  void add_rc(std::size_t row, std::size_t col, const Rational& v) {
    t_.add_flat(row * out_size() + col, v);
  }
  Rational at_rc(std::size_t row, std::size_t col) const {
    return t_.at_flat(row * out_size() + col);
  }

  // Nonzero columns of each row.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows() const {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> r(in_size());
    const std::size_t os = out_size();
    for (auto& [f, v] : t_.entries()) r[f / os].emplace_back(f % os, v);
    return r;
  }

  // Image of a basis input tuple, as a tensor over the output legs.
  Tensor row(std::size_t in_flat) const {
    Tensor out(outs());
    const std::size_t os = out_size();
    auto lo = t_.entries().lower_bound(in_flat * os);
    auto hi = t_.entries().lower_bound((in_flat + 1) * os);
    for (auto it = lo; it != hi; ++it) out.set_flat(it->first % os, it->second);
    return out;
  }

  Tensor apply(const Tensor& x) const {
    if (!(x.legs() == ins())) throw DimensionMismatch("argument legs differ from map inputs");
    Tensor out(outs());
    const std::size_t os = out_size();
    for (auto& [f, v] : t_.entries()) {
      Rational c = x.at_flat(f / os);
      if (!c.is_zero()) out.add_flat(f % os, c * v);
    }
    return out;
  }

  LinearMap& operator+=(const LinearMap& o) {
    require_same_shape(o);
    t_ += o.t_;
    return *this;
  }
  LinearMap& operator-=(const LinearMap& o) {
    require_same_shape(o);
    t_ -= o.t_;
    return *this;
  }
  LinearMap& operator*=(const Rational& c) {
    t_ *= c;
    return *this;
  }
  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator-(LinearMap a) { return a *= Rational(-1); }
  friend LinearMap operator*(const Rational& c, LinearMap a) { return a *= c; }
  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.n_in_ == b.n_in_ && a.t_ == b.t_;
  }

 private:
  static std::vector<Space> concat(std::vector<Space> a, const std::vector<Space>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  std::size_t span_size(std::size_t b, std::size_t e) const {
    std::size_t n = 1;
    for (std::size_t k = b; k < e; ++k) n *= t_.legs()[k].dim();
    return n;
  }
  void require_same_shape(const LinearMap& o) const {
    if (n_in_ != o.n_in_ || !(t_.legs() == o.t_.legs()))
      throw DimensionMismatch("maps have different shapes");
  }

  Tensor t_;
  std::size_t n_in_ = 0;
};

inline std::string shape_str(const std::vector<Space>& legs) {
  std::string s;
  for (std::size_t k = 0; k < legs.size(); ++k) s += (k ? "," : "") + legs[k].name();
  return "(" + s + ")";
}

// f after g.
inline LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (!(g.outs() == f.ins()))
    throw DimensionMismatch("cannot compose: outputs " + shape_str(g.outs()) +
                            " vs inputs " + shape_str(f.ins()));
  LinearMap out(g.ins(), f.outs());
  auto frows = f.rows();
  const std::size_t gos = g.out_size();
  std::map<std::size_t, Rational> acc;
  const std::size_t fos = f.out_size();
  for (auto& [flat, v] : g.tensor().entries()) {
    const std::size_t r = flat / gos, mid = flat % gos;
    for (auto& [c, w] : frows[mid]) {
      auto [it, fresh] = acc.try_emplace(r * fos + c, v * w);
      if (!fresh) it->second += v * w;
    }
  }
  for (auto& [flat, v] : acc) out.add_rc(flat / fos, flat % fos, v);
  return out;
}
inline LinearMap operator*(const LinearMap& f, const LinearMap& g) { return compose(f, g); }

// Tensor product of maps: inputs (f.ins, g.ins), outputs (f.outs, g.outs).
inline LinearMap tp(const LinearMap& f, const LinearMap& g) {
  std::vector<Space> ins = f.ins(), outs = f.outs();
  for (auto& s : g.ins()) ins.push_back(s);
  for (auto& s : g.outs()) outs.push_back(s);
  LinearMap out(ins, outs);
  const std::size_t gi = g.in_size(), go = g.out_size();
  const std::size_t fo = f.out_size();
  for (auto& [ff, fv] : f.tensor().entries()) {
    const std::size_t fr = ff / fo, fc = ff % fo;
    for (auto& [gf, gv] : g.tensor().entries()) {
      const std::size_t gr = gf / go, gc = gf % go;
      out.add_rc(fr * gi + gr, fc * go + gc, fv * gv);
    }
  }
  return out;
}
template <typename... Rest>
LinearMap tp(const LinearMap& f, const LinearMap& g, const Rest&... rest) {
  return tp(tp(f, g), rest...);
}

inline LinearMap identity(const Space& s) {
  LinearMap m({s}, {s});
  for (int i = 0; i < s.dim(); ++i) m.set({i, i}, Rational(1));
  return m;
}
inline LinearMap zero_map(const std::vector<Space>& ins, const std::vector<Space>& outs) {
  return LinearMap(ins, outs);
}

// A tensor viewed as a map with no inputs, i.e. an element of the output space.
inline LinearMap element(const Tensor& t) { return LinearMap(t, 0); }

// Output leg k of the result is output leg perm[k] of f.
inline LinearMap permute_outputs(const LinearMap& f, std::vector<int> perm) {
  std::vector<int> full(f.n_in());
  std::iota(full.begin(), full.end(), 0);
  for (int p : perm) full.push_back(static_cast<int>(f.n_in()) + p);
  return LinearMap(permute(f.tensor(), full), f.n_in());
}
inline LinearMap permute_inputs(const LinearMap& f, std::vector<int> perm) {
  std::vector<int> full = perm;
  for (std::size_t k = f.n_in(); k < f.tensor().arity(); ++k) full.push_back(static_cast<int>(k));
  return LinearMap(permute(f.tensor(), full), f.n_in());
}

// Swap of two spaces: a (x) b -> b (x) a.
inline LinearMap flip(const Space& a, const Space& b) {
  return permute_outputs(tp(identity(a), identity(b)), {1, 0});
}

inline bool is_structure_map(const LinearMap& f) {
  return f.tensor().arity() == 3 && (f.n_in() == 1 || f.n_in() == 2);
}

inline void require_shape(const LinearMap& f, const std::vector<Space>& ins,
                          const std::vector<Space>& outs, const std::string& role) {
  if (!(f.ins() == ins) || !(f.outs() == outs))
    throw DimensionMismatch(role + " must map " + shape_str(ins) + " -> " + shape_str(outs) +
                            ", got " + shape_str(f.ins()) + " -> " + shape_str(f.outs()));
}

// ---- dense exact linear algebra on 1 -> 1 maps -------------------------

using Matrix = std::vector<std::vector<Rational>>;

// m[i][j] = coefficient of output j in the image of input i.
inline Matrix to_matrix(const LinearMap& f) {
  Matrix m(f.in_size(), std::vector<Rational>(f.out_size()));
  for (auto& [flat, v] : f.tensor().entries()) m[flat / f.out_size()][flat % f.out_size()] = v;
  return m;
}
inline LinearMap from_matrix(const Space& in, const Space& out, const Matrix& m) {
  LinearMap f({in}, {out});
  for (int i = 0; i < in.dim(); ++i)
    for (int j = 0; j < out.dim(); ++j) f.set({i, j}, m[i][j]);
  return f;
}

inline std::size_t rank(Matrix m) {
  std::size_t rk = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rk]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk || m[r][c].is_zero()) continue;
      Rational k = m[r][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= k * m[rk][j];
    }
    ++rk;
  }
  return rk;
}
inline std::size_t rank(const LinearMap& f) { return rank(to_matrix(f)); }

inline std::optional<Matrix> inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational d = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational k = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= k * m[c][j];
        inv[r][j] -= k * inv[c][j];
      }
    }
  }
  return inv;
}

// ---- change of basis ---------------------------------------------------

// For each space name, an invertible map T whose row i gives new basis
// vector i in old coordinates.
using BasisChange = std::map<std::string, LinearMap>;

inline LinearMap change_basis(const LinearMap& f, const BasisChange& bc) {
  auto leg_map = [&](const Space& s, bool input) {
    auto it = bc.find(s.name());
    if (it == bc.end()) return identity(s);
    if (input) return it->second;
    auto inv = inverse(to_matrix(it->second));
    if (!inv) throw std::invalid_argument("basis change for " + s.name() + " is singular");
    return from_matrix(s, s, *inv);
  };
  auto tensor_of = [&](const std::vector<Space>& legs, bool input) {
    LinearMap m = leg_map(legs[0], input);
    for (std::size_t k = 1; k < legs.size(); ++k) m = tp(m, leg_map(legs[k], input));
    return m;
  };
  LinearMap result = f;
  if (f.n_in() > 0) result = result * tensor_of(f.ins(), true);
  if (f.n_out() > 0) result = tensor_of(f.outs(), false) * result;
  return result;
}

}  // namespace ibx
