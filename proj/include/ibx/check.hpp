#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "ibx/linear_map.hpp"

namespace ibx {

struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A labelled identity, stored as the map "right side minus left side" taken
// over the identity's free variables. It holds iff the map is zero.
struct Condition {
  std::string id;
  LinearMap residual;
};

struct Violation {
  std::string condition;
  Index inputs;     // basis tuple on which the identity fails
  Tensor residual;  // right side minus left side at that tuple
};

struct CheckReport {
  std::vector<std::string> checked;  // condition ids, in evaluation order
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool holds(const std::string& id) const {
    for (auto& v : violations)
      if (v.condition == id) return false;
    return true;
  }
  // Distinct failing condition ids, in evaluation order.
  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (auto& v : violations)
      if (std::find(out.begin(), out.end(), v.condition) == out.end())
        out.push_back(v.condition);
    return out;
  }
  bool has(const std::string& id) const {
    return std::find(checked.begin(), checked.end(), id) != checked.end();
  }
  CheckReport& operator+=(const CheckReport& o) {
    checked.insert(checked.end(), o.checked.begin(), o.checked.end());
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    return *this;
  }
  // Only the listed condition ids.
  CheckReport restricted(const std::vector<std::string>& ids) const {
    CheckReport r;
    std::set<std::string> keep(ids.begin(), ids.end());
    for (auto& c : checked)
      if (keep.count(c)) r.checked.push_back(c);
    for (auto& v : violations)
      if (keep.count(v.condition)) r.violations.push_back(v);
    return r;
  }
};

inline CheckReport evaluate(const Condition& c) {
  CheckReport rep;
  rep.checked.push_back(c.id);
  const LinearMap& m = c.residual;
  const std::size_t os = m.out_size();
  Tensor in_shape(m.ins());
  std::size_t current = static_cast<std::size_t>(-1);
  for (auto& [flat, v] : m.tensor().entries()) {
    const std::size_t r = flat / os;
    if (r != current) {
      current = r;
      rep.violations.push_back({c.id, in_shape.unflat(r), Tensor(m.outs())});
    }
    rep.violations.back().residual.set_flat(flat % os, v);
  }
  return rep;
}

inline CheckReport evaluate(const std::vector<Condition>& cs) {
  CheckReport rep;
  for (auto& c : cs) rep += evaluate(c);
  return rep;
}

}  // namespace ibx
