#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ibx {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A finite-dimensional space with a named, ordered basis. Copies share the
// label storage; equality is by name and labels.
class Space {
 public:
  Space() : impl_(std::make_shared<Impl>()) {}
  Space(std::string name, std::vector<std::string> labels)
      : impl_(std::make_shared<Impl>(Impl{std::move(name), std::move(labels)})) {
    std::set<std::string> seen(impl_->labels.begin(), impl_->labels.end());
    if (seen.size() != impl_->labels.size())
      throw std::invalid_argument("duplicate basis label in space " + impl_->name);
  }
  // Basis labelled name0, name1, ...
  static Space numbered(const std::string& name, int dim) {
    if (dim < 0) throw std::invalid_argument("negative dimension");
    std::vector<std::string> l;
    for (int i = 0; i < dim; ++i) l.push_back(name + std::to_string(i));
    return Space(name, std::move(l));
  }

  const std::string& name() const { return impl_->name; }
  const std::vector<std::string>& labels() const { return impl_->labels; }
  int dim() const { return static_cast<int>(impl_->labels.size()); }
  int index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (impl_->labels[i] == label) return i;
    throw std::out_of_range("no basis label '" + label + "' in " + name());
  }

  friend bool operator==(const Space& a, const Space& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->name == b.impl_->name && a.impl_->labels == b.impl_->labels);
  }

 private:
  struct Impl {
    std::string name;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Impl> impl_;
};

// Direct sum with the first summand's basis first. Labels are prefixed when
// the two summands share a label.
inline Space direct_sum(const Space& a, const Space& b, const std::string& name) {
  std::vector<std::string> l = a.labels();
  std::set<std::string> seen(l.begin(), l.end());
  bool clash = false;
  for (auto& s : b.labels()) clash = clash || seen.count(s);
  if (clash) {
    l.clear();
    for (auto& s : a.labels()) l.push_back(a.name() + ":" + s);
    for (auto& s : b.labels()) l.push_back(b.name() + ":" + s);
  } else {
    l.insert(l.end(), b.labels().begin(), b.labels().end());
  }
  return Space(name, std::move(l));
}

}  // namespace ibx
