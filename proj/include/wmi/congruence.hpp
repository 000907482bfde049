#pragma once

#include <map>
#include <string>
#include <vector>

#include "wmi/atom.hpp"

namespace wmi {

/// Union-find over EUF terms with congruence propagation. Small and naive:
/// congruences are found by rescanning all application pairs.
class CongruenceClosure {
 public:
  /// Adds t and its subterms; returns the node id of t.
  int add(const ETerm& t);
  void merge(int a, int b);
  /// Propagates congruences to fixpoint. Returns false when a class ends up
  /// holding two distinct numeric constants.
  bool close();
  int find(int a) const;

  std::size_t size() const { return nodes_.size(); }
  const ETerm& term(int id) const { return nodes_[id].term; }
  const std::vector<int>& args(int id) const { return nodes_[id].args; }
  bool is_app(int id) const { return nodes_[id].term.kind() == ETermKind::App; }
  /// Reals and numeric constants: the members LRA knows about.
  bool is_arithmetic(int id) const {
    auto k = nodes_[id].term.kind();
    return k == ETermKind::Real || k == ETermKind::Const;
  }

 private:
  struct Node {
    ETerm term;
    std::vector<int> args;
  };
  std::vector<Node> nodes_;
  std::map<std::string, int> by_key_;
  mutable std::vector<int> parent_;
};

}  // namespace wmi
