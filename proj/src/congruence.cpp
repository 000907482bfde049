#include "wmi/congruence.hpp"

namespace wmi {

int CongruenceClosure::add(const ETerm& t) {
  if (auto it = by_key_.find(t.key()); it != by_key_.end()) return it->second;
  std::vector<int> args;
  for (const auto& a : t.args()) args.push_back(add(a));
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back({t, std::move(args)});
  parent_.push_back(id);
  by_key_.emplace(t.key(), id);
  return id;
}

int CongruenceClosure::find(int a) const {
  while (parent_[a] != a) {
    parent_[a] = parent_[parent_[a]];
    a = parent_[a];
  }
  return a;
}

void CongruenceClosure::merge(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
}

bool CongruenceClosure::close() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (!is_app(static_cast<int>(i))) continue;
      for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
        if (!is_app(static_cast<int>(j))) continue;
        const auto& a = nodes_[i];
        const auto& b = nodes_[j];
        if (a.term.name() != b.term.name() || a.args.size() != b.args.size()) continue;
        if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
        bool same = true;
        for (std::size_t k = 0; k < a.args.size() && same; ++k) same = find(a.args[k]) == find(b.args[k]);
        if (same) {
          merge(static_cast<int>(i), static_cast<int>(j));
          changed = true;
        }
      }
    }
  }
  std::map<int, const Rational*> constant_of;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].term.kind() != ETermKind::Const) continue;
    auto [it, fresh] = constant_of.emplace(find(static_cast<int>(i)), &nodes_[i].term.value());
    if (!fresh && *it->second != nodes_[i].term.value()) return false;
  }
  return true;
}

}  // namespace wmi
