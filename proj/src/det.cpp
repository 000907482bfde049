#include "wmi/det.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace wmi {

using nlohmann::json;

namespace {

Rational rational_field(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number()) return parse_rational(j.dump());
  throw std::invalid_argument(what + " must be a number or a \"p/q\" string");
}

struct Scope {
  std::map<std::string, const DetReal*> reals;
  std::set<std::string> bools;
};

std::shared_ptr<DetNode> parse_node(const json& j, const Scope& scope) {
  if (!j.is_object()) throw std::invalid_argument("tree node must be an object");
  auto node = std::make_shared<DetNode>();
  if (j.contains("density")) {
    node->density = rational_field(j.at("density"), "density");
    if (node->density < 0) throw std::invalid_argument("negative density");
    return node;
  }
  if (!j.contains("split") || !j.contains("left") || !j.contains("right"))
    throw std::invalid_argument("node needs either density or split/left/right");
  const json& s = j.at("split");
  if (s.contains("bool")) {
    node->kind = DetNode::Kind::BoolSplit;
    node->var = s.at("bool").get<std::string>();
    if (!scope.bools.count(node->var)) throw std::invalid_argument("undeclared Boolean '" + node->var + "'");
  } else {
    node->kind = DetNode::Kind::RealSplit;
    node->var = s.at("var").get<std::string>();
    auto it = scope.reals.find(node->var);
    if (it == scope.reals.end()) throw std::invalid_argument("undeclared real '" + node->var + "'");
    node->threshold = rational_field(s.at("threshold"), "threshold");
    if (node->threshold < it->second->lower || node->threshold > it->second->upper)
      throw std::invalid_argument("threshold of '" + node->var + "' outside its bounds");
  }
  node->left = parse_node(j.at("left"), scope);
  node->right = parse_node(j.at("right"), scope);
  return node;
}

json node_json(const DetNode& n) {
  json j;
  switch (n.kind) {
    case DetNode::Kind::Leaf: j["density"] = to_string(n.density); return j;
    case DetNode::Kind::RealSplit: j["split"] = {{"var", n.var}, {"threshold", to_string(n.threshold)}}; break;
    case DetNode::Kind::BoolSplit: j["split"] = {{"bool", n.var}}; break;
  }
  j["left"] = node_json(*n.left);
  j["right"] = node_json(*n.right);
  return j;
}

WeightTerm node_weight(const DetNode& n) {
  switch (n.kind) {
    case DetNode::Kind::Leaf: return WeightTerm::constant(n.density);
    case DetNode::Kind::RealSplit: {
      auto lit = make_lra_literal(LinearTerm::variable(n.var), RelOp::Lt, LinearTerm::constant_term(n.threshold));
      return WeightTerm::ite(Formula::literal(std::get<Literal>(lit)), node_weight(*n.left), node_weight(*n.right));
    }
    case DetNode::Kind::BoolSplit:
      return WeightTerm::ite(Formula::atom(Atom::boolean(n.var)), node_weight(*n.right), node_weight(*n.left));
  }
  return WeightTerm();
}

Rational dyadic(Rng& rng, const Rational& lo, const Rational& hi) {
  return lo + (hi - lo) * make_rational(static_cast<long>(rng.uniform(1, 15)), 16);
}

std::shared_ptr<DetNode> random_node(Rng& rng, const DetModel& m, unsigned depth) {
  auto node = std::make_shared<DetNode>();
  if (depth == 0) {
    node->density = make_rational(static_cast<long>(rng.uniform(1, 8)), 4);
    return node;
  }
  bool boolean = m.reals.empty() || (!m.bools.empty() && rng.coin());
  if (boolean) {
    node->kind = DetNode::Kind::BoolSplit;
    node->var = m.bools[rng.index(m.bools.size())];
  } else {
    const DetReal& r = m.reals[rng.index(m.reals.size())];
    node->kind = DetNode::Kind::RealSplit;
    node->var = r.name;
    node->threshold = dyadic(rng, r.lower, r.upper);
  }
  node->left = random_node(rng, m, depth - 1);
  node->right = random_node(rng, m, depth - 1);
  return node;
}

}  // namespace

Problem DetModel::problem() const {
  Problem p;
  std::vector<Formula> box;
  for (const auto& r : reals) {
    p.reals.push_back(r.name);
    auto x = LinearTerm::variable(r.name);
    box.push_back(Formula::literal(std::get<Literal>(make_lra_literal(x, RelOp::Ge, LinearTerm::constant_term(r.lower)))));
    box.push_back(Formula::literal(std::get<Literal>(make_lra_literal(x, RelOp::Le, LinearTerm::constant_term(r.upper)))));
  }
  p.bools = bools;
  p.phi = Formula::top();
  p.chi = Formula::land(std::move(box));
  p.weight = root ? node_weight(*root) : WeightTerm::constant(0);
  return p;
}

DetModel parse_det(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  try {
    DetModel m;
    Scope scope;
    std::set<std::string> names;
    for (const auto& r : j.at("reals")) {
      DetReal dr{r.at("name").get<std::string>(), rational_field(r.at("lower"), "lower"),
                 rational_field(r.at("upper"), "upper")};
      if (!(dr.lower < dr.upper)) throw std::invalid_argument("empty interval for '" + dr.name + "'");
      if (!names.insert(dr.name).second) throw std::invalid_argument("duplicate variable '" + dr.name + "'");
      m.reals.push_back(std::move(dr));
    }
    if (j.contains("bools")) {
      for (const auto& b : j.at("bools")) {
        auto name = b.get<std::string>();
        if (!names.insert(name).second) throw std::invalid_argument("duplicate variable '" + name + "'");
        m.bools.push_back(name);
      }
    }
    for (const auto& r : m.reals) scope.reals[r.name] = &r;
    scope.bools.insert(m.bools.begin(), m.bools.end());
    m.root = parse_node(j.at("root"), scope);
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid model: ") + e.what());
  }
}

std::string det_to_json(const DetModel& m) {
  json j;
  j["reals"] = json::array();
  for (const auto& r : m.reals)
    j["reals"].push_back({{"name", r.name}, {"lower", to_string(r.lower)}, {"upper", to_string(r.upper)}});
  j["bools"] = m.bools;
  j["root"] = node_json(*m.root);
  return j.dump(2) + "\n";
}

Rational det_query(const DetModel& m, const Formula& query, const WmiOptions& opt) {
  Problem p = m.problem();
  Rational total = sa_wmi_pa(p, opt).value;
  if (total == 0) throw std::domain_error("degenerate model: total mass is zero");
  p.phi = query;
  return sa_wmi_pa(p, opt).value / total;
}

Formula gen_query(const DetModel& m, double h, Rng& rng) {
  if (!(h >= 0 && h <= 1)) throw std::invalid_argument("H must lie in [0, 1]");
  if (m.reals.empty()) throw std::invalid_argument("model has no real variables");
  const std::size_t n = m.reals.size();
  std::size_t k = static_cast<std::size_t>(std::floor(h * static_cast<double>(n) + 1e-9));
  k = std::max<std::size_t>(1, std::min(k, n));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.index(n - i)]);

  LinearTerm lhs;
  Rational lo = 0, hi = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const DetReal& r = m.reals[idx[i]];
    Rational c(static_cast<long>(rng.nonzero(8)));
    lhs.coeffs[r.name] = c;
    lo += c > 0 ? c * r.lower : c * r.upper;
    hi += c > 0 ? c * r.upper : c * r.lower;
  }
  auto lit = make_lra_literal(lhs, RelOp::Le, LinearTerm::constant_term(dyadic(rng, lo, hi)));
  return Formula::literal(std::get<Literal>(lit));
}

DetModel random_det(Rng& rng, unsigned n_real, unsigned n_bool, unsigned depth) {
  DetModel m;
  for (unsigned i = 1; i <= n_real; ++i) m.reals.push_back({"x" + std::to_string(i), 0, 1});
  for (unsigned i = 1; i <= n_bool; ++i) m.bools.push_back("B" + std::to_string(i));
  m.root = random_node(rng, m, depth);
  return m;
}

}  // namespace wmi
