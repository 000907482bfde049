#include "wmi/simplex.hpp"

#include <stdexcept>

namespace wmi {

LraConstraint constraint_of(const Literal& l) {
  if (!l.atom.is_lra()) throw std::invalid_argument("not an LRA literal: " + literal_to_string(l));
  LraConstraint c{l.atom.lhs(), RelOp::Le, l.atom.rhs()};
  switch (l.atom.rel()) {
    case Rel::Le: c.op = l.positive ? RelOp::Le : RelOp::Gt; break;
    case Rel::Lt: c.op = l.positive ? RelOp::Lt : RelOp::Ge; break;
    case Rel::Eq: c.op = l.positive ? RelOp::Eq : RelOp::Ne; break;
  }
  return c;
}

namespace {

// c + k*delta for a positive infinitesimal delta.
struct DR {
  Rational c, k;
};

bool operator<(const DR& a, const DR& b) { return a.c < b.c || (a.c == b.c && a.k < b.k); }
bool operator>(const DR& a, const DR& b) { return b < a; }
DR operator+(const DR& a, const DR& b) { return {a.c + b.c, a.k + b.k}; }
DR operator-(const DR& a, const DR& b) { return {a.c - b.c, a.k - b.k}; }
DR operator*(const DR& a, const Rational& r) { return {a.c * r, a.k * r}; }

std::string row_key(const std::map<std::string, Rational>& coeffs) {
  std::string s;
  for (const auto& [v, c] : coeffs) s += v + "*" + c.get_str() + ";";
  return s;
}

class Tableau {
 public:
  // Returns false when the bounds are already contradictory.
  bool build(const std::vector<LraConstraint>& cs) {
    std::map<std::string, int> index;
    for (const auto& c : cs)
      for (const auto& [v, _] : c.lhs.coeffs) index.emplace(v, 0);
    for (auto& [v, i] : index) {
      i = static_cast<int>(names_.size());
      names_.push_back(v);
    }
    n_orig_ = static_cast<int>(names_.size());
    lo_.resize(n_orig_);
    hi_.resize(n_orig_);

    std::map<std::string, int> slack_of;
    std::vector<std::map<std::string, Rational>> slack_rows;
    for (const auto& c : cs) {
      if (c.op == RelOp::Ne) throw std::invalid_argument("disequality passed to the simplex");
      Rational rhs = c.rhs - c.lhs.constant;
      const auto& coeffs = c.lhs.coeffs;
      if (coeffs.empty()) {
        if (!holds(Rational(0), c.op, rhs)) return false;
        continue;
      }
      if (coeffs.size() == 1) {
        const auto& [v, a] = *coeffs.begin();
        add_bound(index.at(v), a < 0 ? flip(c.op) : c.op, rhs / a);
        continue;
      }
      std::string key = row_key(coeffs);
      auto it = slack_of.find(key);
      int s;
      if (it == slack_of.end()) {
        s = static_cast<int>(names_.size());
        names_.push_back("$s" + std::to_string(s));
        lo_.emplace_back();
        hi_.emplace_back();
        slack_of.emplace(key, s);
        slack_rows.push_back(coeffs);
      } else {
        s = it->second;
      }
      add_bound(s, c.op, rhs);
    }

    const int total = static_cast<int>(names_.size());
    row_of_.assign(total, -1);
    val_.assign(total, DR{});
    for (int v = 0; v < n_orig_; ++v) {
      if (lo_[v])
        val_[v] = *lo_[v];
      else if (hi_[v])
        val_[v] = *hi_[v];
    }
    for (int r = 0; r < static_cast<int>(slack_rows.size()); ++r) {
      std::vector<Rational> row(total);
      for (const auto& [v, a] : slack_rows[r]) row[index.at(v)] = a;
      int s = n_orig_ + r;
      rows_.push_back(std::move(row));
      basic_.push_back(s);
      row_of_[s] = r;
    }
    for (int v = 0; v < total; ++v)
      if (lo_[v] && hi_[v] && *hi_[v] < *lo_[v]) return false;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) val_[basic_[r]] = row_value(r);
    return true;
  }

  bool solve() {
    for (;;) {
      int r = -1;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        int b = basic_[i];
        if (violated(b) && (r < 0 || b < basic_[r])) r = i;
      }
      if (r < 0) return true;
      int xi = basic_[r];
      bool increase = lo_[xi] && val_[xi] < *lo_[xi];
      int j = -1;
      const auto& row = rows_[r];
      for (int v = 0; v < static_cast<int>(row.size()); ++v) {
        if (row_of_[v] >= 0 || row[v] == 0) continue;
        bool up = (row[v] > 0) == increase;  // direction v must move in
        if (up ? (!hi_[v] || val_[v] < *hi_[v]) : (!lo_[v] || val_[v] > *lo_[v])) {
          j = v;
          break;
        }
      }
      if (j < 0) return false;
      pivot_and_update(r, j, increase ? *lo_[xi] : *hi_[xi]);
    }
  }

  Model model() const {
    Rational delta = 1;
    for (int v = 0; v < static_cast<int>(val_.size()); ++v) {
      const DR& x = val_[v];
      if (lo_[v] && lo_[v]->c < x.c && lo_[v]->k > x.k) {
        Rational d = (x.c - lo_[v]->c) / (lo_[v]->k - x.k);
        if (d < delta) delta = d;
      }
      if (hi_[v] && x.c < hi_[v]->c && x.k > hi_[v]->k) {
        Rational d = (hi_[v]->c - x.c) / (x.k - hi_[v]->k);
        if (d < delta) delta = d;
      }
    }
    Model m;
    for (int v = 0; v < n_orig_; ++v) m[names_[v]] = val_[v].c + val_[v].k * delta;
    return m;
  }

 private:
  static bool holds(const Rational& a, RelOp op, const Rational& b) {
    switch (op) {
      case RelOp::Le: return a <= b;
      case RelOp::Lt: return a < b;
      case RelOp::Eq: return a == b;
      case RelOp::Ne: return a != b;
      case RelOp::Ge: return a >= b;
      case RelOp::Gt: return a > b;
    }
    return false;
  }

  static RelOp flip(RelOp op) {
    switch (op) {
      case RelOp::Le: return RelOp::Ge;
      case RelOp::Lt: return RelOp::Gt;
      case RelOp::Ge: return RelOp::Le;
      case RelOp::Gt: return RelOp::Lt;
      default: return op;
    }
  }

  void tighten_lo(int v, const DR& b) {
    if (!lo_[v] || *lo_[v] < b) lo_[v] = b;
  }
  void tighten_hi(int v, const DR& b) {
    if (!hi_[v] || b < *hi_[v]) hi_[v] = b;
  }

  void add_bound(int v, RelOp op, const Rational& b) {
    switch (op) {
      case RelOp::Le: tighten_hi(v, {b, 0}); break;
      case RelOp::Lt: tighten_hi(v, {b, -1}); break;
      case RelOp::Ge: tighten_lo(v, {b, 0}); break;
      case RelOp::Gt: tighten_lo(v, {b, 1}); break;
      case RelOp::Eq:
        tighten_lo(v, {b, 0});
        tighten_hi(v, {b, 0});
        break;
      case RelOp::Ne: break;
    }
  }

  bool violated(int v) const { return (lo_[v] && val_[v] < *lo_[v]) || (hi_[v] && val_[v] > *hi_[v]); }

  DR row_value(int r) const {
    DR s;
    const auto& row = rows_[r];
    for (int v = 0; v < static_cast<int>(row.size()); ++v)
      if (row[v] != 0) s = s + val_[v] * row[v];
    return s;
  }

  void pivot_and_update(int r, int j, const DR& target) {
    int xi = basic_[r];
    Rational a = rows_[r][j];
    DR theta = (target - val_[xi]) * (1 / a);
    val_[xi] = target;
    val_[j] = val_[j] + theta;
    for (int k = 0; k < static_cast<int>(rows_.size()); ++k)
      if (k != r && rows_[k][j] != 0) val_[basic_[k]] = val_[basic_[k]] + theta * rows_[k][j];
    pivot(r, j);
  }

  void pivot(int r, int j) {
    int xi = basic_[r];
    auto& row = rows_[r];
    Rational inv = 1 / row[j];
    for (auto& c : row)
      if (c != 0) c = -c * inv;
    row[j] = 0;
    row[xi] = inv;
    basic_[r] = j;
    row_of_[j] = r;
    row_of_[xi] = -1;
    for (int k = 0; k < static_cast<int>(rows_.size()); ++k) {
      if (k == r) continue;
      Rational c = rows_[k][j];
      if (c == 0) continue;
      auto& other = rows_[k];
      other[j] = 0;
      for (int v = 0; v < static_cast<int>(row.size()); ++v)
        if (row[v] != 0) other[v] += c * row[v];
    }
  }

  std::vector<std::string> names_;
  int n_orig_ = 0;
  std::vector<std::optional<DR>> lo_, hi_;
  std::vector<DR> val_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basic_;
  std::vector<int> row_of_;
};

LraConstraint sign_constraint(const LinearTerm& t, RelOp op) {
  LinearTerm lhs = t;
  Rational rhs = -lhs.constant;
  lhs.constant = 0;
  return {lhs, op, rhs};
}

Rational eval_default(const LinearTerm& t, const Model& m) {
  Rational r = t.constant;
  for (const auto& [v, c] : t.coeffs) {
    auto it = m.find(v);
    if (it != m.end()) r += c * it->second;
  }
  return r;
}

}  // namespace

bool Simplex::feasible(const std::vector<LraConstraint>& cs, Model* model) {
  Tableau t;
  if (!t.build(cs) || !t.solve()) return false;
  if (model) *model = t.model();
  return true;
}

bool lra_feasible(const std::vector<LraConstraint>& cs) {
  std::vector<LraConstraint> base;
  std::vector<const LraConstraint*> ne;
  for (const auto& c : cs) {
    if (c.op == RelOp::Ne)
      ne.push_back(&c);
    else
      base.push_back(c);
  }
  if (!Simplex::feasible(base)) return false;
  for (const auto* c : ne) {
    base.push_back({c->lhs, RelOp::Lt, c->rhs});
    bool below = Simplex::feasible(base);
    base.back().op = RelOp::Gt;
    bool ok = below || Simplex::feasible(base);
    base.pop_back();
    if (!ok) return false;
  }
  return true;
}

bool lra_entails_equal(const std::vector<LraConstraint>& cs, const LinearTerm& a, const LinearTerm& b) {
  LinearTerm d = a - b;
  std::vector<LraConstraint> probe = cs;
  probe.push_back(sign_constraint(d, RelOp::Lt));
  if (Simplex::feasible(probe)) return false;
  probe.back() = sign_constraint(d, RelOp::Gt);
  return !Simplex::feasible(probe);
}

std::optional<Model> lra_generic_model(const std::vector<LraConstraint>& cs, const std::vector<LinearTerm>& avoid) {
  std::vector<LraConstraint> base;
  std::vector<std::pair<LinearTerm, bool>> planes;  // (t, must avoid)
  for (const auto& c : cs) {
    if (c.op == RelOp::Ne) {
      LinearTerm t = c.lhs;
      t.constant -= c.rhs;
      planes.push_back({t, true});
    } else {
      base.push_back(c);
    }
  }
  for (const auto& t : avoid) planes.push_back({t, false});

  Model p;
  if (!Simplex::feasible(base, &p)) return std::nullopt;
  std::vector<const LinearTerm*> kept;
  for (const auto& [t, must] : planes) {
    if (eval_default(t, p) != 0) {
      kept.push_back(&t);
      continue;
    }
    Model q;
    std::vector<LraConstraint> probe = base;
    probe.push_back(sign_constraint(t, RelOp::Lt));
    bool found = Simplex::feasible(probe, &q);
    if (!found) {
      probe.back() = sign_constraint(t, RelOp::Gt);
      found = Simplex::feasible(probe, &q);
    }
    if (!found) {
      if (must) return std::nullopt;
      continue;
    }
    for (const auto& [v, _] : p) q.emplace(v, 0);
    for (const auto& [v, _] : q) p.emplace(v, 0);
    kept.push_back(&t);
    // Move towards q; each kept plane rules out at most one step size.
    for (unsigned n = 1;; ++n) {
      Rational step(1, n);
      Model cand;
      for (const auto& [v, pv] : p) cand[v] = pv + step * (q.at(v) - pv);
      bool ok = true;
      for (const auto* k : kept)
        if (eval_default(*k, cand) == 0) {
          ok = false;
          break;
        }
      if (ok) {
        p = std::move(cand);
        break;
      }
    }
  }
  return p;
}

}  // namespace wmi
