#include "wmi/integrate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wmi/errors.hpp"
#include "wmi/simplex.hpp"

namespace wmi {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Row echelon in place; returns the rank and accumulates the determinant
// sign/product when the matrix is square.
std::size_t eliminate(Matrix& m, Rational* det = nullptr) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  if (det) *det = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) {
      if (det) *det = 0;
      continue;
    }
    if (piv != rank) {
      std::swap(m[piv], m[rank]);
      if (det) *det = -*det;
    }
    if (det) *det *= m[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  if (det && rank < rows) *det = 0;
  return rank;
}

// Unique solution of the square system a x = b, if any.
std::optional<Point> solve(Matrix a, Point b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Point x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

Rational dot(const std::vector<Rational>& a, const Point& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

std::size_t affine_rank(const std::vector<Point>& pts) {
  if (pts.size() < 2) return 0;
  Matrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(pts[0].size());
    for (std::size_t k = 0; k < row.size(); ++k) row[k] = pts[i][k] - pts[0][k];
    m.push_back(std::move(row));
  }
  return eliminate(m);
}

LinearTerm row_term(const std::vector<Rational>& a, const std::vector<std::string>& vars) {
  LinearTerm t;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) t.coeffs[vars[i]] = a[i];
  return t;
}

class Triangulator {
 public:
  Triangulator(const HPolytope& p, std::vector<Point> verts) : verts_(std::move(verts)) {
    for (const auto& h : p.halfspaces) {
      std::vector<std::size_t> on;
      for (std::size_t v = 0; v < verts_.size(); ++v)
        if (dot(h.a, verts_[v]) == h.b) on.push_back(v);
      tight_.push_back(std::move(on));
    }
  }

  std::vector<std::vector<Point>> run(const std::vector<std::size_t>& face, std::size_t k) const {
    if (face.size() == k + 1) {
      std::vector<Point> s;
      for (auto v : face) s.push_back(verts_[v]);
      return {s};
    }
    std::set<std::vector<std::size_t>> facets;
    for (const auto& on : tight_) {
      std::vector<std::size_t> sub;
      std::set_intersection(face.begin(), face.end(), on.begin(), on.end(), std::back_inserter(sub));
      if (sub.size() < k || sub.size() == face.size()) continue;
      if (affine_rank(points(sub)) + 1 == k) facets.insert(std::move(sub));
    }
    Point c(verts_[0].size());
    for (auto v : face)
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += verts_[v][i];
    for (auto& x : c) x /= static_cast<unsigned long>(face.size());
    std::vector<std::vector<Point>> out;
    for (const auto& f : facets) {
      for (auto& s : run(f, k - 1)) {
        s.push_back(c);
        out.push_back(std::move(s));
      }
    }
    return out;
  }

  std::vector<Point> points(const std::vector<std::size_t>& ids) const {
    std::vector<Point> out;
    for (auto v : ids) out.push_back(verts_[v]);
    return out;
  }

 private:
  std::vector<Point> verts_;
  std::vector<std::vector<std::size_t>> tight_;  // sorted vertex ids per halfspace
};

void collect_reals(const WeightTerm& w, std::set<std::string>& out) {
  if (w.kind() == TKind::Var) out.insert(w.name());
  for (const auto& a : w.args()) collect_reals(a, out);
}

}  // namespace

HPolytope polytope_from_literals(const std::vector<Literal>& lits, const std::vector<std::string>& vars) {
  HPolytope p;
  p.vars = vars;
  std::set<std::pair<std::vector<Rational>, std::pair<int, Rational>>> seen;
  for (const auto& l : lits) {
    if (!l.atom.valid() || !l.atom.is_lra())
      throw std::invalid_argument("not an arithmetic literal: " + literal_to_string(l));
    Halfspace h;
    h.a.assign(vars.size(), Rational(0));
    for (const auto& [name, c] : l.atom.lhs().coeffs) {
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw std::invalid_argument("variable '" + name + "' is not integrated over");
      h.a[static_cast<std::size_t>(it - vars.begin())] = c;
    }
    h.b = l.atom.rhs();
    h.rel = l.atom.rel();
    if (!l.positive) {
      if (h.rel == Rel::Eq) continue;
      for (auto& x : h.a) x = -x;
      h.b = -h.b;
      h.rel = h.rel == Rel::Le ? Rel::Lt : Rel::Le;
    }
    if (seen.insert({h.a, {static_cast<int>(h.rel), h.b}}).second) p.halfspaces.push_back(std::move(h));
  }
  return p;
}

std::vector<Point> polytope_vertices(const HPolytope& p) {
  const std::size_t d = p.dimension();
  const std::size_t m = p.halfspaces.size();
  std::set<Point> found;
  if (d == 0) return {Point{}};
  if (m < d) return {};
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    Matrix a;
    Point b;
    for (auto i : idx) {
      a.push_back(p.halfspaces[i].a);
      b.push_back(p.halfspaces[i].b);
    }
    if (auto x = solve(std::move(a), std::move(b))) {
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i) inside = dot(p.halfspaces[i].a, *x) <= p.halfspaces[i].b;
      if (inside) found.insert(std::move(*x));
    }
    std::size_t k = d;
    while (k > 0 && idx[k - 1] == m - d + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::vector<SimplexCell> triangulate(const HPolytope& p) {
  auto verts = polytope_vertices(p);
  const std::size_t d = p.dimension();
  if (verts.size() < d + 1) return {};
  Triangulator t(p, verts);
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_rank(verts) < d) return {};
  std::vector<SimplexCell> out;
  for (auto& s : t.run(all, d)) out.push_back({std::move(s)});
  return out;
}

Rational integrate_simplex(const Polynomial& poly, const SimplexCell& s) {
  if (s.vertices.empty()) throw std::invalid_argument("empty simplex");
  const std::size_t d = s.vertices.size() - 1;
  if (poly.vars().size() != d) throw std::invalid_argument("simplex dimension does not match the polynomial");
  if (d == 0) return poly.eval({});
  const Point& v0 = s.vertices[0];

  Matrix m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[j][i] = s.vertices[i + 1][j] - v0[j];
  Rational det;
  Matrix tmp = m;
  eliminate(tmp, &det);
  if (det == 0) return 0;
  if (det < 0) det = -det;

  // x_j = v0_j + sum_i m[j][i] u_i, integrated over the standard simplex.
  std::vector<std::string> uvars;
  for (std::size_t i = 0; i < d; ++i) uvars.push_back("u" + std::to_string(i));
  std::vector<std::vector<Polynomial>> powers(d);
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial lin = Polynomial::constant(uvars, v0[j]);
    for (std::size_t i = 0; i < d; ++i) {
      Polynomial::Exponents e(d, 0);
      e[i] = 1;
      lin.add_term(e, m[j][i]);
    }
    powers[j].push_back(Polynomial::constant(uvars, 1));
    powers[j].push_back(std::move(lin));
  }
  auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
    while (powers[j].size() <= e) powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][e];
  };

  Polynomial pulled(uvars);
  for (const auto& [e, c] : poly.terms()) {
    Polynomial t = Polynomial::constant(uvars, c);
    for (std::size_t j = 0; j < d; ++j)
      if (e[j]) t = t * power(j, e[j]);
    pulled += t;
  }

  std::vector<Rational> fact = {1};
  auto factorial_of = [&](std::size_t n) -> const Rational& {
    while (fact.size() <= n) fact.push_back(fact.back() * static_cast<unsigned long>(fact.size()));
    return fact[n];
  };
  Rational sum = 0;
  for (const auto& [e, c] : pulled.terms()) {
    Rational num = c;
    std::size_t total = d;
    for (unsigned a : e) {
      num *= factorial_of(a);
      total += a;
    }
    sum += num / factorial_of(total);
  }
  return sum * det;
}

Rational integrate_polytope(const Polynomial& poly, const HPolytope& p, const IntegratorOptions& opt) {
  const std::size_t d = p.dimension();
  if (poly.vars() != p.vars) throw std::invalid_argument("polynomial and polytope use different variables");
  if (d > opt.max_dimension)
    throw CapExceeded("dimension " + std::to_string(d) + " exceeds the cap of " + std::to_string(opt.max_dimension));
  for (const auto& h : p.halfspaces)
    if (h.rel == Rel::Eq) return 0;
  if (d == 0) return poly.eval({});
  if (poly.is_zero()) return 0;

  std::vector<LraConstraint> interior;
  for (const auto& h : p.halfspaces) interior.push_back({row_term(h.a, p.vars), RelOp::Lt, h.b});
  if (!Simplex::feasible(interior)) return 0;

  for (std::size_t j = 0; j < d; ++j) {
    for (int sign : {1, -1}) {
      std::vector<LraConstraint> cone;
      for (const auto& h : p.halfspaces) cone.push_back({row_term(h.a, p.vars), RelOp::Le, 0});
      cone.push_back({LinearTerm::variable(p.vars[j]), sign > 0 ? RelOp::Ge : RelOp::Le, Rational(sign)});
      Model ray;
      if (Simplex::feasible(cone, &ray)) {
        std::vector<Rational> r;
        for (const auto& v : p.vars) r.push_back(ray.count(v) ? ray[v] : Rational(0));
        throw UnboundedRegion("integration region is unbounded along " + p.vars[j], std::move(r));
      }
    }
  }

  Rational total = 0;
  for (const auto& cell : triangulate(p)) total += integrate_simplex(poly, cell);
  return total;
}

std::vector<std::string> weight_reals(const WeightTerm& w) {
  std::set<std::string> s;
  collect_reals(w, s);
  return {s.begin(), s.end()};
}

Rational wmi_nb(const std::vector<Literal>& lits, const WeightTerm& w, const std::vector<std::string>& vars,
                const IntegratorOptions& opt) {
  std::vector<std::string> vs = vars;
  if (vs.empty()) {
    std::set<std::string> s;
    collect_reals(w, s);
    for (const auto& l : lits)
      if (l.atom.valid() && l.atom.is_lra())
        for (const auto& [name, _] : l.atom.lhs().coeffs) s.insert(name);
    vs.assign(s.begin(), s.end());
  }
  Polynomial poly = polynomial_from_weight(w, vs);
  return integrate_polytope(poly, polytope_from_literals(lits, vs), opt);
}

}  // namespace wmi
