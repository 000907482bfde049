#pragma once

#include <string>
#include <vector>

#include "wmi/polynomial.hpp"

namespace wmi {

using Point = std::vector<Rational>;

/// a . x rel b over an ordered variable list.
struct Halfspace {
  std::vector<Rational> a;
  Rel rel = Rel::Le;
  Rational b;
};

struct HPolytope {
  std::vector<std::string> vars;
  std::vector<Halfspace> halfspaces;
  std::size_t dimension() const { return vars.size(); }
};

/// Conjunction of LRA literals as halfspaces. Negated equalities are dropped
/// (they only remove a null set); any other atom kind is rejected.
HPolytope polytope_from_literals(const std::vector<Literal>& lits, const std::vector<std::string>& vars);

/// Vertices of the closure of a bounded polytope, by brute force over all
/// d-subsets of the constraints.
std::vector<Point> polytope_vertices(const HPolytope& p);

struct SimplexCell {
  std::vector<Point> vertices;  // d + 1 points
};

/// Triangulation of the closure of a bounded, full-dimensional polytope by
/// recursive centroid fans over its faces.
std::vector<SimplexCell> triangulate(const HPolytope& p);

/// Exact integral of a polynomial over a d-simplex.
Rational integrate_simplex(const Polynomial& poly, const SimplexCell& s);

struct IntegratorOptions {
  std::size_t max_dimension = 8;
};

/// Exact integral of `poly` over the region of `p`. Null sets (equalities,
/// empty interior) give 0. Throws UnboundedRegion or CapExceeded.
Rational integrate_polytope(const Polynomial& poly, const HPolytope& p, const IntegratorOptions& opt = {});

/// Real variables occurring in a weight, sorted.
std::vector<std::string> weight_reals(const WeightTerm& w);

/// Integral of an FI weight over the conjunction of LRA literals. Integrates
/// over `vars` when given, otherwise over the variables of lits and w.
Rational wmi_nb(const std::vector<Literal>& lits, const WeightTerm& w, const std::vector<std::string>& vars = {},
                const IntegratorOptions& opt = {});

}  // namespace wmi
