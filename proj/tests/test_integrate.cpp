#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "properties.hpp"
#include "wmi/errors.hpp"
#include "wmi/generator.hpp"
#include "wmi/integrate.hpp"
#include "wmi/problem_io.hpp"

using namespace wmi;

namespace {

std::vector<Literal> lits(const std::string& text, const Problem& scope) {
  return conjunction_literals(parse_formula(text, scope));
}

Problem xy() { return parse_problem("(declare-real x) (declare-real y) (declare-real x1) (declare-real x2)"); }

Polynomial one(const std::vector<std::string>& vars) { return Polynomial::constant(vars, 1); }

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rational(x));
  return p;
}

using props::random_poly;
using props::random_polytope;
using props::simplex_volume;

}  // namespace

TEST_CASE("polytope_from_literals") {
  Problem p = fixtures::example1();
  auto box = polytope_from_literals(conjunction_literals(p.chi), p.reals);
  CHECK(box.dimension() == 2);
  CHECK(box.halfspaces.size() == 4);
  CHECK(as_set(polytope_vertices(box)) == std::set<Point>{pt({0, 0}), pt({2, 0}), pt({0, 3}), pt({2, 3})});

  Problem s = xy();
  auto empty = polytope_from_literals(lits("(and (>= x 1) (<= x 0))", s), {"x"});
  CHECK(polytope_vertices(empty).empty());
  CHECK(triangulate(empty).empty());
  CHECK(integrate_polytope(one({"x"}), empty) == 0);

  auto strip = lits("(and (< x2 1) (>= x1 0) (<= x1 2) (>= x2 0) (<= x2 3))", p);
  auto sp = polytope_from_literals(strip, p.reals);
  CHECK(as_set(polytope_vertices(sp)) == std::set<Point>{pt({0, 0}), pt({2, 0}), pt({0, 1}), pt({2, 1})});
  CHECK(integrate_polytope(one(p.reals), sp) == 2);

  CHECK_THROWS_AS(polytope_from_literals({Literal{Atom::boolean("A"), true}}, {"x"}), std::invalid_argument);
  auto ne = polytope_from_literals(lits("(and (>= x 0) (<= x 1) (!= x 0))", s), {"x"});
  CHECK(ne.halfspaces.size() == 2);
}

TEST_CASE("vertices of small polytopes") {
  Problem s = xy();
  std::vector<std::string> v = {"x", "y"};
  auto square = polytope_from_literals(lits("(and (>= x 0) (<= x 1) (>= y 0) (<= y 1))", s), v);
  CHECK(polytope_vertices(square).size() == 4);
  auto tri = polytope_from_literals(lits("(and (>= x 0) (>= y 0) (<= (+ x y) 1))", s), v);
  CHECK(as_set(polytope_vertices(tri)) == std::set<Point>{pt({0, 0}), pt({1, 0}), pt({0, 1})});

  Problem p = fixtures::example1();
  auto cut = polytope_from_literals(
      lits("(and (>= x1 0) (<= x1 2) (>= x2 0) (<= x2 3) (>= x1 1) (>= x2 1))", p), p.reals);
  CHECK(as_set(polytope_vertices(cut)) == std::set<Point>{pt({1, 1}), pt({2, 1}), pt({1, 3}), pt({2, 3})});
}

TEST_CASE("triangulation of the unit square") {
  Problem s = xy();
  auto square = polytope_from_literals(lits("(and (>= x 0) (<= x 1) (>= y 0) (<= y 1))", s), {"x", "y"});
  auto cells = triangulate(square);
  CHECK((cells.size() == 2 || cells.size() == 4));
  Rational vol = 0;
  for (const auto& c : cells) vol += simplex_volume(c);
  CHECK(vol == 1);

  auto slice = polytope_from_literals(lits("(and (= x 1) (>= y 0) (<= y 1))", s), {"x", "y"});
  CHECK(integrate_polytope(one({"x", "y"}), slice) == 0);
}

TEST_CASE("integrate_simplex golden values") {
  SimplexCell std2{{pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  CHECK(integrate_simplex(one({"x", "y"}), std2) == Rational(1, 2));
  SimplexCell seg{{pt({0}), pt({1})}};
  CHECK(integrate_simplex(Polynomial::variable({"x"}, "x"), seg) == Rational(1, 2));

  std::vector<std::string> v = {"x1", "x2"};
  Polynomial x1x2 = Polynomial::variable(v, "x1") * Polynomial::variable(v, "x2");
  SimplexCell a{{pt({0, 0}), pt({1, 0}), pt({1, 1})}};
  SimplexCell b{{pt({0, 0}), pt({0, 1}), pt({1, 1})}};
  CHECK(integrate_simplex(x1x2, a) + integrate_simplex(x1x2, b) == Rational(1, 4));
}

TEST_CASE("wmi_nb examples") {
  Problem p = fixtures::example1();
  CHECK(wmi_nb(conjunction_literals(p.chi), WeightTerm::constant(1), p.reals) == 6);
  Problem s = xy();
  CHECK(wmi_nb(lits("(and (>= x 0) (<= x 1))", s), WeightTerm::var("x")) == Rational(1, 2));
  try {
    wmi_nb(lits("(>= x 0)", s), WeightTerm::constant(1));
    FAIL("expected UnboundedRegion");
  } catch (const UnboundedRegion& e) {
    REQUIRE(e.ray().size() == 1);
    CHECK(e.ray()[0] > 0);
  }
  CHECK_THROWS_AS(wmi_nb(lits("(and (>= x 0) (<= x 1))", s), WeightTerm::func("exp", {WeightTerm::var("x")})),
                  NonPolynomialWeight);
  CHECK_THROWS_AS(wmi_nb(lits("(and (>= x 0) (<= x 1))", s), WeightTerm::constant(1) / WeightTerm::var("x")),
                  NonPolynomialWeight);
}

TEST_CASE("dimension cap") {
  std::vector<std::string> v;
  std::string text = "(and";
  std::string decl, sum = "(+";
  for (int i = 1; i <= 9; ++i) {
    v.push_back("z" + std::to_string(i));
    decl += "(declare-real z" + std::to_string(i) + ")";
    text += " (>= z" + std::to_string(i) + " 0)";
    sum += " z" + std::to_string(i);
  }
  Problem s = parse_problem(decl);
  auto l = lits(text + " (<= " + sum + ") 1))", s);
  CHECK_THROWS_AS(wmi_nb(l, WeightTerm::constant(1), v), CapExceeded);
  IntegratorOptions opt;
  opt.max_dimension = 9;
  CHECK(wmi_nb(l, WeightTerm::constant(1), v, opt) == Rational(1, 362880));
}

TEST_CASE("box monomials match the iterated-integral oracle") {
  oracle::Gen g(3);
  for (int round = 0; round < 40; ++round) {
    std::size_t d = 1 + round % 3;
    std::vector<std::string> vars;
    HPolytope box;
    std::vector<Rational> lo, hi;
    std::vector<unsigned> e;
    for (std::size_t i = 0; i < d; ++i) {
      vars.push_back("x" + std::to_string(i + 1));
      Rational a = make_rational(g.range(-6, 4), 2);
      Rational b = a + make_rational(g.range(1, 6), 3);
      lo.push_back(a);
      hi.push_back(b);
      e.push_back(static_cast<unsigned>(g.range(0, 3)));
    }
    box.vars = vars;
    for (std::size_t i = 0; i < d; ++i) {
      Halfspace l, h;
      l.a.assign(d, 0);
      h.a.assign(d, 0);
      l.a[i] = -1;
      l.b = -lo[i];
      h.a[i] = 1;
      h.b = hi[i];
      box.halfspaces.push_back(l);
      box.halfspaces.push_back(h);
    }
    Polynomial m(vars);
    m.add_term(e, 1);
    CAPTURE(round);
    CHECK(integrate_polytope(m, box) == oracle::box_monomial(e, lo, hi));
  }
}

TEST_CASE("affine invariance: unit weight over a simplex is |det|/d!") {
  oracle::Gen g(9);
  for (int round = 0; round < 30; ++round) {
    std::size_t d = 1 + round % 3;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i));
    SimplexCell s;
    for (std::size_t k = 0; k <= d; ++k) {
      Point p;
      for (std::size_t i = 0; i < d; ++i) p.push_back(make_rational(g.range(-9, 9), g.range(1, 4)));
      s.vertices.push_back(p);
    }
    CHECK(integrate_simplex(one(vars), s) == simplex_volume(s));
  }
}

TEST_CASE("additivity, strictness and linearity on random polytopes") {
  oracle::Gen g(21);
  for (int round = 0; round < 40; ++round) {
    std::size_t d = 1 + round % 3;
    HPolytope p = random_polytope(d, g);
    Polynomial f = random_poly(p.vars, 3, g);
    Polynomial h = random_poly(p.vars, 2, g);
    CAPTURE(round);
    Rational whole = integrate_polytope(f, p);

    CHECK(props::split_additive(f, p, g));

    HPolytope closed = p;
    for (auto& hs : closed.halfspaces)
      if (hs.rel == Rel::Lt) hs.rel = Rel::Le;
    CHECK(integrate_polytope(f, closed) == whole);

    CHECK(integrate_polytope(f + h, p) == whole + integrate_polytope(h, p));
  }
}

TEST_CASE("monte carlo cross-check within three standard errors") {
  oracle::Gen g(77);
  std::mt19937_64 eng(2024);
  for (int round = 0; round < 12; ++round) {
    HPolytope p = random_polytope(2 + round % 2, g);
    Polynomial f = random_poly(p.vars, 3, g);
    auto mc = props::monte_carlo(f, p, eng, 40000);
    CAPTURE(round);
    CAPTURE(mc.exact);
    CAPTURE(mc.estimate);
    CHECK(mc.within(3));
  }
}
