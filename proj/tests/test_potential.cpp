#include "catch_amalgamated.hpp"

#include "bqm/mutation_class.hpp"
#include "bqm/potential.hpp"

using namespace bqm;

namespace {
  quiver make(std::vector<vertex> vs, std::vector<std::pair<int, int>> as) {
    std::vector<arrow> out;
    for (auto [s, t] : as) out.push_back({s, t});
    return quiver(std::move(vs), std::move(out));
  }

  // abc on a:1->2, b:2->3, c:3->1
  qp triangle(rational c) {
    return qp({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}, {{{"a", "b", "c"}, c}});
  }

  path_sum named(qp const& x, std::vector<std::pair<std::vector<std::string>, int>> ps) {
    path_sum s;
    for (auto const& [names, c] : ps) {
      path p;
      for (auto const& n : names) p.push_back(x.arrow_index(n));
      add_to(s, p, rational(c));
    }
    return s;
  }

  path_sum cycles(qp const& x, std::vector<std::pair<std::vector<std::string>, int>> ps) {
    path_sum s;
    for (auto const& [p, c] : named(x, ps)) add_to(s, canonical_rotation(p), c);
    return s;
  }
}  // namespace

TEST_CASE("rationals", "[qp]") {
  REQUIRE(parse_rational("-1") == rational(-1));
  REQUIRE(parse_rational("2/4") == rational(1, 2));
  REQUIRE(to_string(rational(-3, 6)) == "-1/2");
  REQUIRE_THROWS_AS(parse_rational("1/0"), input_error);
  REQUIRE_THROWS_AS(parse_rational("x"), input_error);
}

TEST_CASE("potentials are stored up to rotation", "[qp]") {
  qp x({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}},
       {{{"b", "c", "a"}, rational(1)}, {{"c", "a", "b"}, rational(2)}});
  REQUIRE(x.terms().size() == 1);
  REQUIRE(x.terms().begin()->second == rational(3));
  REQUIRE(x.terms().begin()->first == path{0, 1, 2});
  qp z({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}},
       {{{"b", "c", "a"}, rational(1)}, {{"a", "b", "c"}, rational(-1)}});
  REQUIRE(z.terms().empty());
  REQUIRE_THROWS_AS(qp({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}}, {{{"a", "b"}, rational(1)}}),
                    input_error);
  REQUIRE_THROWS_AS(qp({1, 2}, {{"a", 1, 2}, {"a", 2, 1}}), input_error);
  REQUIRE_THROWS_AS(triangle(1).arrow_index("d"), input_error);
}

TEST_CASE("cyclic derivatives", "[qp]") {
  auto w = triangle(1);
  REQUIRE(cyclic_derivative(w, "a") == named(w, {{{"b", "c"}, 1}}));
  REQUIRE(cyclic_derivative(w, "c") == named(w, {{{"a", "b"}, 1}}));
  qp x({1, 2, 3, 4}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}, {"d", 1, 4}});
  REQUIRE(cyclic_derivative(x, "d").empty());

  // two triangles glued along c
  qp t({1, 2, 3, 4},
       {{"c", 1, 2}, {"a1", 2, 3}, {"a2", 3, 1}, {"b1", 2, 4}, {"b2", 4, 1}},
       {{{"a1", "a2", "c"}, rational(1)}, {{"b1", "b2", "c"}, rational(1)}});
  REQUIRE(cyclic_derivative(t, "c") == named(t, {{{"a1", "a2"}, 1}, {{"b1", "b2"}, 1}}));

  // repeated arrow: d_a (abab) = 2 bab
  qp r({1, 2}, {{"a", 1, 2}, {"b", 2, 1}}, {{{"a", "b", "a", "b"}, rational(1)}});
  REQUIRE(cyclic_derivative(r, "a") == named(r, {{{"b", "a", "b"}, 2}}));
  REQUIRE(derivative_commutator(r).empty());
  REQUIRE(derivative_commutator(t).empty());
}

TEST_CASE("premutation", "[qp]") {
  auto a3 = with_zero_potential(make({1, 2, 3}, {{1, 2}, {2, 3}}));
  auto p  = premutate(a3, 2);
  REQUIRE(p.vertices() == std::vector<vertex>{1, 2, 3});
  REQUIRE(p.arrows()
          == std::vector<qp_arrow>{{"[ba]", 1, 3}, {"a*", 2, 1}, {"b*", 3, 2}});
  REQUIRE(p.terms() == cycles(p, {{{"[ba]", "b*", "a*"}, 1}}));
  REQUIRE(reduce(p) == p);

  auto t = premutate(triangle(1), 3);
  REQUIRE(t.has_two_cycle());
  REQUIRE(t.terms() == cycles(t, {{{"a", "[cb]"}, 1}, {{"[cb]", "c*", "b*"}, 1}}));

  qp two({1, 2}, {{"a", 1, 2}, {"b", 2, 1}});
  REQUIRE_THROWS_AS(premutate(two, 1), domain_error);
  REQUIRE_THROWS_AS(premutate(two, 7), input_error);
}

TEST_CASE("reduction", "[qp]") {
  auto r = qp_mutate(triangle(1), 3);
  REQUIRE(r.underlying_quiver() == make({1, 2, 3}, {{1, 3}, {3, 2}}));
  REQUIRE(r.terms().empty());

  auto c = qp_mutate(with_zero_potential(make({1, 2, 3}, {{1, 2}, {2, 3}})), 2);
  REQUIRE(c.underlying_quiver() == make({1, 2, 3}, {{1, 3}, {3, 2}, {2, 1}}));
  REQUIRE(c.terms().size() == 1);
  REQUIRE(abs(c.terms().begin()->second) == rational(1));

  // uv + uxy: v -> v - xy kills the cubic term
  for (int lambda : {1, 2, -3}) {
    qp x({1, 2, 3}, {{"u", 1, 2}, {"v", 2, 1}, {"x", 2, 3}, {"y", 3, 1}},
         {{{"u", "v"}, rational(lambda)}, {{"u", "x", "y"}, rational(1)}});
    auto y = reduce(x);
    REQUIRE(y.arrows() == std::vector<qp_arrow>{{"x", 2, 3}, {"y", 3, 1}});
    REQUIRE(y.terms().empty());
  }

  // uv + uxy + vzw  ~  uv - xyzw
  qp x({1, 2, 3, 4},
       {{"u", 1, 2}, {"v", 2, 1}, {"x", 2, 3}, {"y", 3, 1}, {"z", 1, 4}, {"w", 4, 2}},
       {{{"u", "v"}, rational(1)},
        {{"u", "x", "y"}, rational(1)},
        {{"v", "z", "w"}, rational(1)}});
  auto y = reduce(x);
  REQUIRE(y.terms() == cycles(y, {{{"x", "y", "z", "w"}, -1}}));

  // 2-cycle with no potential term
  REQUIRE_THROWS_AS(reduce(qp({1, 2}, {{"a", 1, 2}, {"b", 2, 1}})), domain_error);
}

TEST_CASE("sum of chordless cycles", "[qp]") {
  REQUIRE(sum_of_chordless_cycles(make({1, 2, 3}, {{1, 2}, {2, 3}})).terms().empty());
  auto w = sum_of_chordless_cycles(make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}));
  REQUIRE(w.terms() == cycles(w, {{{"a", "b", "c"}, 1}}));
  auto t = sum_of_chordless_cycles(make({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}}));
  REQUIRE(t.terms().size() == 2);
  REQUIRE(cyclic_derivative(t, "a").size() == 2);  // a : 1 -> 2 is shared
}

TEST_CASE("canonical form", "[qp]") {
  auto neg = is_canonical_form(triangle(-1));
  REQUIRE(neg.ok());
  rational prod = 1;
  for (auto const& [n, m] : neg.scalars) prod *= m;
  REQUIRE(prod == rational(-1));
  auto one = is_canonical_form(triangle(1));
  REQUIRE(one.ok());
  for (auto const& [n, m] : one.scalars) REQUIRE(m == rational(1));
  REQUIRE(is_canonical_form(triangle(rational(4, 9))).ok());
  auto zero = is_canonical_form(qp({1, 2, 3}, {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}}));
  REQUIRE_FALSE(zero.support_ok);
  REQUIRE_FALSE(zero.ok());

  // two triangles sharing c: coefficients 2 and 3 rescale independently
  qp t({1, 2, 3, 4},
       {{"c", 1, 2}, {"a1", 2, 3}, {"a2", 3, 1}, {"b1", 2, 4}, {"b2", 4, 1}},
       {{{"a1", "a2", "c"}, rational(2)}, {{"b1", "b2", "c"}, rational(-3)}});
  auto rep = is_canonical_form(t);
  REQUIRE(rep.ok());

  // not reduced
  qp sq({1, 2}, {{"a", 1, 2}, {"b", 2, 1}}, {{{"a", "b"}, rational(1)}});
  REQUIRE_FALSE(is_canonical_form(sq).ok());
}

TEST_CASE("integer gauge solver", "[qp]") {
  // x0 + x1 = 1, x1 + x2 = 1, x0 + x2 = 1 has no integer solution
  std::vector<std::int64_t> m{1, 1, 0, 0, 1, 1, 1, 0, 1};
  REQUIRE_FALSE(detail::solve_integer(m, 3, 3, {1, 1, 1}));
  auto s = detail::solve_integer(m, 3, 3, {2, 2, 2});
  REQUIRE(s);
  REQUIRE(*s == std::vector<std::int64_t>{1, 1, 1});
  // 2 x0 = 3 has none; 2 x0 + 3 x1 = 1 has one
  REQUIRE_FALSE(detail::solve_integer({2}, 1, 1, {3}));
  auto t = detail::solve_integer({2, 3}, 1, 2, {1});
  REQUIRE(t);
  REQUIRE(2 * (*t)[0] + 3 * (*t)[1] == 1);
}

TEST_CASE("mutation of potentials over mutation classes", "[qp]") {
  for (auto type : {dynkin_type{family::A, 3}, dynkin_type{family::A, 5},
                    dynkin_type{family::D, 4}, dynkin_type{family::D, 5}}) {
    CAPTURE(type.str());
    auto cls = enumerate_mutation_class(dynkin_quiver(type));
    for (auto const& m : cls.members()) {
      auto start = sum_of_chordless_cycles(m.q);
      REQUIRE(is_canonical_form(start).ok());
      for (vertex k : m.q.vertices()) {
        auto once = with_standard_names(qp_mutate(start, k));
        REQUIRE(once.underlying_quiver() == mutate(m.q, k));
        REQUIRE(is_canonical_form(once).ok());
        REQUIRE(derivative_commutator(once).empty());
        auto twice = qp_mutate(once, k);
        REQUIRE(twice.underlying_quiver() == m.q);
        REQUIRE(is_canonical_form(twice).ok());
      }
    }
  }
}

TEST_CASE("iterated mutation from the zero potential", "[qp]") {
  auto q = dynkin_quiver({family::D, 5});
  auto x = with_zero_potential(q);
  std::vector<vertex> path{1, 3, 2, 4, 3, 5, 1, 4, 2, 3, 5, 3, 4};
  for (vertex k : path) {
    x = with_standard_names(qp_mutate(x, k));
    q = mutate(q, k);
    REQUIRE(x.underlying_quiver() == q);
    REQUIRE(is_canonical_form(x).ok());
  }
}
