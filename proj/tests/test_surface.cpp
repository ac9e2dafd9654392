#include <set>

#include "catch_amalgamated.hpp"

#include "bqm/mutation_class.hpp"
#include "bqm/surface.hpp"

using namespace bqm;

namespace {
  std::uint64_t catalan(int n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
      for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
    }
    return c[n];
  }

  // Count n-cliques in the compatibility graph on all arcs.
  std::size_t brute_force_count(surface const& s) {
    auto const&              arcs = s.all_arcs();
    std::size_t              n    = s.type().rank;
    std::vector<std::size_t> chosen;
    std::size_t              count = 0;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() == n) {
        ++count;
        return;
      }
      for (std::size_t i = from; i < arcs.size(); ++i) {
        bool ok = true;
        for (auto j : chosen) ok = ok && s.compatible(arcs[i], arcs[j]);
        if (!ok) continue;
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
    return count;
  }

  quiver make(std::vector<vertex> vs, std::vector<std::pair<int, int>> as) {
    std::vector<arrow> out;
    for (auto [s, t] : as) out.push_back({s, t});
    return quiver(std::move(vs), std::move(out));
  }
}  // namespace

TEST_CASE("arc counts", "[surface]") {
  REQUIRE(surface({family::A, 2}).all_arcs().size() == 5);
  REQUIRE(surface({family::D, 5}).all_arcs().size() == 25);
  REQUIRE_THROWS_AS(surface({family::E, 6}), domain_error);
}

TEST_CASE("compatibility", "[surface]") {
  surface d5({family::D, 5});
  using A = tagged_arc;
  REQUIRE(d5.compatible(A::peripheral(1, 4), A::peripheral(2, 4)));
  REQUIRE(d5.compatible(A::peripheral(1, 4), A::peripheral(4, 1)));
  REQUIRE_FALSE(d5.compatible(A::peripheral(1, 4), A::peripheral(3, 1)));
  REQUIRE_FALSE(d5.compatible(A::peripheral(1, 3), A::peripheral(2, 4)));
  REQUIRE(d5.compatible(A::radius(2, tag::plain), A::radius(2, tag::notched)));
  REQUIRE_FALSE(d5.compatible(A::radius(2, tag::plain), A::radius(3, tag::notched)));
  REQUIRE(d5.compatible(A::radius(2, tag::plain), A::radius(3, tag::plain)));
  REQUIRE_FALSE(d5.compatible(A::radius(2, tag::plain), A::peripheral(1, 3)));
  REQUIRE(d5.compatible(A::radius(3, tag::notched), A::peripheral(1, 3)));
  REQUIRE(d5.compatible(A::radius(4, tag::plain), A::peripheral(1, 3)));
  REQUIRE_THROWS_AS(d5.compatible(A::peripheral(1, 2), A::radius(1, tag::plain)),
                    input_error);

  surface a3({family::A, 3});
  REQUIRE_FALSE(a3.compatible(A::chord(1, 3), A::chord(2, 4)));
  REQUIRE(a3.compatible(A::chord(1, 3), A::chord(1, 4)));
  REQUIRE(a3.compatible(A::chord(1, 3), A::chord(3, 5)));
}

TEST_CASE("triangulation counts", "[surface]") {
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(surface({family::A, n}).enumerate().size() == catalan(n + 1));
  }
  REQUIRE(surface({family::A, 2}).enumerate().size() == 5);
  REQUIRE(surface({family::A, 4}).enumerate().size() == 42);
  for (int n = 4; n <= 5; ++n) {
    surface s({family::D, n});
    REQUIRE(s.enumerate().size() == brute_force_count(s));
  }
  REQUIRE(surface({family::D, 4}).enumerate().size() == 50);
  REQUIRE(surface({family::A, 3}).enumerate().size() == brute_force_count(surface({family::A, 3})));
}

TEST_CASE("flip of a square's diagonal", "[surface]") {
  surface       a1({family::A, 1});
  triangulation t{{family::A, 1}, {tagged_arc::chord(1, 3)}};
  auto          f = a1.flip(t, 0);
  REQUIRE(f.arcs[0] == tagged_arc::chord(2, 4));
  REQUIRE(a1.flip(f, 0) == t);
}

TEST_CASE("flip of a radius next to its notched partner", "[surface]") {
  surface d4({family::D, 4});
  auto    t = d4.initial();
  auto    f = d4.flip(t, 2);  // radius(4, plain)
  REQUIRE(f.arcs[2] == tagged_arc::radius(1, tag::notched));
  auto g = d4.flip(t, 3);  // radius(4, notched)
  REQUIRE(g.arcs[3] == tagged_arc::radius(1, tag::plain));
  REQUIRE_THROWS_AS(d4.flip(t, tagged_arc::peripheral(2, 4)), input_error);
}

TEST_CASE("flips are involutions and match mutation", "[surface]") {
  for (auto type : {dynkin_type{family::A, 3}, dynkin_type{family::A, 4},
                    dynkin_type{family::D, 4}, dynkin_type{family::D, 5}}) {
    CAPTURE(type.str());
    surface s(type);
    auto    all = s.enumerate();
    for (auto const& t : all) {
      auto q = s.quiver_of(t);
      REQUIRE(dynkin_type_of(q) == type);
      for (std::size_t k = 0; k < t.arcs.size(); ++k) {
        auto f = s.flip(t, k);
        REQUIRE(f.arcs[k] != t.arcs[k]);
        REQUIRE(s.flip(f, k) == t);
        REQUIRE(s.quiver_of(f) == mutate(q, static_cast<vertex>(k) + 1));
      }
    }
  }
}

TEST_CASE("initial triangulation quivers", "[surface]") {
  surface a5({family::A, 5});
  REQUIRE(a5.quiver_of(a5.initial())
          == make({1, 2, 3, 4, 5}, {{2, 1}, {3, 2}, {4, 3}, {5, 4}}));
  surface d7({family::D, 7});
  auto    q = d7.quiver_of(d7.initial());
  for (int i = 1; i <= 4; ++i) REQUIRE(q.multiplicity(i + 1, i) == 1);
  // both radii meet the arc P-Q, with the same orientation
  REQUIRE(q.adjacent(5, 6));
  REQUIRE(q.adjacent(5, 7));
  REQUIRE(q.multiplicity(5, 6) == q.multiplicity(5, 7));
  REQUIRE(q.arrows().size() == 6);
}

TEST_CASE("braid graphs", "[surface]") {
  for (int n = 1; n <= 5; ++n) {
    surface s({family::A, n});
    auto    g = braid_graph_of(s, s.initial());
    REQUIRE(g.edges.size() == std::size_t(n));
    REQUIRE(g.faces == std::size_t(n) + 1);
    // a path: every face has degree <= 2
    std::vector<int> deg(g.faces, 0);
    for (auto const& e : g.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    REQUIRE(*std::max_element(deg.begin(), deg.end()) <= 2);
    for (auto const& t : s.enumerate()) {
      auto h = braid_graph_of(s, t);
      REQUIRE(h.edges.size() == std::size_t(n));
      REQUIRE(h.faces == h.edges.size() + 1);  // connected with n edges: a tree
    }
  }
  surface d5({family::D, 5});
  for (auto const& t : d5.enumerate()) {
    REQUIRE(braid_graph_of(d5, t).edges.size() == 5);
  }
  auto g = braid_graph_of(d5, d5.initial());
  // the bigon between the two radii gives a double edge
  REQUIRE(g.edges[3].u == g.edges[4].u);
  REQUIRE(g.edges[3].v == g.edges[4].v);
}

TEST_CASE("invalid triangulations", "[surface]") {
  surface d4({family::D, 4});
  triangulation bad{{family::D, 4},
                    {tagged_arc::peripheral(1, 3), tagged_arc::peripheral(2, 4),
                     tagged_arc::radius(1, tag::plain), tagged_arc::radius(1, tag::notched)}};
  REQUIRE_THROWS_AS(d4.quiver_of(bad), domain_error);
  triangulation short_t{{family::D, 4}, {tagged_arc::peripheral(1, 3)}};
  REQUIRE_THROWS_AS(d4.validate(short_t), domain_error);
}
