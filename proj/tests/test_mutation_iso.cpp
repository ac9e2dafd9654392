#include "catch_amalgamated.hpp"

#include "bqm/garside.hpp"
#include "bqm/mutation_iso.hpp"
#include "bqm/presentation.hpp"

using namespace bqm;

namespace {
  quiver make(std::vector<vertex> vs, std::vector<std::pair<int, int>> as) {
    std::vector<arrow> out;
    for (auto [s, t] : as) out.push_back({s, t});
    return quiver(std::move(vs), std::move(out));
  }
}  // namespace

TEST_CASE("phi on a single arrow", "[mutation-iso]") {
  auto q = make({1, 2}, {{1, 2}});
  auto h = phi(q, 2);
  REQUIRE(h.image(1) == word{2, 1, -2});
  REQUIRE(h.image(2) == word{2});
  REQUIRE(phi(q, 1) == group_hom::identity({1, 2}));
  REQUIRE(phi_inverse(q, 2).image(1) == word{-2, 1, 2});
  REQUIRE_THROWS_AS(phi(q, 5), input_error);
}

TEST_CASE("phi on the oriented 3-cycle", "[mutation-iso]") {
  auto q = make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  auto h = phi(q, 1);
  REQUIRE(h.image(3) == word{1, 3, -1});
  REQUIRE(h.image(2) == word{2});
}

TEST_CASE("phi inverse and phi twice", "[mutation-iso]") {
  auto cls = enumerate_mutation_class(dynkin_quiver({family::D, 5}));
  for (auto const& m : cls.members()) {
    for (vertex k : m.q.vertices()) {
      auto h    = phi(m.q, k);
      auto hinv = phi_inverse(m.q, k);
      auto id   = group_hom::identity(m.q.vertices());
      REQUIRE(compose(hinv, h) == id);
      REQUIRE(compose(h, hinv) == id);
      // twice: conjugation by s_k on k and its neighbours; elsewhere the
      // images differ from s_k s_i s_k^{-1} only by a commuting relator
      auto twice = compose(phi(mutate(m.q, k), k), h);
      auto conj  = conjugation(m.q.vertices(), k);
      for (vertex i : m.q.vertices()) {
        if (i == k || m.q.adjacent(i, k)) {
          REQUIRE(twice.image(i) == conj.image(i));
        } else {
          REQUIRE(twice.image(i) == word{i});
        }
      }
    }
  }
}

TEST_CASE("transport along paths", "[mutation-iso]") {
  auto q = make({1, 2, 3}, {{1, 2}, {2, 3}});
  REQUIRE(transport(q, {}).hom == group_hom::identity({1, 2, 3}));
  auto t = transport(q, {2, 2});
  REQUIRE(t.q == q);
  for (vertex i : {1, 3}) REQUIRE(t.hom.image(i) == word{2, i, -2});
  REQUIRE(t.hom.image(2) == word{2});
}

TEST_CASE("standardize", "[mutation-iso]") {
  auto path = make({1, 2, 3}, {{1, 2}, {2, 3}});
  auto s    = standardize(path);
  REQUIRE(s.type == dynkin_type{family::A, 3});
  REQUIRE(s.path.empty());

  auto cyc = make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  auto c   = standardize(cyc);
  REQUIRE(c.type == dynkin_type{family::A, 3});
  REQUIRE(c.path.size() == 1);
  REQUIRE(dynkin_shape(c.dynkin));

  REQUIRE_THROWS_AS(standardize(make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}})),
                    domain_error);

  for (auto t : {dynkin_type{family::A, 4}, dynkin_type{family::D, 5}}) {
    auto cls = enumerate_mutation_class(dynkin_quiver(t));
    for (auto const& m : cls.members()) {
      auto st = standardize(m.q);
      REQUIRE(st.type == t);
      REQUIRE(isomorphic(mutate(m.q, st.path), st.dynkin));
      for (vertex i : m.q.vertices()) {
        // images of generators are conjugates of generators: reflections
        auto r = evaluate(t, st.hom.image(i));
        REQUIRE_FALSE(r.is_identity());
        REQUIRE((r * r).is_identity());
      }
      for (auto const& r : presentation_of(m.q).relators) {
        REQUIRE(is_trivial(t, apply_hom(st.hom, r.w)));
      }
    }
  }
}
