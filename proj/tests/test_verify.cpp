#include "catch_amalgamated.hpp"

#include "bqm/verify.hpp"

using namespace bqm;
namespace oracle = bqm::verify::oracle;

TEST_CASE("acceptance oracles", "[verify]") {
  REQUIRE(oracle::catalan(3) == 5);
  REQUIRE(oracle::catalan(8) == 1430);
  REQUIRE(oracle::group_order({family::A, 3}) == 24);
  REQUIRE(oracle::group_order({family::D, 4}) == 192);
  REQUIRE(oracle::class_size(dynkin_quiver({family::A, 3})) == 4);

  auto a2 = oracle::make({1, 2}, {{1, 2}});
  REQUIRE(oracle::monoid_equivalent(a2, {1, 2, 1}, {2, 1, 2}));
  REQUIRE_FALSE(oracle::monoid_equivalent(a2, {1, 2}, {2, 1}));
  auto a1a1 = oracle::make({1, 2}, {});
  REQUIRE(oracle::monoid_equivalent(a1a1, {1, 2, 1}, {1, 1, 2}));

  auto q = oracle::make({1, 2}, {{1, 2}});
  REQUIRE(oracle::ext_dim(q, 1, 2, 1) == 1);
  REQUIRE(oracle::ext_dim(q, 2, 1, 2) == 1);
  REQUIRE(oracle::ext_dim(q, 1, 1, 3) == 1);
}

TEST_CASE("qp sweep visits distinct states", "[verify]") {
  auto all = verify::qp_sweep({family::A, 3}, 2);
  REQUIRE(all.size() > 3);
  std::set<std::string> keys;
  for (auto const& x : all) keys.insert(verify::detail::qp_key(x));
  REQUIRE(keys.size() == all.size());
}

TEST_CASE("sweeps restricted by rank", "[verify]") {
  verify::options o;
  o.max_rank      = 4;
  o.garside_words = 50;
  o.qp_depth      = 3;
  for (auto f : {verify::involution, verify::weyl_soundness, verify::phi_isomorphism,
                 verify::garside_consistency, verify::qp_stability, verify::dg_k0}) {
    auto r = f(o);
    INFO(verify::format(r));
    REQUIRE(r.pass);
    REQUIRE(r.detail.find("A5") == std::string::npos);
  }
}
