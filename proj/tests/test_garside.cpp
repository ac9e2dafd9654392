#include <random>

#include "catch_amalgamated.hpp"

#include "bqm/garside.hpp"

using namespace bqm;

namespace {
  word random_word(std::mt19937& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, rank), sgn(0, 1);
    word                               w(len(rng));
    for (int& x : w) x = gen(rng) * (sgn(rng) ? 1 : -1);
    return w;
  }

  // Greedy normal form of a positive word, computed independently: try every
  // split of the word into consecutive blocks, keep those whose blocks are
  // reduced (so each is a simple), and pick the factorisation that is
  // left-weighted.
  struct factorisation {
    int               p = 0;
    std::vector<word> blocks;
  };

  bool is_reduced(dynkin_type const& t, word const& w) {
    return evaluate(t, w).length() == static_cast<int>(w.size());
  }

  std::vector<factorisation> all_splits(dynkin_type const& t, word const& w) {
    std::vector<factorisation> out;
    int                        n = static_cast<int>(w.size());
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      factorisation f;
      word          cur{w[0]};
      for (int i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1) {
          f.blocks.push_back(cur);
          cur.clear();
        }
        cur.push_back(w[i]);
      }
      f.blocks.push_back(cur);
      bool ok = true;
      for (auto const& b : f.blocks) ok = ok && is_reduced(t, b);
      if (ok) out.push_back(f);
    }
    return out;
  }
}  // namespace

TEST_CASE("normal form examples", "[garside]") {
  dynkin_type a2{family::A, 2};
  REQUIRE(is_trivial(a2, {1, 2, 1, -2, -1, -2}));
  auto s1 = normal_form(a2, {1});
  REQUIRE(s1.delta_power == 0);
  REQUIRE(s1.factors.size() == 1);
  REQUIRE(s1.factors[0] == simple_reflection(a2, 1));
  REQUIRE_FALSE(is_trivial(a2, {1}));
  REQUIRE(equal(a2, {1, 2, 1}, {2, 1, 2}));
  REQUIRE_FALSE(equal(a2, {1}, {2}));
  REQUIRE_FALSE(equal(a2, {1, 1}, {}));
  REQUIRE_THROWS_AS(normal_form(a2, {3}), input_error);

  auto d = normal_form(a2, {-1});
  REQUIRE(d.delta_power == -1);
  REQUIRE(d.factors.size() == 1);
}

TEST_CASE("normal form of s1 s2 s1 s2 against exhaustive factorisations", "[garside]") {
  dynkin_type a2{family::A, 2};
  word        w{1, 2, 1, 2};
  auto const& w0 = longest_element(a2);
  // Among all factorisations into simples, the left-weighted one with w0
  // blocks pulled out gives the normal form.
  std::vector<factorisation> weighted;
  for (auto f : all_splits(a2, w)) {
    std::vector<weyl_element> el;
    for (auto const& b : f.blocks) el.push_back(evaluate(a2, b));
    bool ok = true;
    for (std::size_t i = 0; i + 1 < el.size(); ++i) {
      ok = ok && (el[i + 1].left_descents() & ~el[i].right_descents()) == 0;
    }
    if (ok) weighted.push_back(f);
  }
  REQUIRE(weighted.size() == 1);
  auto const& f = weighted[0];
  REQUIRE(f.blocks.size() == 2);
  REQUIRE(evaluate(a2, f.blocks[0]) == w0);
  REQUIRE(f.blocks[1] == word{2});

  auto nf = normal_form(a2, w);
  REQUIRE(nf.delta_power == 1);
  REQUIRE(nf.factors.size() == 1);
  REQUIRE(nf.factors[0] == simple_reflection(a2, 2));
}

TEST_CASE("normal form self-consistency on random words", "[garside]") {
  std::mt19937 rng(2024);
  for (auto t : {dynkin_type{family::A, 3}, dynkin_type{family::D, 4},
                 dynkin_type{family::E, 6}}) {
    CAPTURE(t.str());
    auto delta = delta_word(t);
    for (int trial = 0; trial < 150; ++trial) {
      auto w  = random_word(rng, t.rank, 20);
      auto nf = normal_form(t, w);
      REQUIRE(is_trivial(t, concat(w, inverse(w))));
      for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) {
        REQUIRE(left_weighted(nf.factors[i], nf.factors[i + 1]));
      }
      for (auto const& f : nf.factors) {
        REQUIRE_FALSE(f.is_identity());
        REQUIRE_FALSE(f == longest_element(t));
      }
      REQUIRE(normal_form(t, to_word(t, nf)) == nf);
      auto d2 = power(delta, 2);
      REQUIRE(equal(t, concat(d2, w), concat(w, d2)));
      int i = 1 + trial % t.rank;
      REQUIRE(equal(t, concat(delta, {i}), concat({diagram_automorphism(t, i)}, delta)));
      // Weyl image of the normal form agrees with the word's
      REQUIRE(evaluate(t, to_word(t, nf)) == evaluate(t, w));
    }
  }
}

TEST_CASE("normal form distinguishes pure braids from the identity", "[garside]") {
  dynkin_type a3{family::A, 3};
  // s1^2 maps to the identity in W but is not trivial
  REQUIRE_FALSE(is_trivial(a3, {1, 1}));
  REQUIRE_FALSE(is_trivial(a3, power(delta_word(a3), 2)));
  // commutation of distant generators
  REQUIRE(is_trivial(a3, {1, 3, -1, -3}));
  REQUIRE_FALSE(is_trivial(a3, {1, 2, -1, -2}));
}
