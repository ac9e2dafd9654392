#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "bqm/mutation_class.hpp"
#include "bqm/presentation.hpp"

using namespace bqm;

namespace {
  quiver make(std::vector<vertex> vs, std::vector<std::pair<int, int>> as) {
    std::vector<arrow> out;
    for (auto [s, t] : as) out.push_back({s, t});
    return quiver(std::move(vs), std::move(out));
  }

  // Small HLT Todd-Coxeter coset enumeration over the trivial subgroup.
  class coset_table {
   public:
    coset_table(int gens, std::vector<word> const& rels) : g_(gens), rels_(rels) {
      add_row();
    }

    std::size_t order(std::size_t limit = 200000) {
      for (std::size_t c = 0; c < table_.size(); ++c) {
        if (!alive(c)) continue;
        for (auto const& r : rels_) {
          scan_and_fill(c, r);
          if (!alive(c)) break;
        }
        if (table_.size() > limit) throw std::runtime_error("too many cosets");
      }
      std::size_t n = 0;
      for (std::size_t c = 0; c < table_.size(); ++c) n += alive(c);
      return n;
    }

   private:
    int col(int x) const {
      return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
    }
    bool alive(std::size_t c) const {
      return parent_[c] == c;
    }
    std::size_t find(std::size_t c) {
      while (parent_[c] != c) c = parent_[c] = parent_[parent_[c]];
      return c;
    }
    std::size_t add_row() {
      table_.emplace_back(2 * g_, none);
      parent_.push_back(table_.size() - 1);
      return table_.size() - 1;
    }
    void define(std::size_t c, int x) {
      auto d                    = add_row();
      table_[c][col(x)]         = d;
      table_[d][col(-x)]        = c;
    }
    void scan_and_fill(std::size_t c, word const& r) {
      while (true) {
        std::size_t f = c, b = c;
        std::size_t i = 0, j = r.size();
        while (i < j && table_[f][col(r[i])] != none) f = table_[f][col(r[i++])];
        if (i == j) {
          if (f != c) coincidence(f, c);
          return;
        }
        while (j > i && table_[b][col(-r[j - 1])] != none) {
          b = table_[b][col(-r[--j])];
        }
        if (j == i) {
          coincidence(f, b);
          return;
        }
        if (j == i + 1) {
          table_[f][col(r[i])]  = b;
          table_[b][col(-r[i])] = f;
          return;
        }
        define(f, r[i]);
        if (!alive(c)) return;
      }
    }
    void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& q) {
      k = find(k);
      l = find(l);
      if (k == l) return;
      if (k > l) std::swap(k, l);
      parent_[l] = k;
      q.push_back(l);
    }
    // Holt's coincidence procedure.
    void coincidence(std::size_t a, std::size_t b) {
      std::vector<std::size_t> q;
      merge(a, b, q);
      for (std::size_t i = 0; i < q.size(); ++i) {
        auto e = q[i];
        for (int x = 0; x < 2 * g_; ++x) {
          auto f = table_[e][x];
          if (f == none) continue;
          int xi = x ^ 1;
          if (table_[f][xi] == e) table_[f][xi] = none;
          auto e1 = find(e), f1 = find(f);
          if (table_[e1][x] != none) {
            merge(f1, table_[e1][x], q);
          } else if (table_[f1][xi] != none) {
            merge(e1, table_[f1][xi], q);
          } else {
            table_[e1][x]  = f1;
            table_[f1][xi] = e1;
          }
        }
      }
    }

    static constexpr std::size_t          none = static_cast<std::size_t>(-1);
    int                                   g_;
    std::vector<word>                     rels_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t>              parent_;
  };

  std::size_t quotient_order(presentation const& p) {
    std::map<vertex, int> idx;
    for (vertex v : p.generators) idx.emplace(v, int(idx.size()) + 1);
    std::vector<word> rels;
    for (auto const& r : p.relators) {
      word w;
      for (int x : r.w) w.push_back(x > 0 ? idx[x] : -idx[-x]);
      rels.push_back(w);
    }
    return coset_table(static_cast<int>(p.generators.size()), rels).order();
  }
}  // namespace

TEST_CASE("presentation: single arrow", "[presentation]") {
  auto p = presentation_of(make({1, 2}, {{1, 2}}));
  REQUIRE(p.generators == std::vector<vertex>{1, 2});
  REQUIRE(p.relators.size() == 1);
  REQUIRE(p.relators[0].w == word{1, 2, 1, -2, -1, -2});
  REQUIRE(p.relators[0].kind == relator_kind::braid);
}

TEST_CASE("presentation: isolated vertices commute", "[presentation]") {
  auto p = presentation_of(make({1, 2}, {}));
  REQUIRE(p.relators.size() == 1);
  REQUIRE(p.relators[0].w == word{1, 2, -1, -2});
  REQUIRE(p.relators[0].kind == relator_kind::commuting);
}

TEST_CASE("presentation: oriented 3-cycle", "[presentation]") {
  auto p = presentation_of(make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}));
  std::vector<relator> cyc;
  for (auto const& r : p.relators) {
    if (r.kind == relator_kind::cycle) cyc.push_back(r);
  }
  REQUIRE(cyc.size() == 2);
  // s1 s2 s3 s1 = s2 s3 s1 s2 = s3 s1 s2 s3
  REQUIRE(cyc[0].w == free_reduce({1, 2, 3, 1, -2, -1, -3, -2}));
  REQUIRE(cyc[1].w == free_reduce({2, 3, 1, 2, -3, -2, -1, -3}));
  for (auto const& r : p.relators) {
    REQUIRE_FALSE(r.w.empty());
    REQUIRE(is_freely_reduced(r.w));
  }
}

TEST_CASE("presentation: rejects non-Dynkin shapes", "[presentation]") {
  REQUIRE_THROWS_AS(presentation_of(make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}})),
                    domain_error);
  REQUIRE_THROWS_AS(presentation_of(make({1, 2}, {{1, 2}, {1, 2}})), domain_error);
}

TEST_CASE("coxeter quotient orders by coset enumeration", "[presentation]") {
  REQUIRE(coxeter_presentation_of(make({1}, {})).relators.size() == 1);
  REQUIRE(quotient_order(coxeter_presentation_of(make({1, 2}, {{1, 2}}))) == 6);
  REQUIRE(quotient_order(coxeter_presentation_of(make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}})))
          == 24);
  // without the cycle relators the quotient is infinite (affine A2); with
  // only the Coxeter cycle relators added it is finite again
  auto q = make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  presentation bm{q.vertices(), {}};
  for (auto const& r : coxeter_presentation_of(q).relators) {
    if (r.kind != relator_kind::cycle) bm.relators.push_back(r);
  }
  for (auto const& w : barot_marsh_relators(q)) bm.relators.push_back({w});
  REQUIRE(quotient_order(bm) == 24);
  // D4 type-II piece
  auto two = make({1, 2, 3, 4}, {{1, 3}, {3, 4}, {4, 2}, {4, 1}, {2, 3}});
  REQUIRE(quotient_order(coxeter_presentation_of(two)) == 192);
}

TEST_CASE("Coxeter cycle relators", "[presentation]") {
  REQUIRE(barot_marsh_relators(make({1, 2, 3}, {{1, 2}, {2, 3}})).empty());
  auto bm = barot_marsh_relators(make({1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}}));
  REQUIRE(bm.size() == 3);
  REQUIRE(bm[0] == word{1, 2, 3, 2, 1, 2, 3, 2});
  REQUIRE(bm[1] == word{2, 3, 1, 3, 2, 3, 1, 3});
}
