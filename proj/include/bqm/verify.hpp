#ifndef BQM_VERIFY_HPP_
#define BQM_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "garside.hpp"
#include "ginzburg.hpp"
#include "mutation_class.hpp"
#include "mutation_iso.hpp"
#include "potential.hpp"
#include "presentation.hpp"
#include "surface.hpp"
#include "weyl.hpp"

// The acceptance sweeps.  Each returns one line's worth of result; the
// acceptance binary and `verify all` both print them.
namespace bqm::verify {

  struct options {
    int           max_rank      = 8;
    int           garside_words = 1000;
    int           garside_len   = 30;
    int           qp_depth      = 6;
    std::uint32_t seed          = 20240917;
  };

  struct result {
    int         id = 0;
    std::string name;
    bool        pass = false;
    std::string detail;
    double      seconds = 0;
    double      limit   = 0;  // seconds; exceeding it fails the check
  };

  // Independent reference computations.
  namespace oracle {
    // Labelled BFS without isomorphism reduction, then reduced by trying
    // every relabelling.
    inline std::size_t class_size(quiver const& seed) {
      std::set<quiver>    seen{seed};
      std::vector<quiver> todo{seed};
      while (!todo.empty()) {
        auto q = todo.back();
        todo.pop_back();
        for (vertex k : q.vertices()) {
          auto m = mutate(q, k);
          if (seen.insert(m).second) todo.push_back(m);
        }
      }
      std::set<std::vector<int>> classes;
      for (auto const& q : seen) {
        auto                     b = to_exchange_matrix(q);
        std::size_t              n = q.rank();
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::vector<int> best;
        do {
          std::vector<int> m(n * n);
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m[r * n + c] = b(p[r], p[c]);
          }
          if (best.empty() || m < best) best = m;
        } while (std::next_permutation(p.begin(), p.end()));
        classes.insert(best);
      }
      return classes.size();
    }

    // Closure of the simple reflections acting on the root lattice.
    inline std::uint64_t group_order(dynkin_type const& t) {
      int                           n = t.rank;
      auto                          c = cartan_matrix(t);
      using mat                       = std::vector<int>;
      mat                           id(n * n, 0);
      for (int i = 0; i < n; ++i) id[i * n + i] = 1;
      std::set<mat>    seen{id};
      std::vector<mat> todo{id};
      while (!todo.empty()) {
        auto m = todo.back();
        todo.pop_back();
        for (int i = 0; i < n; ++i) {
          // left multiply by s_i: row i becomes row i - sum_j c_ij row j
          auto r = m;
          for (int col = 0; col < n; ++col) {
            int v = m[i * n + col];
            for (int j = 0; j < n; ++j) v -= c[i * n + j] * m[j * n + col];
            r[i * n + col] = v;
          }
          if (seen.insert(r).second) todo.push_back(std::move(r));
        }
      }
      return seen.size();
    }

    inline std::uint64_t factorial(int n) {
      std::uint64_t f = 1;
      for (int i = 2; i <= n; ++i) f *= i;
      return f;
    }

    inline std::uint64_t catalan(int n) {
      std::vector<std::uint64_t> c(n + 1, 0);
      c[0] = 1;
      for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
      }
      return c[n];
    }

    inline quiver make(std::vector<vertex> vs, std::vector<std::pair<int, int>> as) {
      std::vector<arrow> out;
      for (auto [s, t] : as) out.push_back({s, t});
      return quiver(std::move(vs), std::move(out));
    }

    // Reference quivers of the initial triangulations of the octagon and the
    // punctured heptagon.
    inline quiver reference_a5() {
      return make({1, 2, 3, 4, 5}, {{2, 1}, {3, 2}, {4, 3}, {5, 4}});
    }
    inline quiver reference_d7() {
      return make({1, 2, 3, 4, 5, 6, 7}, {{2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 5}});
    }

    // dim Hom(S_i, S_j[n]) read straight off the arrows.
    inline int ext_dim(quiver const& q, vertex i, vertex j, int n) {
      auto count = [&](vertex s, vertex t) {
        int c = 0;
        for (auto const& a : q.arrows()) c += a.source == s && a.target == t;
        return c;
      };
      switch (n) {
        case 0:
        case 3: return i == j;
        case 1: return count(i, j);
        case 2: return count(j, i);
      }
      return 0;
    }

    // Can positive word a be rewritten into b using only commuting moves
    // (xy = yx, x and y not adjacent) and braid moves (xyx = yxy, adjacent)?
    inline bool monoid_equivalent(quiver const& q, word const& a, word const& b) {
      std::set<word>   seen{a};
      std::deque<word> todo{a};
      while (!todo.empty()) {
        auto w = todo.front();
        todo.pop_front();
        if (w == b) return true;
        auto push = [&](word v) {
          if (seen.insert(v).second) todo.push_back(std::move(v));
        };
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
          int x = w[i], y = w[i + 1];
          if (x != y && !q.adjacent(x, y)) {
            auto v = w;
            std::swap(v[i], v[i + 1]);
            push(v);
          }
          if (i + 2 < w.size() && w[i + 2] == x && x != y && q.adjacent(x, y)) {
            auto v = w;
            v[i] = v[i + 2] = y;
            v[i + 1]        = x;
            push(v);
          }
        }
      }
      return false;
    }
  }  // namespace oracle

  namespace detail {
    inline std::vector<dynkin_type> types(std::vector<dynkin_type> ts, int max_rank) {
      std::erase_if(ts, [&](dynkin_type const& t) { return t.rank > max_rank; });
      return ts;
    }

    inline std::vector<dynkin_type> range(family f, int lo, int hi) {
      std::vector<dynkin_type> ts;
      for (int n = lo; n <= hi; ++n) ts.push_back({f, n});
      return ts;
    }

    inline std::vector<dynkin_type> join(std::initializer_list<std::vector<dynkin_type>> parts) {
      std::vector<dynkin_type> out;
      for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
      return out;
    }

    inline std::string names(std::vector<dynkin_type> const& ts) {
      std::string s;
      for (auto const& t : ts) s += (s.empty() ? "" : ",") + t.str();
      return s.empty() ? "none" : s;
    }

    // Collects failures, keeping the first few for the report.
    struct tally {
      std::size_t              checks = 0, failures = 0;
      std::vector<std::string> first;

      void check(bool ok, std::function<std::string()> const& what) {
        ++checks;
        if (ok) return;
        if (++failures <= 3) first.push_back(what());
      }
      bool ok() const {
        return failures == 0;
      }
      std::string summary() const {
        std::string s = std::to_string(checks) + " checks";
        if (failures) {
          s += ", " + std::to_string(failures) + " failed";
          for (auto const& f : first) s += "; " + f;
        }
        return s;
      }
    };

    template <typename F>
    result timed(int id, std::string name, double limit, F&& body) {
      auto   t0 = std::chrono::steady_clock::now();
      result r{id, std::move(name), false, "", 0, limit};
      try {
        body(r);
      } catch (std::exception const& e) {
        r.pass   = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (r.pass && r.seconds > limit) {
        r.pass = false;
        r.detail += "; exceeded time limit";
      }
      return r;
    }

    inline std::string qp_key(qp const& x) {
      std::ostringstream s;
      for (auto const& a : x.arrows()) s << a.name << ':' << a.source << '>' << a.target << ' ';
      s << '|';
      for (auto const& [p, c] : x.terms()) {
        for (int a : p) s << a << '.';
        s << '=' << to_string(c) << ' ';
      }
      return s.str();
    }
  }  // namespace detail

  // 1: mu_k mu_k = id, multiplicities 1, chordless cycles oriented.
  inline result involution(options const& o) {
    auto ts = detail::types(detail::join({detail::range(family::A, 3, 8),
                                          detail::range(family::D, 4, 8),
                                          detail::range(family::E, 6, 8)}),
                            o.max_rank);
    return detail::timed(1, "mutation involution and 2-finiteness", 120, [&](result& r) {
      detail::tally t;
      std::size_t   members = 0;
      for (auto const& type : ts) {
        auto cls = enumerate_mutation_class(dynkin_quiver(type));
        members += cls.size();
        for (auto const& m : cls.members()) {
          for (vertex k : m.q.vertices()) {
            t.check(mutate(mutate(m.q, k), k) == m.q,
                    [&] { return type.str() + ": mu_k twice at " + std::to_string(k); });
          }
          bool simple = true;
          for (vertex i : m.q.vertices()) {
            for (vertex j : m.q.vertices()) simple = simple && m.q.multiplicity(i, j) <= 1;
          }
          t.check(simple, [&] { return type.str() + ": multiple arrow"; });
          for (auto const& c : chordless_cycles(m.q)) {
            t.check(c.oriented, [&] { return type.str() + ": unoriented chordless cycle"; });
          }
        }
      }
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ": " + std::to_string(members) + " quivers, " + t.summary();
    });
  }

  // 2: class sizes stable across runs and worker counts, equal to the oracle.
  inline result class_stability(options const& o) {
    auto ts = detail::types({{family::A, 3}, {family::A, 4}, {family::A, 5}, {family::D, 4}},
                            o.max_rank);
    auto big = detail::types({{family::D, 6}, {family::E, 6}}, o.max_rank);
    return detail::timed(2, "class enumeration stability", 120, [&](result& r) {
      detail::tally t;
      std::string   sizes;
      for (auto const& type : detail::join({ts, big})) {
        auto seed = dynkin_quiver(type);
        auto a    = enumerate_mutation_class(seed, {default_class_budget(), 1});
        auto b    = enumerate_mutation_class(seed, {default_class_budget(), 4});
        auto c    = enumerate_mutation_class(seed, {default_class_budget(), 1});
        auto keys = [](mutation_class const& m) {
          std::vector<canonical_key> k;
          for (auto const& x : m.members()) k.push_back(x.key);
          return k;
        };
        t.check(keys(a) == keys(b) && keys(a) == keys(c),
                [&] { return type.str() + ": differs across runs"; });
        sizes += " " + type.str() + "=" + std::to_string(a.size());
        if (std::find(ts.begin(), ts.end(), type) != ts.end()) {
          auto want = oracle::class_size(seed);
          t.check(a.size() == want, [&] {
            return type.str() + ": " + std::to_string(a.size()) + " vs oracle " + std::to_string(want);
          });
        }
      }
      r.pass   = t.ok();
      r.detail = "sizes" + sizes + "; " + t.summary();
    });
  }

  // 3: relators map to the identity of W; group orders.
  inline result weyl_soundness(options const& o) {
    auto ts = detail::types(detail::join({detail::range(family::A, 3, 7),
                                          detail::range(family::D, 4, 6),
                                          {{family::E, 6}}}),
                            o.max_rank);
    return detail::timed(3, "Weyl realization soundness", 60, [&](result& r) {
      detail::tally t;
      for (auto const& type : ts) {
        auto cls = enumerate_mutation_class(dynkin_quiver(type));
        for (auto const& m : cls.members()) {
          auto st = standardize(m.q);
          t.check(st.type == type, [&] { return type.str() + ": standardize gave " + st.type.str(); });
          auto check = [&](word const& w, char const* what) {
            t.check(evaluate(type, apply_hom(st.hom, w)).is_identity(),
                    [&] { return type.str() + ": " + what + " " + format_word(w); });
          };
          for (auto const& rel : presentation_of(m.q).relators) check(rel.w, "relator");
          for (auto const& w : barot_marsh_relators(m.q)) check(w, "Coxeter cycle relator");
        }
      }
      for (int n = 1; n <= std::min(7, o.max_rank); ++n) {
        t.check(group_order({family::A, n}) == oracle::factorial(n + 1),
                [&] { return "|W(A" + std::to_string(n) + ")|"; });
      }
      for (auto const& type : detail::types({{family::D, 4}, {family::D, 5}, {family::D, 6},
                                             {family::E, 6}},
                                            o.max_rank)) {
        t.check(group_order(type) == oracle::group_order(type),
                [&] { return "|W(" + type.str() + ")| against the closure"; });
      }
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ": " + t.summary();
    });
  }

  // 4: phi_k sends relators to Garside-trivial words; phi twice is
  // conjugation by s_k.
  inline result phi_isomorphism(options const& o) {
    auto ts = detail::types(detail::join({detail::range(family::A, 3, 6),
                                          detail::range(family::D, 4, 6),
                                          {{family::E, 6}}}),
                            o.max_rank);
    return detail::timed(4, "phi well-defined and an isomorphism", 600, [&](result& r) {
      detail::tally t;
      std::size_t   longest = 0;
      for (auto const& type : ts) {
        auto cls = enumerate_mutation_class(dynkin_quiver(type));
        for (auto const& m : cls.members()) {
          for (vertex k : m.q.vertices()) {
            auto mq = mutate(m.q, k);
            auto st = standardize(mq);
            auto f  = phi(m.q, k);
            for (auto const& rel : presentation_of(m.q).relators) {
              auto w  = apply_hom(st.hom, apply_hom(f, rel.w));
              longest = std::max(longest, w.size());
              t.check(is_trivial(type, w), [&] {
                return type.str() + ": phi_" + std::to_string(k) + " of " + format_word(rel.w);
              });
            }
            auto twice = compose(phi(mq, k), f);
            auto conj  = conjugation(m.q.vertices(), k);
            for (vertex i : m.q.vertices()) {
              if (i == k || m.q.adjacent(i, k)) {
                t.check(twice.image(i) == conj.image(i), [&] {
                  return type.str() + ": phi twice on s" + std::to_string(i);
                });
              } else {
                // s_i commutes with s_k, so the two images agree in B_Q
                t.check(twice.image(i) == word{i}
                            && is_trivial(type, apply_hom(standardize(m.q).hom,
                                                          concat(conj.image(i), {-i}))),
                        [&] { return type.str() + ": phi twice on s" + std::to_string(i); });
              }
            }
          }
        }
      }
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ": " + t.summary() + ", longest transported relator "
                 + std::to_string(longest);
    });
  }

  // 5: one rotated cycle relator with the braid and commuting relations
  // gives all the others.
  inline result one_implies_all(options const& o) {
    auto ts = detail::types(detail::join({detail::range(family::D, 4, 6), {{family::E, 6}}}),
                            o.max_rank);
    return detail::timed(5, "one cycle relation implies all rotations", 120, [&](result& r) {
      detail::tally         t;
      std::set<std::size_t> lengths;
      for (auto const& type : ts) {
        auto cls = enumerate_mutation_class(dynkin_quiver(type));
        for (auto const& m : cls.members()) {
          std::optional<standardization> st;
          for (auto const& c : chordless_cycles(m.q)) {
            auto const& cyc = c.vertices;
            std::size_t n   = cyc.size();
            lengths.insert(n);
            if (!st) st = standardize(m.q);
            auto rel = [&](std::size_t k) { return bqm::detail::cycle_word(cyc, k % n); };
            for (std::size_t k = 0; k < n; ++k) {
              // L_k = L_{k+1} holds in B_Delta ...
              t.check(is_trivial(type, apply_hom(st->hom, concat(rel(k), inverse(rel(k + 1))))),
                      [&] { return type.str() + ": rotation " + std::to_string(k) + " not trivial"; });
              // ... and c_{k+1} L_k = L_k c_{k-1} in the positive monoid, which
              // turns L_k = L_{k+1} into L_{k+1} = L_{k+2}
              auto lhs = concat({cyc[(k + 1) % n]}, rel(k));
              auto rhs = concat(rel(k), {cyc[(k + n - 1) % n]});
              t.check(oracle::monoid_equivalent(m.q, lhs, rhs),
                      [&] { return type.str() + ": no monoid derivation at rotation " + std::to_string(k); });
            }
          }
        }
      }
      std::string ls;
      for (auto l : lengths) ls += (ls.empty() ? "" : ",") + std::to_string(l);
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ": cycle lengths {" + ls + "}, " + t.summary();
    });
  }

  // 6: Garside normal form self-consistency on random words.
  inline result garside_consistency(options const& o) {
    auto ts = detail::types(detail::join({detail::range(family::A, 2, 5),
                                          {{family::D, 4}, {family::E, 6}}}),
                            o.max_rank);
    return detail::timed(6, "Garside normal form self-consistency", 120, [&](result& r) {
      detail::tally t;
      std::mt19937  rng(o.seed);
      for (auto const& type : ts) {
        auto delta = delta_word(type);
        auto d2    = power(delta, 2);
        auto w0    = longest_element(type);
        std::uniform_int_distribution<int> len(0, o.garside_len), gen(1, type.rank), sgn(0, 1);
        for (int trial = 0; trial < o.garside_words; ++trial) {
          word w(len(rng));
          for (int& x : w) x = gen(rng) * (sgn(rng) ? 1 : -1);
          auto what = [&] { return type.str() + ": " + format_word(w); };
          auto nf   = normal_form(type, w);
          t.check(is_trivial(type, concat(w, inverse(w))), what);
          t.check(equal(type, concat(d2, w), concat(w, d2)), what);
          int i = gen(rng);
          t.check(equal(type, concat(delta, {i}), concat({diagram_automorphism(type, i)}, delta)),
                  what);
          bool structural = true;
          for (std::size_t f = 0; f < nf.factors.size(); ++f) {
            structural = structural && !nf.factors[f].is_identity() && !(nf.factors[f] == w0);
            if (f + 1 < nf.factors.size()) {
              structural = structural && left_weighted(nf.factors[f], nf.factors[f + 1]);
            }
          }
          t.check(structural, what);
          // a second word; equality must imply equal Weyl images
          word v = w;
          if (!v.empty() && trial % 2) std::shuffle(v.begin(), v.end(), rng);
          if (equal(type, w, v)) t.check(evaluate(type, w) == evaluate(type, v), what);
          t.check(evaluate(type, to_word(type, nf)) == evaluate(type, w), what);
        }
      }
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ": " + std::to_string(o.garside_words) + " words each, "
                 + t.summary();
    });
  }

  // 7: surface model.
  inline result surface_model(options const& o) {
    return detail::timed(7, "surface model", 120, [&](result& r) {
      detail::tally t;
      for (auto const& type : detail::types(detail::range(family::A, 2, 7), o.max_rank)) {
        auto n = surface(type).enumerate().size();
        t.check(n == oracle::catalan(type.rank + 1), [&] {
          return type.str() + ": " + std::to_string(n) + " triangulations";
        });
      }
      auto flips = detail::types(detail::join({detail::range(family::A, 2, 6),
                                               detail::range(family::D, 4, 5)}),
                                 o.max_rank);
      for (auto const& type : flips) {
        surface s(type);
        for (auto const& tr : s.enumerate()) {
          auto q = s.quiver_of(tr);
          for (std::size_t k = 0; k < tr.arcs.size(); ++k) {
            auto what = [&] { return type.str() + ": flip at " + std::to_string(k + 1); };
            auto f    = s.flip(tr, k);
            t.check(s.flip(f, k) == tr, what);
            t.check(s.quiver_of(f) == mutate(q, static_cast<vertex>(k) + 1), what);
            // exactly two arcs complete the other n-1
            int completions = 0;
            for (auto const& x : s.all_arcs()) {
              bool ok = true;
              for (std::size_t j = 0; j < tr.arcs.size() && ok; ++j) {
                ok = j == k || (x != tr.arcs[j] && s.compatible(x, tr.arcs[j]));
              }
              completions += ok;
            }
            t.check(completions == 2, what);
          }
        }
      }
      for (auto const& [type, want] : {std::pair{dynkin_type{family::A, 5}, oracle::reference_a5()},
                                       std::pair{dynkin_type{family::D, 7}, oracle::reference_d7()}}) {
        surface s(type);
        auto    got = s.quiver_of(s.initial());
        bool    ok  = got == want;
        t.check(ok, [&] {
          std::string arrows;
          for (auto const& a : got.arrows()) {
            arrows += " " + std::to_string(a.source) + "->" + std::to_string(a.target);
          }
          return type.str() + " initial quiver differs from the reference (got" + arrows
                 + (isomorphic(got, want) ? ", isomorphic)" : ", not even isomorphic)");
        });
      }
      r.pass   = t.ok();
      r.detail = "Catalan A2-A7, flips on " + detail::names(flips) + ", reference quivers A5,D7: " + t.summary();
    });
  }

  // Every QP reached from (Dynkin, 0) by at most `depth` mutations.
  inline std::vector<qp> qp_sweep(dynkin_type const& type, int depth) {
    std::vector<qp>       out{with_zero_potential(dynkin_quiver(type))};
    std::set<std::string> seen{detail::qp_key(out[0])};
    std::size_t           begin = 0;
    for (int d = 0; d < depth; ++d) {
      std::size_t end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (vertex k : out[i].vertices()) {
          auto next = with_standard_names(qp_mutate(out[i], k));
          if (seen.insert(detail::qp_key(next)).second) out.push_back(std::move(next));
        }
      }
      begin = end;
    }
    return out;
  }

  inline std::vector<dynkin_type> qp_types(options const& o) {
    return detail::types(detail::join({detail::range(family::A, 3, 7), detail::range(family::D, 4, 6)}),
                         o.max_rank);
  }

  // 8: QP mutation stays in canonical form.
  inline result qp_stability(options const& o) {
    auto ts = qp_types(o);
    return detail::timed(8, "QP canonical-form stability", 300, [&](result& r) {
      detail::tally t;
      std::size_t   states = 0;
      for (auto const& type : ts) {
        auto all = qp_sweep(type, o.qp_depth);
        states += all.size();
        for (auto const& x : all) {
          for (vertex k : x.vertices()) {
            auto y    = qp_mutate(x, k);
            auto what = [&] { return type.str() + ": mu_" + std::to_string(k) + " of " + detail::qp_key(x); };
            t.check(y.underlying_quiver() == mutate(x.underlying_quiver(), k), what);
            auto rep = is_canonical_form(y);
            t.check(rep.ok(), [&] {
              return what() + ": " + (rep.problems.empty() ? "" : rep.problems.front());
            });
          }
        }
      }
      r.pass   = t.ok();
      r.detail = detail::names(ts) + ", depth " + std::to_string(o.qp_depth) + ": "
                 + std::to_string(states) + " distinct QPs, " + t.summary();
    });
  }

  // 9: d^2 = 0, the Ext table with its 3-CY symmetry, relators act trivially
  // on K0.
  inline result dg_k0(options const& o) {
    auto qts = qp_types(o);
    auto kts = detail::types(detail::join({detail::range(family::A, 3, 7),
                                           detail::range(family::D, 4, 6),
                                           {{family::E, 6}}}),
                             o.max_rank);
    return detail::timed(9, "dg and K0 checks", 120, [&](result& r) {
      detail::tally t;
      for (auto const& type : qts) {
        for (auto const& x : qp_sweep(type, o.qp_depth)) {
          auto bad = ginzburg_presentation_of(x).d_squared_failures();
          t.check(bad.empty(), [&] { return type.str() + ": d^2 != 0 on " + bad.front(); });
        }
      }
      for (auto const& type : kts) {
        auto cls = enumerate_mutation_class(dynkin_quiver(type));
        for (auto const& m : cls.members()) {
          for (vertex i : m.q.vertices()) {
            for (vertex j : m.q.vertices()) {
              auto d = hom_dims(m.q, i, j), e = hom_dims(m.q, j, i);
              for (int n = 0; n < 4; ++n) {
                t.check(d[n] == oracle::ext_dim(m.q, i, j, n) && d[n] == e[3 - n],
                        [&] { return type.str() + ": Ext table"; });
              }
            }
          }
          auto rep = verify_relations_k0(m.q);
          t.check(rep.ok(), [&] { return type.str() + ": rho(" + rep.failures.front() + ") != I"; });
        }
      }
      r.pass   = t.ok();
      r.detail = "d^2 on " + detail::names(qts) + ", K0 on " + detail::names(kts) + ": " + t.summary();
    });
  }

  inline std::vector<std::function<result(options const&)>> const& sweeps() {
    static std::vector<std::function<result(options const&)>> const s{
        involution,          class_stability, weyl_soundness, phi_isomorphism, one_implies_all,
        garside_consistency, surface_model,   qp_stability,   dg_k0};
    return s;
  }

  inline std::vector<result> run_all(options const& o,
                                     std::function<void(result const&)> const& report = {}) {
    std::vector<result> out;
    for (auto const& f : sweeps()) {
      out.push_back(f(o));
      if (report) report(out.back());
    }
    return out;
  }

  inline std::string format(result const& r) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << r.seconds
      << "s/" << r.limit << "s): " << r.detail;
    return s.str();
  }

}  // namespace bqm::verify

#endif  // BQM_VERIFY_HPP_
