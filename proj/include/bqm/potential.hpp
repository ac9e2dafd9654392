#ifndef BQM_POTENTIAL_HPP_
#define BQM_POTENTIAL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "errors.hpp"
#include "quiver.hpp"

// Quivers with potential over Q, truncated at a fixed path length.
namespace bqm {

  using rational = boost::rational<std::int64_t>;

  inline std::string to_string(rational const& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }

  inline rational parse_rational(std::string s) {
    // accept a typographic minus sign
    if (s.rfind("\xE2\x88\x92", 0) == 0) s = "-" + s.substr(3);
    auto bad = [&] { return input_error("bad rational coefficient '" + s + "'"); };
    auto parse_int = [&](std::string const& t) -> std::int64_t {
      if (t.empty()) throw bad();
      std::size_t pos = 0;
      std::int64_t v  = 0;
      try {
        v = std::stoll(t, &pos);
      } catch (...) {
        throw bad();
      }
      if (pos != t.size()) throw bad();
      return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return rational(parse_int(s));
    auto d = parse_int(s.substr(slash + 1));
    if (d == 0) throw input_error("zero denominator in '" + s + "'");
    return rational(parse_int(s.substr(0, slash)), d);
  }

  struct qp_arrow {
    std::string name;
    vertex      source;
    vertex      target;

    friend bool operator==(qp_arrow const&, qp_arrow const&)  = default;
    friend auto operator<=>(qp_arrow const&, qp_arrow const&) = default;
  };

  // Arrow indices into qp::arrows().
  using path     = std::vector<int>;
  using path_sum = std::map<path, rational>;

  // Least rotation.
  inline path canonical_rotation(path const& p) {
    path best = p;
    for (std::size_t r = 1; r < p.size(); ++r) {
      path c(p.begin() + r, p.end());
      c.insert(c.end(), p.begin(), p.begin() + r);
      if (c < best) best = std::move(c);
    }
    return best;
  }

  inline void add_to(path_sum& s, path const& p, rational c) {
    if (c.numerator() == 0) return;
    auto [it, fresh] = s.emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second.numerator() == 0) s.erase(it);
    }
  }

  struct potential_term {
    std::vector<std::string> cycle;  // arrow names
    rational                 coeff;
  };

  // Arrows are kept sorted by name, which fixes the order used for
  // canonical rotations.  Terms are stored once per rotation class.
  class qp {
   public:
    qp() = default;

    qp(std::vector<vertex> vertices, std::vector<qp_arrow> arrows,
       std::vector<potential_term> const& terms = {})
        : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
      std::sort(vertices_.begin(), vertices_.end());
      if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw input_error("duplicate vertex id");
      }
      std::sort(arrows_.begin(), arrows_.end(),
                [](auto const& a, auto const& b) { return a.name < b.name; });
      for (std::size_t i = 0; i < arrows_.size(); ++i) {
        auto const& a = arrows_[i];
        if (a.name.empty()) throw input_error("arrow with an empty name");
        if (i && arrows_[i - 1].name == a.name) {
          throw input_error("duplicate arrow name '" + a.name + "'");
        }
        if (!contains(a.source) || !contains(a.target)) {
          throw input_error("arrow '" + a.name + "' refers to an unknown vertex");
        }
        if (a.source == a.target) throw input_error("loop '" + a.name + "'");
      }
      for (auto const& t : terms) {
        path p;
        for (auto const& n : t.cycle) p.push_back(arrow_index(n));
        add_term(p, t.coeff);
      }
    }

    std::vector<vertex> const& vertices() const noexcept {
      return vertices_;
    }
    std::vector<qp_arrow> const& arrows() const noexcept {
      return arrows_;
    }
    path_sum const& terms() const noexcept {
      return terms_;
    }

    bool contains(vertex v) const {
      return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    int arrow_index(std::string const& name) const {
      auto it = std::lower_bound(
          arrows_.begin(), arrows_.end(), name,
          [](qp_arrow const& a, std::string const& n) { return a.name < n; });
      if (it == arrows_.end() || it->name != name) {
        throw input_error("unknown arrow '" + name + "'");
      }
      return static_cast<int>(it - arrows_.begin());
    }

    void add_term(path const& p, rational c) {
      if (p.empty()) throw input_error("empty potential term");
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= static_cast<int>(arrows_.size())) {
          throw input_error("potential term uses an unknown arrow");
        }
        auto const& a = arrows_[p[i]];
        auto const& b = arrows_[p[(i + 1) % p.size()]];
        if (a.target != b.source) {
          throw input_error("potential term " + format(p) + " is not a cycle");
        }
      }
      add_to(terms_, canonical_rotation(p), c);
    }

    std::vector<potential_term> term_list() const {
      std::vector<potential_term> out;
      for (auto const& [p, c] : terms_) {
        potential_term t{{}, c};
        for (int a : p) t.cycle.push_back(arrows_[a].name);
        out.push_back(std::move(t));
      }
      return out;
    }

    std::string format(path const& p) const {
      std::string s;
      for (int a : p) {
        if (!s.empty()) s += ' ';
        s += a >= 0 && a < static_cast<int>(arrows_.size()) ? arrows_[a].name : "?";
      }
      return s;
    }

    bool has_two_cycle() const {
      for (auto const& a : arrows_) {
        for (auto const& b : arrows_) {
          if (a.source == b.target && a.target == b.source) return true;
        }
      }
      return false;
    }

    bool is_reduced() const {
      if (has_two_cycle()) return false;
      for (auto const& [p, c] : terms_) {
        if (p.size() < 3) return false;
      }
      return true;
    }

    // Throws unless there are no oriented 2-cycles.
    quiver underlying_quiver() const {
      std::vector<arrow> as;
      for (auto const& a : arrows_) as.push_back({a.source, a.target});
      return quiver(vertices_, std::move(as));
    }

    friend bool operator==(qp const&, qp const&) = default;

   private:
    std::vector<vertex>   vertices_;
    std::vector<qp_arrow> arrows_;
    path_sum              terms_;
  };

  // Arrow names for a plain quiver: a, b, ..., z, then x26, x27, ...
  inline std::string standard_arrow_name(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "x" + std::to_string(i);
  }

  inline qp with_zero_potential(quiver const& q) {
    std::vector<qp_arrow> as;
    for (std::size_t i = 0; i < q.arrows().size(); ++i) {
      as.push_back({standard_arrow_name(i), q.arrows()[i].source, q.arrows()[i].target});
    }
    return qp(q.vertices(), std::move(as));
  }

  // Rename the arrows a, b, c, ... in (source, target, old name) order.
  inline qp with_standard_names(qp const& x) {
    std::vector<int> order(x.arrows().size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      auto const &a = x.arrows()[i], &b = x.arrows()[j];
      return std::tie(a.source, a.target, a.name) < std::tie(b.source, b.target, b.name);
    });
    std::vector<std::string> name(order.size());
    std::vector<qp_arrow>    as;
    for (std::size_t r = 0; r < order.size(); ++r) {
      auto const& a = x.arrows()[order[r]];
      name[order[r]] = standard_arrow_name(r);
      as.push_back({name[order[r]], a.source, a.target});
    }
    std::vector<potential_term> ts;
    for (auto const& [p, c] : x.terms()) {
      potential_term t{{}, c};
      for (int a : p) t.cycle.push_back(name[a]);
      ts.push_back(std::move(t));
    }
    return qp(x.vertices(), std::move(as), ts);
  }

  // For each occurrence of a: the rest of the cycle, starting just after a.
  inline path_sum cyclic_derivative(qp const& x, int a) {
    if (a < 0 || a >= static_cast<int>(x.arrows().size())) {
      throw input_error("unknown arrow index " + std::to_string(a));
    }
    path_sum out;
    for (auto const& [p, c] : x.terms()) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] != a) continue;
        path d(p.begin() + i + 1, p.end());
        d.insert(d.end(), p.begin(), p.begin() + i);
        add_to(out, d, c);
      }
    }
    return out;
  }

  inline path_sum cyclic_derivative(qp const& x, std::string const& name) {
    return cyclic_derivative(x, x.arrow_index(name));
  }

  // sum over arrows of a . d_a W - d_a W . a, as a sum of (non-cyclic) paths.
  inline path_sum derivative_commutator(qp const& x) {
    path_sum out;
    for (int a = 0; a < static_cast<int>(x.arrows().size()); ++a) {
      for (auto const& [p, c] : cyclic_derivative(x, a)) {
        path l{a}, r = p;
        l.insert(l.end(), p.begin(), p.end());
        r.push_back(a);
        add_to(out, l, c);
        add_to(out, r, -c);
      }
    }
    return out;
  }

  namespace detail {
    inline std::string star(std::string const& n) {
      if (!n.empty() && n.back() == '*') return n.substr(0, n.size() - 1);
      return n + "*";
    }
  }  // namespace detail

  // Non-reduced mutation at k.  For a : i -> k and b : k -> j the composite
  // [ba] : i -> j replaces each factor a b of W, and [ba] b* a* is added.
  inline qp premutate(qp const& x, vertex k) {
    if (!x.contains(k)) {
      throw input_error("cannot mutate at unknown vertex " + std::to_string(k));
    }
    auto const&      as = x.arrows();
    std::vector<int> in, out;
    for (int i = 0; i < static_cast<int>(as.size()); ++i) {
      if (as[i].target == k) in.push_back(i);
      if (as[i].source == k) out.push_back(i);
    }
    for (int a : in) {
      for (int b : out) {
        if (as[a].source == as[b].target) {
          throw domain_error("vertex " + std::to_string(k) + " lies on a 2-cycle");
        }
      }
    }
    std::vector<qp_arrow> next;
    for (auto const& a : as) {
      if (a.source != k && a.target != k) next.push_back(a);
    }
    std::map<std::pair<int, int>, std::string> composite;
    for (int a : in) {
      for (int b : out) {
        auto n = "[" + as[b].name + as[a].name + "]";
        composite[{a, b}] = n;
        next.push_back({n, as[a].source, as[b].target});
      }
    }
    for (int a : in) next.push_back({detail::star(as[a].name), k, as[a].source});
    for (int b : out) next.push_back({detail::star(as[b].name), as[b].target, k});

    std::vector<potential_term> ts;
    for (auto const& [p, c] : x.terms()) {
      // rotate so the cycle does not start at k
      std::size_t s = 0;
      while (as[p[s]].source == k) ++s;
      path r(p.begin() + s, p.end());
      r.insert(r.end(), p.begin(), p.begin() + s);
      potential_term t{{}, c};
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (as[r[i]].target == k) {
          t.cycle.push_back(composite.at({r[i], r[i + 1]}));
          ++i;
        } else {
          t.cycle.push_back(as[r[i]].name);
        }
      }
      ts.push_back(std::move(t));
    }
    for (auto const& [ab, n] : composite) {
      ts.push_back({{n, detail::star(as[ab.second].name), detail::star(as[ab.first].name)},
                    rational(1)});
    }
    return qp(x.vertices(), std::move(next), ts);
  }

  inline std::size_t default_degree_cap(qp const& x) {
    std::size_t longest = 0;
    for (auto const& [p, c] : x.terms()) longest = std::max(longest, p.size());
    return std::max(longest, x.vertices().size()) + 2;
  }

  namespace detail {
    // Substitute arrows simultaneously, dropping paths longer than cap.
    inline path_sum substitute(path_sum const&                  w,
                               std::map<int, path_sum> const& sub,
                               std::size_t                      cap) {
      path_sum out;
      for (auto const& [p, c] : w) {
        path_sum partial{{path{}, c}};
        for (int a : p) {
          auto     it = sub.find(a);
          path_sum next;
          for (auto const& [q, d] : partial) {
            if (it == sub.end()) {
              auto r = q;
              r.push_back(a);
              add_to(next, r, d);
              continue;
            }
            for (auto const& [s, e] : it->second) {
              if (q.size() + s.size() > cap) continue;
              auto r = q;
              r.insert(r.end(), s.begin(), s.end());
              add_to(next, r, d * e);
            }
          }
          partial = std::move(next);
        }
        for (auto const& [q, d] : partial) {
          if (q.size() <= cap) add_to(out, canonical_rotation(q), d);
        }
      }
      return out;
    }

    inline bool mentions(path const& p, int u, int v) {
      return std::find(p.begin(), p.end(), u) != p.end()
             || std::find(p.begin(), p.end(), v) != p.end();
    }
  }  // namespace detail

  // Split off the trivial part: for each term lambda u v on a 2-cycle,
  // substitute u -> u - (d_v W - lambda u)/lambda and v -> v - (d_u W -
  // lambda v)/lambda until u and v occur nowhere else, then delete the term
  // and both arrows.  Paths longer than cap are discarded throughout.
  inline qp reduce(qp const& x, std::optional<std::size_t> cap_opt = std::nullopt) {
    std::size_t cap = cap_opt ? *cap_opt : default_degree_cap(x);
    qp          cur = x;
    for (;;) {
      std::optional<std::pair<path, rational>> quad;
      for (auto const& [p, c] : cur.terms()) {
        if (p.size() == 1) {
          throw domain_error("potential term of length 1: " + cur.format(p));
        }
        if (p.size() == 2 && p[0] != p[1]) {
          quad = {p, c};
          break;
        }
        if (p.size() == 2) {
          throw domain_error("potential term " + cur.format(p) + " is a square of an arrow");
        }
      }
      if (!quad) break;
      int      u = quad->first[0], v = quad->first[1];
      rational lambda = quad->second;
      path_sum w      = cur.terms();
      bool     done   = false;
      for (std::size_t iter = 0; iter <= cap + 1; ++iter) {
        qp tmp(cur.vertices(), cur.arrows());
        for (auto const& [p, c] : w) tmp.add_term(p, c);
        auto du = cyclic_derivative(tmp, v);  // lambda u + corrections
        auto dv = cyclic_derivative(tmp, u);  // lambda v + corrections
        add_to(du, path{u}, -lambda);
        add_to(dv, path{v}, -lambda);
        if (du.empty() && dv.empty()) {
          done = true;
          break;
        }
        std::map<int, path_sum> sub;
        for (auto [a, d] : {std::pair{u, &du}, std::pair{v, &dv}}) {
          path_sum s{{path{a}, rational(1)}};
          for (auto const& [p, c] : *d) {
            if (p.size() < 2) {
              throw domain_error("quadratic part of the potential is not diagonal at "
                                 + cur.format(quad->first));
            }
            add_to(s, p, -c / lambda);
          }
          sub[a] = std::move(s);
        }
        w = detail::substitute(w, sub, cap);
      }
      if (!done) {
        throw domain_error("reduction did not converge below length "
                           + std::to_string(cap));
      }
      std::vector<qp_arrow> keep;
      for (int a = 0; a < static_cast<int>(cur.arrows().size()); ++a) {
        if (a != u && a != v) keep.push_back(cur.arrows()[a]);
      }
      std::vector<potential_term> ts;
      for (auto const& [p, c] : w) {
        if (detail::mentions(p, u, v)) continue;
        potential_term t{{}, c};
        for (int a : p) t.cycle.push_back(cur.arrows()[a].name);
        ts.push_back(std::move(t));
      }
      cur = qp(cur.vertices(), std::move(keep), ts);
    }
    if (cur.has_two_cycle()) {
      throw domain_error("a 2-cycle remains with no potential term on it");
    }
    return cur;
  }

  inline qp qp_mutate(qp const& x, vertex k) {
    return reduce(premutate(x, k));
  }

  // Coefficient 1 on every oriented chordless cycle.
  inline qp sum_of_chordless_cycles(quiver const& q) {
    auto                        base = with_zero_potential(q);
    std::vector<potential_term> ts;
    for (auto const& c : chordless_cycles(q)) {
      if (!c.oriented) continue;
      potential_term t{{}, rational(1)};
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        vertex s = c.vertices[i], d = c.vertices[(i + 1) % c.vertices.size()];
        if (q.multiplicity(s, d) != 1) {
          throw domain_error("chordless cycle through a multiple arrow");
        }
        for (auto const& a : base.arrows()) {
          if (a.source == s && a.target == d) t.cycle.push_back(a.name);
        }
      }
      ts.push_back(std::move(t));
    }
    return qp(base.vertices(), base.arrows(), ts);
  }

  namespace detail {
    // Integer solution of m x = y (m is rows x cols, row-major), by column
    // operations bringing m to echelon form.
    inline std::optional<std::vector<std::int64_t>> solve_integer(
        std::vector<std::int64_t> m, std::size_t rows, std::size_t cols,
        std::vector<std::int64_t> const& y) {
      std::vector<std::int64_t> u(cols * cols, 0);
      for (std::size_t i = 0; i < cols; ++i) u[i * cols + i] = 1;
      auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t f) {
        for (std::size_t r = 0; r < rows; ++r) m[r * cols + dst] -= f * m[r * cols + src];
        for (std::size_t r = 0; r < cols; ++r) u[r * cols + dst] -= f * u[r * cols + src];
      };
      auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r * cols + a], m[r * cols + b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r * cols + a], u[r * cols + b]);
      };
      std::vector<std::optional<std::size_t>> pivot(rows);
      std::size_t                             col = 0;
      for (std::size_t r = 0; r < rows && col < cols; ++r) {
        for (;;) {
          std::optional<std::size_t> best;
          for (std::size_t j = col; j < cols; ++j) {
            auto v = m[r * cols + j];
            if (v && (!best || std::abs(v) < std::abs(m[r * cols + *best]))) best = j;
          }
          if (!best) break;
          col_swap(col, *best);
          bool clean = true;
          for (std::size_t j = col + 1; j < cols; ++j) {
            auto f = m[r * cols + j] / m[r * cols + col];
            if (f) col_axpy(j, col, f);
            clean = clean && m[r * cols + j] == 0;
          }
          if (clean) {
            pivot[r] = col++;
            break;
          }
        }
      }
      std::vector<std::int64_t> z(cols, 0);
      for (std::size_t r = 0; r < rows; ++r) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) {
          if (!pivot[r] || j != *pivot[r]) acc += m[r * cols + j] * z[j];
        }
        auto rest = y[r] - acc;
        if (pivot[r]) {
          auto p = m[r * cols + *pivot[r]];
          if (rest % p) return std::nullopt;
          z[*pivot[r]] = rest / p;
        } else if (rest) {
          return std::nullopt;
        }
      }
      std::vector<std::int64_t> x(cols, 0);
      for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) x[i] += u[i * cols + j] * z[j];
      }
      return x;
    }

    inline std::vector<std::int64_t> prime_factors(std::int64_t v) {
      std::vector<std::int64_t> out;
      v = std::abs(v);
      for (std::int64_t p = 2; p * p <= v; ++p) {
        if (v % p == 0) out.push_back(p);
        while (v % p == 0) v /= p;
      }
      if (v > 1) out.push_back(v);
      return out;
    }

    inline int valuation(std::int64_t v, std::int64_t p) {
      int k = 0;
      for (v = std::abs(v); v && v % p == 0; v /= p) ++k;
      return k;
    }
  }  // namespace detail

  struct canonical_form_report {
    bool                            support_ok  = false;
    bool                            rescalable  = false;
    std::vector<std::string>        problems;
    std::map<std::string, rational> scalars;  // arrow -> mu_a

    bool ok() const noexcept {
      return support_ok && rescalable;
    }
  };

  // Is W the sum of chordless cycles after rescaling arrows a -> mu_a a?
  inline canonical_form_report is_canonical_form(qp const& x) {
    canonical_form_report rep;
    if (!x.is_reduced()) {
      rep.problems.push_back("not reduced");
      return rep;
    }
    auto              q = x.underlying_quiver();
    std::vector<path> cycles;
    for (auto const& c : chordless_cycles(q)) {
      if (!c.oriented) continue;
      path p;
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        vertex s = c.vertices[i], d = c.vertices[(i + 1) % c.vertices.size()];
        for (int a = 0; a < static_cast<int>(x.arrows().size()); ++a) {
          if (x.arrows()[a].source == s && x.arrows()[a].target == d) p.push_back(a);
        }
      }
      if (p.size() != c.vertices.size()) {
        rep.problems.push_back("chordless cycle through a multiple arrow");
        return rep;
      }
      cycles.push_back(canonical_rotation(p));
    }
    std::sort(cycles.begin(), cycles.end());
    std::vector<path> support;
    for (auto const& [p, c] : x.terms()) support.push_back(p);
    rep.support_ok = support == cycles;
    if (!rep.support_ok) {
      for (auto const& p : cycles) {
        if (!x.terms().count(p)) rep.problems.push_back("missing cycle " + x.format(p));
      }
      for (auto const& p : support) {
        if (!std::binary_search(cycles.begin(), cycles.end(), p)) {
          rep.problems.push_back("extra term " + x.format(p));
        }
      }
      return rep;
    }

    // exponents of -1 (mod 2) and of each prime (over Z)
    std::size_t               rows = cycles.size(), cols = x.arrows().size();
    std::vector<std::int64_t> m(rows * cols, 0);
    std::set<std::int64_t>    primes;
    for (std::size_t r = 0; r < rows; ++r) {
      for (int a : cycles[r]) m[r * cols + a] += 1;
      auto c = x.terms().at(cycles[r]);
      for (auto p : detail::prime_factors(c.numerator())) primes.insert(p);
      for (auto p : detail::prime_factors(c.denominator())) primes.insert(p);
    }
    std::vector<rational> mu(cols, rational(1));
    auto                  fail = [&](std::string const& why) {
      rep.problems.push_back(why);
      return rep;
    };
    {
      // sign: solve over Z/2 by elimination
      std::vector<std::vector<int>> a(rows, std::vector<int>(cols + 1, 0));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < cols; ++j) a[r][j] = m[r * cols + j] & 1;
        a[r][cols] = x.terms().at(cycles[r]).numerator() < 0;
      }
      std::vector<int> where(cols, -1);
      std::size_t      row = 0;
      for (std::size_t j = 0; j < cols && row < rows; ++j) {
        std::size_t s = row;
        while (s < rows && !a[s][j]) ++s;
        if (s == rows) continue;
        std::swap(a[s], a[row]);
        for (std::size_t r = 0; r < rows; ++r) {
          if (r != row && a[r][j]) {
            for (std::size_t k = j; k <= cols; ++k) a[r][k] ^= a[row][k];
          }
        }
        where[j] = static_cast<int>(row++);
      }
      for (std::size_t r = row; r < rows; ++r) {
        if (a[r][cols]) return fail("signs cannot be fixed by negating arrows");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (where[j] >= 0 && a[where[j]][cols]) mu[j] = -mu[j];
      }
    }
    for (auto p : primes) {
      std::vector<std::int64_t> y(rows);
      for (std::size_t r = 0; r < rows; ++r) {
        auto c = x.terms().at(cycles[r]);
        y[r]   = detail::valuation(c.denominator(), p) - detail::valuation(c.numerator(), p);
      }
      auto sol = detail::solve_integer(m, rows, cols, y);
      if (!sol) return fail("coefficients cannot be rescaled to 1 (prime " + std::to_string(p) + ")");
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::int64_t e = 0; e < std::abs((*sol)[j]); ++e) {
          mu[j] = (*sol)[j] > 0 ? mu[j] * p : mu[j] / p;
        }
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      rational prod = x.terms().at(cycles[r]);
      for (int a : cycles[r]) prod *= mu[a];
      if (prod != rational(1)) return fail("rescaling check failed on " + x.format(cycles[r]));
    }
    rep.rescalable = true;
    for (std::size_t j = 0; j < cols; ++j) rep.scalars[x.arrows()[j].name] = mu[j];
    return rep;
  }

}  // namespace bqm

#endif  // BQM_POTENTIAL_HPP_
