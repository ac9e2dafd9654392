#ifndef BQM_GINZBURG_HPP_
#define BQM_GINZBURG_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mutation_iso.hpp"
#include "potential.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace bqm {

  struct graded_arrow {
    std::string name;
    vertex      source;
    vertex      target;
    int         degree;
  };

  // Generators: the m arrows of the QP (degree 0), then their reverses a*
  // (degree -1), then a loop t_i at each vertex (degree -2).  d(a) = 0,
  // d(a*) = d_a W, d(t_i) = e_i (sum a a* - a* a) e_i.
  struct ginzburg_presentation {
    std::vector<vertex>       vertices;
    std::vector<graded_arrow> arrows;
    std::vector<path_sum>     differential;

    // Leibniz rule with Koszul signs.
    path_sum d(path const& p) const {
      path_sum out;
      int      deg = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        rational sign(deg % 2 ? -1 : 1);
        for (auto const& [q, c] : differential.at(p[i])) {
          path r(p.begin(), p.begin() + i);
          r.insert(r.end(), q.begin(), q.end());
          r.insert(r.end(), p.begin() + i + 1, p.end());
          add_to(out, r, sign * c);
        }
        deg += arrows[p[i]].degree;
      }
      return out;
    }

    path_sum d(path_sum const& s) const {
      path_sum out;
      for (auto const& [p, c] : s) {
        for (auto const& [q, e] : d(p)) add_to(out, q, c * e);
      }
      return out;
    }

    int degree(path const& p) const {
      int deg = 0;
      for (int a : p) deg += arrows.at(a).degree;
      return deg;
    }

    // Names of generators g with d(d(g)) != 0.
    std::vector<std::string> d_squared_failures() const {
      std::vector<std::string> out;
      for (std::size_t g = 0; g < arrows.size(); ++g) {
        if (!d(differential[g]).empty()) out.push_back(arrows[g].name);
      }
      return out;
    }

    std::string format(path const& p) const {
      std::string s;
      for (int a : p) s += (s.empty() ? "" : " ") + arrows.at(a).name;
      return s.empty() ? "0" : s;
    }
  };

  inline ginzburg_presentation ginzburg_presentation_of(qp const& x) {
    if (!x.is_reduced()) {
      throw domain_error("the Ginzburg presentation needs a reduced QP");
    }
    auto const&           as = x.arrows();
    int                   m  = static_cast<int>(as.size());
    ginzburg_presentation g{x.vertices(), {}, {}};
    for (auto const& a : as) g.arrows.push_back({a.name, a.source, a.target, 0});
    for (auto const& a : as) g.arrows.push_back({a.name + "*", a.target, a.source, -1});
    for (vertex v : x.vertices()) {
      g.arrows.push_back({"t" + std::to_string(v), v, v, -2});
    }
    g.differential.assign(g.arrows.size(), {});
    for (int a = 0; a < m; ++a) g.differential[m + a] = cyclic_derivative(x, a);
    for (std::size_t i = 0; i < x.vertices().size(); ++i) {
      vertex v  = x.vertices()[i];
      auto&  dt = g.differential[2 * m + i];
      for (int a = 0; a < m; ++a) {
        if (as[a].source == v) add_to(dt, path{a, m + a}, rational(1));
        if (as[a].target == v) add_to(dt, path{m + a, a}, rational(-1));
      }
    }
    return g;
  }

  // dim Hom(S_i, S_j[n]) for n = 0..3.
  inline std::array<int, 4> hom_dims(quiver const& q, vertex i, vertex j) {
    q.index_of(i);
    q.index_of(j);
    int d = i == j;
    return {d, q.multiplicity(i, j), q.multiplicity(j, i), d};
  }

  struct int_matrix {
    std::size_t               n = 0;
    std::vector<std::int64_t> a;  // row-major

    static int_matrix identity(std::size_t n) {
      int_matrix m{n, std::vector<std::int64_t>(n * n, 0)};
      for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1;
      return m;
    }

    std::int64_t operator()(std::size_t r, std::size_t c) const {
      return a[r * n + c];
    }

    std::vector<std::vector<std::int64_t>> rows() const {
      std::vector<std::vector<std::int64_t>> out(n);
      for (std::size_t r = 0; r < n; ++r) out[r].assign(a.begin() + r * n, a.begin() + (r + 1) * n);
      return out;
    }

    friend int_matrix operator*(int_matrix const& x, int_matrix const& y) {
      int_matrix z{x.n, std::vector<std::int64_t>(x.n * x.n, 0)};
      for (std::size_t i = 0; i < x.n; ++i) {
        for (std::size_t k = 0; k < x.n; ++k) {
          auto v = x.a[i * x.n + k];
          if (!v) continue;
          for (std::size_t j = 0; j < x.n; ++j) z.a[i * x.n + j] += v * y.a[k * x.n + j];
        }
      }
      return z;
    }

    friend bool operator==(int_matrix const&, int_matrix const&) = default;
  };

  // chi_ij = sum_n (-1)^n dim Hom(S_i, S_j[n]) = #(j -> i) - #(i -> j), the
  // transpose of the exchange matrix.
  inline int_matrix euler_form(quiver const& q) {
    std::size_t n = q.rank();
    int_matrix  chi{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto d = hom_dims(q, q.vertices()[i], q.vertices()[j]);
        chi.a[i * n + j] = d[0] - d[1] + d[2] - d[3];
      }
    }
    return chi;
  }

  // T_i(x) = x - chi(e_i, x) e_i; the inverse flips the sign.
  inline int_matrix twist_matrix(quiver const& q, vertex i, bool inverse = false) {
    auto        chi = euler_form(q);
    std::size_t n = q.rank(), r = q.index_of(i);
    auto        t = int_matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) t.a[r * n + j] += (inverse ? 1 : -1) * chi(r, j);
    return t;
  }

  namespace detail {
    struct twist_rep {
      quiver                  q;
      std::vector<int_matrix> fwd, inv;

      explicit twist_rep(quiver const& q_) : q(q_) {
        for (vertex v : q.vertices()) {
          fwd.push_back(twist_matrix(q, v));
          inv.push_back(twist_matrix(q, v, true));
        }
      }

      int_matrix operator()(word const& w) const {
        auto m = int_matrix::identity(q.rank());
        for (int x : w) {
          auto i = q.index_of(std::abs(x));
          m      = m * (x > 0 ? fwd[i] : inv[i]);
        }
        return m;
      }
    };
  }  // namespace detail

  inline int_matrix twist_image(quiver const& q, word const& w) {
    return detail::twist_rep(q)(w);
  }

  struct k0_report {
    std::size_t              relators_checked = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  // Every relator of B_Q acts trivially on K_0 through the twists.
  inline k0_report verify_relations_k0(quiver const& q) {
    auto             p = presentation_of(q);
    detail::twist_rep rho(q);
    auto             id = int_matrix::identity(q.rank());
    k0_report        rep;
    for (auto const& r : p.relators) {
      ++rep.relators_checked;
      if (!(rho(r.w) == id)) rep.failures.push_back(format_word(r.w));
    }
    return rep;
  }

  // The twists of mu_k Q pulled back along phi_k satisfy the relators of
  // B_Q, and those of Q pulled back along the inverse satisfy B_{mu_k Q}'s.
  inline k0_report verify_mutation_k0(quiver const& q, vertex k) {
    auto              mq = mutate(q, k);
    auto              f = phi(q, k), g = phi_inverse(q, k);
    detail::twist_rep rho(q), rho_m(mq);
    auto              id = int_matrix::identity(q.rank());
    k0_report         rep;
    for (auto const& r : presentation_of(q).relators) {
      ++rep.relators_checked;
      if (!(rho_m(apply_hom(f, r.w)) == id)) rep.failures.push_back(format_word(r.w));
    }
    for (auto const& r : presentation_of(mq).relators) {
      ++rep.relators_checked;
      if (!(rho(apply_hom(g, r.w)) == id)) {
        rep.failures.push_back("mu: " + format_word(r.w));
      }
    }
    return rep;
  }

}  // namespace bqm

#endif  // BQM_GINZBURG_HPP_
