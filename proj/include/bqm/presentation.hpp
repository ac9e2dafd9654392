#ifndef BQM_PRESENTATION_HPP_
#define BQM_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "quiver.hpp"
#include "word.hpp"

namespace bqm {

  enum class relator_kind { commuting, braid, cycle, square };

  inline std::string to_string(relator_kind k) {
    switch (k) {
      case relator_kind::commuting:
        return "commuting";
      case relator_kind::braid:
        return "braid";
      case relator_kind::cycle:
        return "cycle";
      case relator_kind::square:
        return "square";
    }
    return "?";
  }

  struct relator {
    word         w;
    relator_kind kind     = relator_kind::commuting;
    int          rotation = 0;  // cycle relators: L_m = L_{m+1}, m = rotation
    std::vector<vertex> cycle;  // cycle relators: the cycle, following arrows

    friend bool operator==(relator const&, relator const&) = default;
  };

  struct presentation {
    std::vector<vertex>  generators;
    std::vector<relator> relators;
  };

  namespace detail {
    // s_{c_m} s_{c_{m+1}} ... (n letters) followed by n-2 more, cyclically.
    inline word cycle_word(std::vector<vertex> const& c, std::size_t m) {
      std::size_t n = c.size();
      word        w;
      for (std::size_t i = 0; i < 2 * n - 2; ++i) w.push_back(c[(m + i) % n]);
      return w;
    }
  }  // namespace detail

  inline presentation presentation_of(quiver const& q) {
    require_two_finite_shape(q);
    presentation p{q.vertices(), {}};
    auto const&  vs = q.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        vertex i = vs[a], j = vs[b];
        if (q.multiplicity(j, i)) std::swap(i, j);
        if (q.multiplicity(i, j)) {
          p.relators.push_back({{i, j, i, -j, -i, -j}, relator_kind::braid});
        } else {
          p.relators.push_back({{i, j, -i, -j}, relator_kind::commuting});
        }
      }
    }
    for (auto const& c : chordless_cycles(q)) {
      for (std::size_t m = 0; m + 1 < c.vertices.size(); ++m) {
        word r = concat(detail::cycle_word(c.vertices, m),
                        inverse(detail::cycle_word(c.vertices, m + 1)));
        p.relators.push_back(
            {std::move(r), relator_kind::cycle, int(m) + 1, c.vertices});
      }
    }
    return p;
  }

  inline presentation coxeter_presentation_of(quiver const& q) {
    auto p = presentation_of(q);
    for (vertex i : q.vertices()) {
      p.relators.push_back({{i, i}, relator_kind::square});
    }
    return p;
  }

  // (s_{c_1} ... s_{c_{n-1}} s_{c_n} s_{c_{n-1}} ... s_{c_2})^2 for each
  // chordless cycle and each rotation of it.
  inline std::vector<word> barot_marsh_relators(quiver const& q) {
    require_two_finite_shape(q);
    std::vector<word> out;
    for (auto const& c : chordless_cycles(q)) {
      auto const& v = c.vertices;
      std::size_t n = v.size();
      for (std::size_t m = 0; m < n; ++m) {
        word half;
        for (std::size_t i = 0; i < n; ++i) half.push_back(v[(m + i) % n]);
        for (std::size_t i = n - 1; i-- > 1;) half.push_back(v[(m + i) % n]);
        out.push_back(power(half, 2));
      }
    }
    return out;
  }

}  // namespace bqm

#endif  // BQM_PRESENTATION_HPP_
