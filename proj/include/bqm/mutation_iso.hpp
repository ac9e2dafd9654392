#ifndef BQM_MUTATION_ISO_HPP_
#define BQM_MUTATION_ISO_HPP_

#include <deque>
#include <set>
#include <map>
#include <utility>
#include <vector>

#include "mutation_class.hpp"
#include "quiver.hpp"
#include "word.hpp"

namespace bqm {

  // phi_k : B_Q -> B_{mu_k Q}, s_i -> t_k t_i t_k^{-1} if i -> k, else t_i.
  inline group_hom phi(quiver const& q, vertex k) {
    if (!q.contains(k)) {
      throw input_error("unknown vertex " + std::to_string(k));
    }
    std::map<vertex, word> im;
    for (vertex i : q.vertices()) {
      im[i] = q.multiplicity(i, k) ? word{k, i, -k} : word{i};
    }
    return group_hom(q.vertices(), q.vertices(), std::move(im));
  }

  // The inverse B_{mu_k Q} -> B_Q: t_i -> s_k^{-1} s_i s_k if i -> k in Q.
  inline group_hom phi_inverse(quiver const& q, vertex k) {
    if (!q.contains(k)) {
      throw input_error("unknown vertex " + std::to_string(k));
    }
    std::map<vertex, word> im;
    for (vertex i : q.vertices()) {
      im[i] = q.multiplicity(i, k) ? word{-k, i, k} : word{i};
    }
    return group_hom(q.vertices(), q.vertices(), std::move(im));
  }

  // s_i -> s_k s_i s_k^{-1} for every i.
  inline group_hom conjugation(std::vector<vertex> const& gens, vertex k) {
    std::map<vertex, word> im;
    for (vertex i : gens) im[i] = free_reduce({k, i, -k});
    return group_hom(gens, gens, std::move(im));
  }

  struct transported {
    quiver    q;
    group_hom hom;  // B_Q -> B_q
  };

  inline transported transport(quiver const& q, std::vector<vertex> const& path) {
    transported t{q, group_hom::identity(q.vertices())};
    for (vertex k : path) {
      t.hom = compose(phi(t.q, k), t.hom);
      t.q   = mutate(t.q, k);
    }
    return t;
  }

  struct standardization {
    dynkin_type         type;
    std::vector<vertex> path;
    quiver              dynkin;  // mutate(Q, path), a Dynkin-shaped quiver
    std::vector<int>    label;   // label[index in dynkin.vertices()] in 1..n
    group_hom           hom;     // B_Q -> B_Delta, generators 1..n
  };

  // Breadth-first search from Q (deduplicated up to isomorphism) to the
  // nearest Dynkin-shaped quiver, then relabel its vertices by the standard
  // diagram numbering.
  inline standardization standardize(quiver const&        q,
                                     class_options const& opt = {}) {
    require_two_finite_shape(q);
    std::vector<vertex> path;
    quiver              target = q;
    auto                shape  = dynkin_shape(q);
    if (!shape) {
      struct node {
        quiver              q;
        std::vector<vertex> path;
      };
      std::deque<node>        todo{{q, {}}};
      std::set<canonical_key> seen{canonical_key_of(q)};
      std::size_t             visits = 0;
      while (!shape && !todo.empty()) {
        auto cur = std::move(todo.front());
        todo.pop_front();
        for (vertex k : cur.q.vertices()) {
          if (++visits > opt.budget) {
            throw budget_error("no Dynkin quiver found within "
                               + std::to_string(opt.budget)
                               + " mutations; input is not mutation-Dynkin");
          }
          auto next = mutate(cur.q, k);
          if (!seen.insert(canonical_key_of(next)).second) continue;
          auto p = cur.path;
          p.push_back(k);
          if ((shape = dynkin_shape(next))) {
            target = std::move(next);
            path   = std::move(p);
            break;
          }
          todo.push_back({std::move(next), std::move(p)});
        }
      }
      if (!shape) {
        throw domain_error("quiver is not mutation-Dynkin");
      }
    }
    auto                   tr = transport(q, path);
    std::map<vertex, word> relabel;
    std::vector<vertex>    std_gens;
    for (std::size_t x = 0; x < target.rank(); ++x) {
      relabel[target.vertices()[x]] = word{shape->label[x]};
      std_gens.push_back(static_cast<vertex>(x) + 1);
    }
    group_hom to_std(target.vertices(), std_gens, std::move(relabel));
    return {shape->type, path, target, shape->label, compose(to_std, tr.hom)};
  }

}  // namespace bqm

#endif  // BQM_MUTATION_ISO_HPP_
