#ifndef BQM_MUTATION_CLASS_HPP_
#define BQM_MUTATION_CLASS_HPP_

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "quiver.hpp"

namespace bqm {

  // Enumeration budget in labelled quivers; BQM_MAX_CLASS overrides.
  inline std::size_t default_class_budget() {
    if (char const* env = std::getenv("BQM_MAX_CLASS")) {
      try {
        return static_cast<std::size_t>(std::stoull(env));
      } catch (...) {
        throw input_error("BQM_MAX_CLASS must be a positive integer");
      }
    }
    return 1'000'000;
  }

  // Beyond this the class is certainly infinite (and keys would overflow).
  inline constexpr std::size_t max_multiplicity = 64;

  struct class_options {
    std::size_t budget  = default_class_budget();
    unsigned    workers = 0;  // 0 = hardware concurrency
  };

  struct class_member {
    quiver              q;
    std::vector<vertex> path;  // mutation path from the seed to q
    canonical_key       key;
  };

  // Mutation class up to isomorphism.  Members are the first labelled
  // representatives met by a breadth-first search from the seed, so each
  // path is a shortest one.
  class mutation_class {
   public:
    quiver const& seed() const noexcept {
      return members_.front().q;
    }
    std::vector<class_member> const& members() const noexcept {
      return members_;
    }
    std::size_t size() const noexcept {
      return members_.size();
    }
    std::size_t labelled_visits() const noexcept {
      return visits_;
    }

    std::optional<std::size_t> find(canonical_key const& key) const {
      auto it = index_.find(key);
      if (it == index_.end()) return std::nullopt;
      return it->second;
    }
    std::optional<std::size_t> find(quiver const& q) const {
      return find(canonical_key_of(q));
    }

    friend mutation_class enumerate_mutation_class(quiver const&,
                                                   class_options const&);

   private:
    std::vector<class_member>            members_;
    std::map<canonical_key, std::size_t> index_;
    std::size_t                          visits_ = 0;
  };

  namespace detail {
    template <typename F>
    void parallel_for(std::size_t count, unsigned workers, F&& f) {
      if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
      if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
      }
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::mutex               error_mu;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w) {
        pool.emplace_back([&] {
          try {
            for (std::size_t i = next++; i < count; i = next++) f(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
            next = count;
          }
        });
      }
      for (auto& t : pool) t.join();
      if (error) std::rethrow_exception(error);
    }
  }  // namespace detail

  // Level-synchronous BFS: each level's mutations are computed (possibly in
  // parallel) and then merged in a fixed order, so the result does not
  // depend on the worker count.
  inline mutation_class enumerate_mutation_class(quiver const&        seed,
                                                 class_options const& opt = {}) {
    mutation_class cls;
    auto           key = canonical_key_of(seed);
    cls.members_.push_back({seed, {}, key});
    cls.index_.emplace(key, 0);

    std::size_t const        n = seed.rank();
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
      std::size_t count = frontier.size() * n;
      cls.visits_ += count;
      if (cls.visits_ > opt.budget) {
        throw budget_error("mutation class did not close within "
                           + std::to_string(opt.budget)
                           + " labelled quivers; input is not mutation-Dynkin"
                             " (or raise BQM_MAX_CLASS)");
      }
      struct result {
        quiver        q;
        canonical_key key;
      };
      std::vector<result> results(count);
      detail::parallel_for(count, opt.workers, [&](std::size_t i) {
        auto const& m = cls.members_[frontier[i / n]];
        vertex      k = m.q.vertices()[i % n];
        results[i].q   = mutate(m.q, k);
        auto const& as = results[i].q.arrows();
        for (std::size_t a = 0; a + max_multiplicity < as.size(); ++a) {
          if (as[a] == as[a + max_multiplicity]) {
            throw budget_error("arrow multiplicity exceeds "
                               + std::to_string(max_multiplicity)
                               + "; input is not mutation-Dynkin");
          }
        }
        results[i].key = canonical_key_of(results[i].q);
      });
      std::vector<std::size_t> next;
      for (std::size_t i = 0; i < count; ++i) {
        if (cls.index_.count(results[i].key)) continue;
        auto const& parent = cls.members_[frontier[i / n]];
        auto        path   = parent.path;
        path.push_back(parent.q.vertices()[i % n]);
        cls.index_.emplace(results[i].key, cls.members_.size());
        next.push_back(cls.members_.size());
        cls.members_.push_back(
            {std::move(results[i].q), std::move(path), results[i].key});
      }
      frontier.swap(next);
    }
    return cls;
  }

  // The ADE type of q's mutation class, if some member is an orientation of
  // a Dynkin diagram.
  inline std::optional<dynkin_type> dynkin_type_of(quiver const&        q,
                                                   class_options const& opt
                                                   = {}) {
    if (auto s = dynkin_shape(q)) return s->type;
    auto cls = enumerate_mutation_class(q, opt);
    for (auto const& m : cls.members()) {
      if (auto s = dynkin_shape(m.q)) return s->type;
    }
    return std::nullopt;
  }

}  // namespace bqm

#endif  // BQM_MUTATION_CLASS_HPP_
