#ifndef BQM_API_HPP_
#define BQM_API_HPP_

#include <functional>
#include <map>
#include <string>

#include "garside.hpp"
#include "ginzburg.hpp"
#include "json_io.hpp"
#include "mutation_class.hpp"
#include "mutation_iso.hpp"
#include "potential.hpp"
#include "presentation.hpp"
#include "surface.hpp"

// Request -> response handlers behind both the CLI and the HTTP service.
// input_error means a malformed request, domain_error a well-formed one the
// mathematics rejects.
namespace bqm::api {

  namespace detail {
    inline std::vector<vertex> path_from_json(json const& j) {
      if (!j.is_array()) throw input_error("'path' must be an array of vertices");
      std::vector<vertex> p;
      for (auto const& v : j) p.push_back(as_vertex(v));
      return p;
    }

    // Wrap nlohmann type errors as input errors.
    template <typename F>
    json guarded(F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw input_error(std::string("bad request: ") + e.what());
      }
    }
  }  // namespace detail

  // {"quiver":Q,"vertex":k} or {"quiver":Q,"path":[...]} -> Q'
  inline json mutate(json const& req) {
    return detail::guarded([&] {
      auto q = quiver_from_json(field(req, "quiver"));
      if (req.contains("path")) return to_json(bqm::mutate(q, detail::path_from_json(req["path"])));
      return to_json(bqm::mutate(q, as_vertex(field(req, "vertex"))));
    });
  }

  // {"quiver":Q} -> presentation of B_Q
  inline json presentation(json const& req) {
    return detail::guarded([&] {
      return to_json(presentation_of(quiver_from_json(field(req, "quiver"))));
    });
  }

  // {"quiver":Q,"vertex":k[,"inverse":true]} -> images of generators
  inline json phi(json const& req) {
    return detail::guarded([&] {
      auto q   = quiver_from_json(field(req, "quiver"));
      auto k   = as_vertex(field(req, "vertex"));
      bool inv = req.contains("inverse") && req["inverse"].get<bool>();
      return to_json(inv ? phi_inverse(q, k) : bqm::phi(q, k));
    });
  }

  // {"type":"A2","w1":...,"w2":...}, or {"quiver":Q,...} with words in the
  // generators of B_Q, which are carried to the standard Dynkin quiver.
  inline json wordeq(json const& req) {
    return detail::guarded([&] {
      auto        w1 = word_from_json(field(req, "w1"));
      auto        w2 = word_from_json(field(req, "w2"));
      dynkin_type t;
      if (req.contains("quiver")) {
        auto q  = quiver_from_json(req["quiver"]);
        auto st = standardize(q);
        w1      = apply_hom(st.hom, w1);
        w2      = apply_hom(st.hom, w2);
        t       = st.type;
      } else {
        t = type_from_json(field(req, "type"));
      }
      return json{{"equal", equal(t, w1, w2)},
                  {"normal_form_trivial", is_trivial(t, concat(w1, inverse(w2)))}};
    });
  }

  // {"type":"A2","word":...} -> normal form
  inline json normal_form(json const& req) {
    return detail::guarded([&] {
      auto t = type_from_json(field(req, "type"));
      return to_json(t, bqm::normal_form(t, word_from_json(field(req, "word"))));
    });
  }

  // {"quiver":Q} or {"type":"D5"} -> class up to isomorphism
  inline json mutation_class(json const& req) {
    return detail::guarded([&] {
      quiver seed = req.contains("quiver") ? quiver_from_json(req["quiver"])
                                           : dynkin_quiver(type_from_json(field(req, "type")));
      auto cls  = enumerate_mutation_class(seed);
      std::optional<dynkin_type> type;
      json                       members = json::array();
      for (auto const& m : cls.members()) {
        if (!type) {
          if (auto s = dynkin_shape(m.q)) type = s->type;
        }
        members.push_back({{"quiver", to_json(m.q)}, {"path", m.path}});
      }
      return json{{"type", type ? json(type->str()) : json(nullptr)},
                  {"size", cls.size()},
                  {"members", members}};
    });
  }

  // {"triangulation":T,"arc":i} (1-based) or "arc":{...} -> flipped T
  inline json surface_flip(json const& req) {
    return detail::guarded([&] {
      auto        t = triangulation_from_json(field(req, "triangulation"));
      surface     s(t.type);
      auto const& a = field(req, "arc");
      if (a.is_object()) return to_json(s.flip(t, arc_from_json(a)));
      auto i = as_int(a, "arc");
      if (i < 1 || i > static_cast<std::int64_t>(t.arcs.size())) {
        throw input_error("arc index " + std::to_string(i) + " out of range");
      }
      return to_json(s.flip(t, static_cast<std::size_t>(i - 1)));
    });
  }

  // {"triangulation":T} or {"type":"D7"} (initial triangulation) -> quiver
  inline json surface_quiver(json const& req) {
    return detail::guarded([&] {
      if (req.contains("triangulation")) {
        auto t = triangulation_from_json(req["triangulation"]);
        return to_json(surface(t.type).quiver_of(t));
      }
      surface s(type_from_json(field(req, "type")));
      return to_json(s.quiver_of(s.initial()));
    });
  }

  // {"type":"A3"} -> all triangulations
  inline json surface_enumerate(json const& req) {
    return detail::guarded([&] {
      surface s(type_from_json(field(req, "type")));
      json    ts = json::array();
      for (auto const& t : s.enumerate()) ts.push_back(to_json(t));
      return json{{"count", ts.size()}, {"triangulations", ts}};
    });
  }

  // {"type":"D5"} -> initial triangulation
  inline json surface_initial(json const& req) {
    return detail::guarded([&] {
      return to_json(surface(type_from_json(field(req, "type"))).initial());
    });
  }

  // {"qp":QP,"vertex":k} -> mutated QP
  inline json qp_mutate(json const& req) {
    return detail::guarded([&] {
      auto x = qp_from_json(field(req, "qp"));
      return to_json(bqm::qp_mutate(x, as_vertex(field(req, "vertex"))));
    });
  }

  // {"qp":QP} -> canonical-form report plus the d^2 check
  inline json qp_check(json const& req) {
    return detail::guarded([&] {
      auto x   = qp_from_json(field(req, "qp"));
      auto out = to_json(is_canonical_form(x));
      if (x.is_reduced()) {
        out["d_squared_failures"] = ginzburg_presentation_of(x).d_squared_failures();
      }
      return out;
    });
  }

  // {"quiver":Q} -> K0 relator report
  inline json k0_verify(json const& req) {
    return detail::guarded([&] {
      auto q   = quiver_from_json(field(req, "quiver"));
      auto out = to_json(verify_relations_k0(q));
      if (req.contains("matrices") && req["matrices"].get<bool>()) {
        json ms = json::object();
        for (vertex v : q.vertices()) ms[std::to_string(v)] = to_json(twist_matrix(q, v));
        out["matrices"] = ms;
      }
      return out;
    });
  }

  inline json health(json const&) {
    return {{"status", "ok"}};
  }

  using handler = std::function<json(json const&)>;

  // POST routes of the service.
  inline std::map<std::string, handler> const& routes() {
    static std::map<std::string, handler> const r{
        {"/api/mutate", mutate},
        {"/api/presentation", presentation},
        {"/api/wordeq", wordeq},
        {"/api/normal_form", normal_form},
        {"/api/phi", phi},
        {"/api/class", mutation_class},
        {"/api/surface/flip", surface_flip},
        {"/api/surface/quiver", surface_quiver},
        {"/api/surface/initial", surface_initial},
        {"/api/surface/enumerate", surface_enumerate},
        {"/api/qp/mutate", qp_mutate},
        {"/api/qp/check", qp_check},
        {"/api/k0/verify", k0_verify},
    };
    return r;
  }

  struct response {
    int         status;
    std::string body;
  };

  // 200, 400 (malformed) or 422 (domain violation), always with a JSON body.
  inline response dispatch(handler const& h, std::string const& body) {
    try {
      return {200, h(parse_json(body.empty() ? "{}" : body)).dump()};
    } catch (input_error const& e) {
      return {400, json{{"error", e.what()}}.dump()};
    } catch (domain_error const& e) {
      return {422, json{{"error", e.what()}}.dump()};
    } catch (std::exception const& e) {
      return {500, json{{"error", e.what()}}.dump()};
    }
  }

}  // namespace bqm::api

#endif  // BQM_API_HPP_
