#ifndef BQM_JSON_IO_HPP_
#define BQM_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "dynkin.hpp"
#include "errors.hpp"
#include "garside.hpp"
#include "ginzburg.hpp"
#include "mutation_class.hpp"
#include "potential.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "surface.hpp"
#include "word.hpp"

// JSON shapes shared by the CLI and the service.  Emitted objects keep
// insertion order so output is stable.
namespace bqm {

  using json = nlohmann::ordered_json;

  inline json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw input_error(std::string("malformed JSON: ") + e.what());
    }
  }

  inline json const& field(json const& j, char const* name) {
    if (!j.is_object()) throw input_error("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw input_error(std::string("missing field '") + name + "'");
    return *it;
  }

  inline std::int64_t as_int(json const& j, char const* what) {
    if (!j.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
  }

  inline vertex as_vertex(json const& j) {
    auto v = as_int(j, "vertex id");
    if (v <= 0 || v > 1'000'000) throw input_error("vertex id out of range: " + std::to_string(v));
    return static_cast<vertex>(v);
  }

  inline std::string as_string(json const& j, char const* what) {
    if (!j.is_string()) throw input_error(std::string(what) + " must be a string");
    return j.get<std::string>();
  }

  // quivers

  inline quiver quiver_from_json(json const& j) {
    auto const& vs = field(j, "vertices");
    auto const& as = field(j, "arrows");
    if (!vs.is_array() || !as.is_array()) {
      throw input_error("quiver 'vertices' and 'arrows' must be arrays");
    }
    std::vector<vertex> vertices;
    for (auto const& v : vs) vertices.push_back(as_vertex(v));
    std::vector<arrow> arrows;
    for (auto const& a : as) {
      if (!a.is_array() || a.size() != 2) throw input_error("an arrow is a [source,target] pair");
      arrows.push_back({as_vertex(a[0]), as_vertex(a[1])});
    }
    return quiver(std::move(vertices), std::move(arrows));
  }

  inline json to_json(quiver const& q) {
    json arrows = json::array();
    for (auto const& a : q.arrows()) arrows.push_back({a.source, a.target});
    return {{"vertices", q.vertices()}, {"arrows", arrows}};
  }

  // words: [1,-2] or "s1 s2^-1"

  inline word word_from_json(json const& j) {
    if (j.is_string()) return parse_word(j.get<std::string>());
    if (!j.is_array()) throw input_error("a word is an array of nonzero integers or a string");
    word w;
    for (auto const& x : j) {
      auto v = as_int(x, "word letter");
      if (v == 0 || v > 1'000'000 || v < -1'000'000) {
        throw input_error("bad word letter " + std::to_string(v));
      }
      w.push_back(static_cast<int>(v));
    }
    return w;
  }

  inline dynkin_type type_from_json(json const& j) {
    return parse_dynkin_type(as_string(j, "type"));
  }

  inline json to_json(presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relators) {
      rels.push_back({{"word", r.w}, {"kind", to_string(r.kind)}});
    }
    return {{"generators", p.generators}, {"relators", rels}};
  }

  inline json to_json(group_hom const& h) {
    json im = json::object();
    for (vertex v : h.source()) im[std::to_string(v)] = h.image(v);
    return {{"images", im}};
  }

  inline json to_json(dynkin_type const& t, garside_nf const& nf) {
    json factors = json::array(), words = json::array();
    for (auto const& f : nf.factors) {
      factors.push_back(f.rows());
      words.push_back(format_word(f.reduced_word()));
    }
    return {{"type", t.str()},
            {"delta_power", nf.delta_power},
            {"factors", factors},
            {"reduced_words", words}};
  }

  // triangulations

  inline tagged_arc arc_from_json(json const& j) {
    if (!j.is_object() || j.size() != 1) {
      throw input_error("an arc is an object with one of 'chord', 'peripheral', 'radius'");
    }
    auto const& [key, v] = *j.items().begin();
    if (!v.is_array() || v.size() != 2) throw input_error("arc '" + key + "' takes two values");
    if (key == "chord") return tagged_arc::chord(as_vertex(v[0]), as_vertex(v[1]));
    if (key == "peripheral") return tagged_arc::peripheral(as_vertex(v[0]), as_vertex(v[1]));
    if (key == "radius") {
      auto t = as_string(v[1], "radius tag");
      if (t != "plain" && t != "notched") throw input_error("radius tag must be plain or notched");
      return tagged_arc::radius(as_vertex(v[0]), t == "plain" ? tag::plain : tag::notched);
    }
    throw input_error("unknown arc kind '" + key + "'");
  }

  inline json to_json(tagged_arc const& x) {
    switch (x.k) {
      case tagged_arc::kind::chord: return {{"chord", {x.a, x.b}}};
      case tagged_arc::kind::peripheral: return {{"peripheral", {x.a, x.b}}};
      case tagged_arc::kind::radius:
        return {{"radius", {json(x.a), json(x.t == tag::plain ? "plain" : "notched")}}};
    }
    return nullptr;
  }

  inline triangulation triangulation_from_json(json const& j) {
    triangulation t{type_from_json(field(j, "type")), {}};
    auto const&   as = field(j, "arcs");
    if (!as.is_array()) throw input_error("'arcs' must be an array");
    for (auto const& a : as) t.arcs.push_back(arc_from_json(a));
    return t;
  }

  inline json to_json(triangulation const& t) {
    json arcs = json::array();
    for (auto const& a : t.arcs) arcs.push_back(to_json(a));
    return {{"type", t.type.str()}, {"arcs", arcs}};
  }

  // quivers with potential: arrows are ["name",s,t] or plain [s,t] (named
  // a, b, c, ... in order)

  inline qp qp_from_json(json const& j) {
    auto const& vs = field(j, "vertices");
    auto const& as = field(j, "arrows");
    if (!vs.is_array() || !as.is_array()) throw input_error("'vertices' and 'arrows' must be arrays");
    std::vector<vertex> vertices;
    for (auto const& v : vs) vertices.push_back(as_vertex(v));
    std::vector<qp_arrow> arrows;
    for (std::size_t i = 0; i < as.size(); ++i) {
      auto const& a = as[i];
      if (a.is_array() && a.size() == 2) {
        arrows.push_back({standard_arrow_name(i), as_vertex(a[0]), as_vertex(a[1])});
      } else if (a.is_array() && a.size() == 3) {
        arrows.push_back({as_string(a[0], "arrow name"), as_vertex(a[1]), as_vertex(a[2])});
      } else {
        throw input_error("an arrow is [source,target] or [name,source,target]");
      }
    }
    std::vector<potential_term> terms;
    if (j.contains("potential")) {
      auto const& ts = field(j["potential"], "terms");
      if (!ts.is_array()) throw input_error("'terms' must be an array");
      for (auto const& t : ts) {
        potential_term pt;
        auto const&    c = field(t, "coeff");
        pt.coeff = c.is_string() ? parse_rational(c.get<std::string>())
                                 : rational(as_int(c, "coefficient"));
        auto const& cyc = field(t, "cycle");
        if (!cyc.is_array()) throw input_error("'cycle' must be an array");
        for (auto const& a : cyc) {
          if (a.is_string()) {
            pt.cycle.push_back(a.get<std::string>());
          } else if (a.is_array() && !a.empty()) {
            pt.cycle.push_back(as_string(a[0], "arrow name"));
          } else {
            throw input_error("a cycle entry is an arrow name or [name,source,target]");
          }
        }
        terms.push_back(std::move(pt));
      }
    }
    qp x(std::move(vertices), std::move(arrows), terms);
    // [name,s,t] entries in a cycle must agree with the arrow list
    if (j.contains("potential")) {
      for (auto const& t : j["potential"]["terms"]) {
        for (auto const& a : t["cycle"]) {
          if (!a.is_array()) continue;
          auto const& ar = x.arrows()[x.arrow_index(a[0].get<std::string>())];
          if (a.size() != 3 || as_vertex(a[1]) != ar.source || as_vertex(a[2]) != ar.target) {
            throw input_error("cycle entry for '" + ar.name + "' disagrees with its arrow");
          }
        }
      }
    }
    return x;
  }

  inline json potential_to_json(qp const& x) {
    json terms = json::array();
    for (auto const& [p, c] : x.terms()) {
      json cyc = json::array();
      for (int a : p) {
        auto const& ar = x.arrows()[a];
        cyc.push_back({json(ar.name), json(ar.source), json(ar.target)});
      }
      terms.push_back({{"cycle", cyc}, {"coeff", to_string(c)}});
    }
    return {{"terms", terms}};
  }

  inline json to_json(qp const& x) {
    json arrows = json::array();
    for (auto const& a : x.arrows()) arrows.push_back({json(a.name), json(a.source), json(a.target)});
    return {{"vertices", x.vertices()}, {"arrows", arrows}, {"potential", potential_to_json(x)}};
  }

  inline json to_json(canonical_form_report const& r) {
    json scalars = json::object();
    for (auto const& [n, m] : r.scalars) scalars[n] = to_string(m);
    return {{"canonical", r.ok()},
            {"support_ok", r.support_ok},
            {"rescalable", r.rescalable},
            {"problems", r.problems},
            {"scalars", scalars}};
  }

  inline json to_json(k0_report const& r) {
    return {{"relators_checked", r.relators_checked}, {"failures", r.failures}};
  }

  inline json to_json(int_matrix const& m) {
    return m.rows();
  }

}  // namespace bqm

#endif  // BQM_JSON_IO_HPP_
