#ifndef BQM_CLI_HPP_
#define BQM_CLI_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "api.hpp"
#include "service.hpp"
#include "verify.hpp"

// Command-line front end.  Each subcommand builds the same request object
// the service receives and prints the handler's JSON (or a text rendering).
// Exit codes: 0 ok, 1 verification failed, 2 bad input.
namespace bqm::cli {

  namespace detail {
    // "@path" reads the argument from a file
    inline std::string load(std::string const& arg) {
      if (arg.empty() || arg[0] != '@') return arg;
      std::ifstream in(arg.substr(1));
      if (!in) throw input_error("cannot read " + arg.substr(1));
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    inline json json_arg(std::string const& arg) {
      return parse_json(load(arg));
    }

    // words and paths: JSON arrays or plain text
    inline json word_arg(std::string const& arg) {
      auto s = load(arg);
      auto p = s.find_first_not_of(" \t\n");
      if (p != std::string::npos && s[p] == '[') return parse_json(s);
      return s;
    }

    inline json path_arg(std::string const& arg) {
      auto s = load(arg);
      auto p = s.find_first_not_of(" \t\n");
      if (p != std::string::npos && s[p] == '[') return parse_json(s);
      json out = json::array();
      std::stringstream in(s);
      std::string       tok;
      while (std::getline(in, tok, ',')) {
        try {
          std::size_t used = 0;
          long        v    = std::stol(tok, &used);
          if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(tok);
          out.push_back(v);
        } catch (std::logic_error const&) {
          throw input_error("bad vertex '" + tok + "' in path");
        }
      }
      return out;
    }

    inline word to_word(json const& j) {
      return j.get<word>();
    }

    inline std::string quiver_text(json const& q) {
      std::string s = "vertices:";
      for (auto const& v : q["vertices"]) s += " " + v.dump();
      s += "\narrows:";
      for (auto const& a : q["arrows"]) {
        if (a.size() == 3) {
          s += " " + a[0].get<std::string>() + ":" + a[1].dump() + "->" + a[2].dump();
        } else {
          s += " " + a[0].dump() + "->" + a[1].dump();
        }
      }
      return s + "\n";
    }

    inline std::string arcs_text(json const& t) {
      std::string s = t["type"].get<std::string>() + ":";
      for (auto const& a : t["arcs"]) {
        auto const& [k, v] = *a.items().begin();
        if (k == "radius") {
          s += " radius(" + v[0].dump() + (v[1] == "notched" ? ",notched)" : ")");
        } else {
          s += " " + k + "(" + v[0].dump() + "," + v[1].dump() + ")";
        }
      }
      return s + "\n";
    }

    inline std::string potential_text(json const& p) {
      std::string s;
      for (auto const& t : p["terms"]) {
        std::string c = t["coeff"].get<std::string>();
        if (s.empty()) {
          s = c == "1" ? "" : c == "-1" ? "-" : c + " ";
        } else if (c[0] == '-') {
          s += " - " + (c == "-1" ? std::string() : c.substr(1) + " ");
        } else {
          s += " + " + (c == "1" ? std::string() : c + " ");
        }
        std::string cyc;
        for (auto const& a : t["cycle"]) cyc += (cyc.empty() ? "" : "·") + a[0].get<std::string>();
        s += cyc;
      }
      return "W = " + (s.empty() ? "0" : s) + "\n";
    }

    inline std::string bool_text(json const& b) {
      return b.get<bool>() ? "yes" : "no";
    }
  }  // namespace detail

  struct outcome {
    json        body;
    std::string text;
    int         code = 0;
  };

  inline int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Braid groups of mutation-Dynkin quivers", "bqm"};
    app.require_subcommand(1);
    std::string format = "json";
    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"text", "json"}))
          ->capture_default_str();
    };

    std::string quiver_s, type_s, w1_s, w2_s, path_s, tri_s, arc_s, qp_s;
    int         vertex = 0, port = 8080, max_rank = 8;
    bool        inverse = false, matrices = false;
    std::string host = "127.0.0.1";

    auto* mutate_c = app.add_subcommand("mutate", "Mutate a quiver at a vertex or along a path");
    mutate_c->add_option("--quiver", quiver_s, "Quiver JSON or @file")->required();
    auto* vopt = mutate_c->add_option("--vertex", vertex, "Vertex to mutate at");
    auto* popt = mutate_c->add_option("--path", path_s, "Comma-separated vertices or JSON array");
    vopt->excludes(popt);
    add_format(mutate_c);

    auto* class_c = app.add_subcommand("class", "Mutation class up to isomorphism");
    auto* cq      = class_c->add_option("--quiver", quiver_s, "Seed quiver JSON or @file");
    auto* ct      = class_c->add_option("--type", type_s, "Dynkin type, e.g. D5");
    cq->excludes(ct);
    add_format(class_c);

    auto* present_c = app.add_subcommand("present", "Presentation of the braid group of a quiver");
    present_c->add_option("--quiver", quiver_s, "Quiver JSON or @file")->required();
    add_format(present_c);

    auto* phi_c = app.add_subcommand("phi", "Generator images under the mutation isomorphism");
    phi_c->add_option("--quiver", quiver_s, "Quiver JSON or @file")->required();
    phi_c->add_option("--vertex", vertex, "Mutation vertex")->required();
    phi_c->add_flag("--inverse", inverse, "The inverse map B_{mu_k Q} -> B_Q");
    add_format(phi_c);

    auto* wordeq_c = app.add_subcommand("wordeq", "Decide equality of two braid words");
    auto* wt       = wordeq_c->add_option("--type", type_s, "Dynkin type");
    auto* wq       = wordeq_c->add_option("--quiver", quiver_s, "Quiver JSON or @file");
    wt->excludes(wq);
    wordeq_c->add_option("--w1", w1_s, "First word, e.g. \"s1 s2^-1\"")->required();
    wordeq_c->add_option("--w2", w2_s, "Second word")->required();
    add_format(wordeq_c);

    auto* surface_c = app.add_subcommand("surface", "Triangulations of the disc model");
    surface_c->require_subcommand(1);
    auto* flip_c = surface_c->add_subcommand("flip", "Flip an arc");
    flip_c->add_option("--triangulation", tri_s, "Triangulation JSON or @file")->required();
    flip_c->add_option("--arc", arc_s, "Arc position (1-based) or arc JSON")->required();
    add_format(flip_c);
    auto* squiver_c = surface_c->add_subcommand("quiver", "Quiver of a triangulation");
    auto* st        = squiver_c->add_option("--triangulation", tri_s, "Triangulation JSON or @file");
    auto* sty       = squiver_c->add_option("--type", type_s, "Use the initial triangulation");
    st->excludes(sty);
    add_format(squiver_c);
    auto* enum_c = surface_c->add_subcommand("enumerate", "All triangulations");
    enum_c->add_option("--type", type_s, "Dynkin type (A or D)")->required();
    add_format(enum_c);

    auto* qp_c = app.add_subcommand("qp", "Quivers with potential");
    qp_c->require_subcommand(1);
    auto* qpm_c = qp_c->add_subcommand("mutate", "Mutate and reduce");
    qpm_c->add_option("--qp", qp_s, "QP JSON or @file")->required();
    qpm_c->add_option("--vertex", vertex, "Vertex")->required();
    add_format(qpm_c);
    auto* qpc_c = qp_c->add_subcommand("check", "Canonical form and d^2 = 0");
    qpc_c->add_option("--qp", qp_s, "QP JSON or @file")->required();
    add_format(qpc_c);

    auto* k0_c = app.add_subcommand("k0", "Twist action on the Grothendieck group");
    k0_c->require_subcommand(1);
    auto* k0v_c = k0_c->add_subcommand("verify", "Relators act trivially");
    k0v_c->add_option("--quiver", quiver_s, "Quiver JSON or @file")->required();
    k0v_c->add_flag("--matrices", matrices, "Include the twist matrices");
    add_format(k0v_c);

    auto* verify_c = app.add_subcommand("verify", "Acceptance sweeps");
    verify_c->require_subcommand(1);
    auto* all_c = verify_c->add_subcommand("all", "Run every sweep");
    all_c->add_option("--max-rank", max_rank, "Skip types of larger rank")
        ->check(CLI::Range(2, 8))
        ->capture_default_str();
    add_format(all_c);

    auto* serve_c = app.add_subcommand("serve", "Run the JSON service");
    serve_c->add_option("--port", port, "Port")->check(CLI::Range(1, 65535))->capture_default_str();
    serve_c->add_option("--host", host, "Address to bind")->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const& e) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      // help for the subcommand is only printed on request
      err << "error: " << e.what() << "\n";
      return 2;
    }

    auto text = format == "text";
    try {
      outcome r;
      auto    need = [](bool ok, char const* msg) {
        if (!ok) throw input_error(msg);
      };

      if (mutate_c->parsed()) {
        json req{{"quiver", detail::json_arg(quiver_s)}};
        need(*vopt || *popt, "mutate needs --vertex or --path");
        if (*popt) {
          req["path"] = detail::path_arg(path_s);
        } else {
          req["vertex"] = vertex;
        }
        r.body = api::mutate(req);
        r.text = detail::quiver_text(r.body);
      } else if (class_c->parsed()) {
        need(*cq || *ct, "class needs --quiver or --type");
        json req = *cq ? json{{"quiver", detail::json_arg(quiver_s)}} : json{{"type", type_s}};
        r.body   = api::mutation_class(req);
        r.text   = "type " + (r.body["type"].is_null() ? "?" : r.body["type"].get<std::string>())
                 + ", " + r.body["size"].dump() + " quivers up to isomorphism\n";
        for (auto const& m : r.body["members"]) {
          std::string arrows;
          for (auto const& a : m["quiver"]["arrows"]) arrows += " " + a[0].dump() + "->" + a[1].dump();
          r.text += "path " + m["path"].dump() + ":" + arrows + "\n";
        }
      } else if (present_c->parsed()) {
        r.body = api::presentation({{"quiver", detail::json_arg(quiver_s)}});
        r.text = "generators:";
        for (auto const& g : r.body["generators"]) r.text += " s" + g.dump();
        r.text += "\n";
        for (auto const& rel : r.body["relators"]) {
          r.text += rel["kind"].get<std::string>() + ": " + format_word(detail::to_word(rel["word"])) + "\n";
        }
      } else if (phi_c->parsed()) {
        r.body = api::phi({{"quiver", detail::json_arg(quiver_s)}, {"vertex", vertex}, {"inverse", inverse}});
        for (auto const& [g, w] : r.body["images"].items()) {
          r.text += "s" + g + " -> " + format_word(detail::to_word(w)) + "\n";
        }
      } else if (wordeq_c->parsed()) {
        need(*wt || *wq, "wordeq needs --type or --quiver");
        json req = *wq ? json{{"quiver", detail::json_arg(quiver_s)}} : json{{"type", type_s}};
        req["w1"] = detail::word_arg(w1_s);
        req["w2"] = detail::word_arg(w2_s);
        r.body    = api::wordeq(req);
        r.text    = "equal: " + r.body["equal"].dump() + "\n";
      } else if (flip_c->parsed()) {
        auto a = detail::load(arc_s);
        json arc;
        if (a.find('{') != std::string::npos) {
          arc = parse_json(a);
        } else {
          arc = detail::path_arg(a);
          need(arc.size() == 1, "--arc is one position or an arc object");
          arc = arc[0];
        }
        r.body = api::surface_flip({{"triangulation", detail::json_arg(tri_s)}, {"arc", arc}});
        r.text = detail::arcs_text(r.body);
      } else if (squiver_c->parsed()) {
        need(*st || *sty, "surface quiver needs --triangulation or --type");
        json req = *st ? json{{"triangulation", detail::json_arg(tri_s)}} : json{{"type", type_s}};
        r.body   = api::surface_quiver(req);
        r.text   = detail::quiver_text(r.body);
      } else if (enum_c->parsed()) {
        r.body = api::surface_enumerate({{"type", type_s}});
        r.text = r.body["count"].dump() + " triangulations\n";
        for (auto const& t : r.body["triangulations"]) r.text += detail::arcs_text(t);
      } else if (qpm_c->parsed()) {
        r.body = api::qp_mutate({{"qp", detail::json_arg(qp_s)}, {"vertex", vertex}});
        r.text = detail::quiver_text(r.body) + detail::potential_text(r.body["potential"]);
      } else if (qpc_c->parsed()) {
        r.body  = api::qp_check({{"qp", detail::json_arg(qp_s)}});
        bool ok = r.body["canonical"].get<bool>()
                  && (!r.body.contains("d_squared_failures") || r.body["d_squared_failures"].empty());
        r.code = ok ? 0 : 1;
        r.text = "canonical: " + detail::bool_text(r.body["canonical"]) + "\n";
        for (auto const& p : r.body["problems"]) r.text += "  " + p.get<std::string>() + "\n";
        if (r.body.contains("d_squared_failures")) {
          r.text += "d^2 = 0: " + std::string(r.body["d_squared_failures"].empty() ? "yes" : "no") + "\n";
        } else {
          r.text += "d^2 = 0: not checked (not reduced)\n";
        }
      } else if (k0v_c->parsed()) {
        r.body = api::k0_verify({{"quiver", detail::json_arg(quiver_s)}, {"matrices", matrices}});
        r.code = r.body["failures"].empty() ? 0 : 1;
        r.text = r.body["relators_checked"].dump() + " relators checked, "
                 + std::to_string(r.body["failures"].size()) + " act nontrivially\n";
        for (auto const& f : r.body["failures"]) r.text += "  " + f.get<std::string>() + "\n";
        if (r.body.contains("matrices")) {
          for (auto const& [v, m] : r.body["matrices"].items()) r.text += "T" + v + " = " + m.dump() + "\n";
        }
      } else if (all_c->parsed()) {
        verify::options o;
        o.max_rank   = max_rank;
        json results = json::array();
        bool ok      = true;
        verify::run_all(o, [&](verify::result const& x) {
          ok = ok && x.pass;
          if (text) out << verify::format(x) << std::endl;
          results.push_back({{"id", x.id}, {"name", x.name}, {"pass", x.pass},
                             {"detail", x.detail}, {"seconds", x.seconds}});
        });
        r.body = {{"pass", ok}, {"results", results}};
        r.code = ok ? 0 : 1;
        r.text = ok ? "all sweeps passed\n" : "some sweeps failed\n";
      } else if (serve_c->parsed()) {
        httplib::Server server;
        install_routes(server);
        err << "listening on " << host << ":" << port << std::endl;
        if (!server.listen(host, port)) {
          err << "error: cannot listen on " << host << ":" << port << "\n";
          return 2;
        }
        return 0;
      }

      if (text) {
        out << r.text;
      } else {
        out << r.body.dump() << "\n";
      }
      return r.code;
    } catch (input_error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (domain_error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (json::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }

}  // namespace bqm::cli

#endif  // BQM_CLI_HPP_
