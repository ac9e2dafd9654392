#ifndef BQM_SERVICE_HPP_
#define BQM_SERVICE_HPP_

#include <string>

// the library's default backlog of 5 drops bursts of concurrent clients
#ifndef CPPHTTPLIB_LISTEN_BACKLOG
#define CPPHTTPLIB_LISTEN_BACKLOG 128
#endif
#include "httplib.h"

#include "api.hpp"

namespace bqm {

  // Stateless JSON service: every POST route calls one pure handler.
  inline void install_routes(httplib::Server& server) {
    auto const type = "application/json";
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Get("/api/health", [type](httplib::Request const&, httplib::Response& res) {
      res.set_content(api::health({}).dump(), type);
    });
    for (auto const& [path, h] : api::routes()) {
      server.Post(path, [h = h, type](httplib::Request const& req, httplib::Response& res) {
        auto r     = api::dispatch(h, req.body);
        res.status = r.status;
        res.set_content(r.body, type);
      });
      server.Options(path, [](httplib::Request const&, httplib::Response& res) {
        res.status = 204;
      });
    }
  }

}  // namespace bqm

#endif  // BQM_SERVICE_HPP_
