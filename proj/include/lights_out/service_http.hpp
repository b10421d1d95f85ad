#pragma once

// Mounts the JSON handlers on a cpp-httplib server.

#include <string>

#include "httplib.h"
#include "lights_out/service.hpp"

namespace lights_out::service {

inline void mount(httplib::Server& server, const Options& options = {}) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  for (const char* path : {"/api/analyze", "/api/whatif", "/api/solve"}) {
    server.Post(path, [options, path = std::string(path)](const httplib::Request& req, httplib::Response& res) {
      const Response r = handle(path, req.body, options);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    });
    server.Options(path, [](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });
  }
}

}  // namespace lights_out::service
