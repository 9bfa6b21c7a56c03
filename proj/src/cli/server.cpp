#include <functional>
#include <string>

#include "approx/cli.hpp"
#include "approx/error.hpp"
#include "httplib.h"

namespace approx::cli {

namespace {

constexpr const char* kJson = "application/json";

int http_status(int exit_code) {
  switch (exit_code) {
    case kInput: return 400;
    case kCapOrGuarantee: return 422;
    default: return 500;
  }
}

double parse_double(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError("query parameter " + name + " is not a number: " + text);
  return v;
}

long long parse_integer(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw InputError("query parameter " + name + " is not an integer: " + text);
  return v;
}

RequestOptions request_from(const httplib::Request& req) {
  RequestOptions r;
  r.algorithm = req.matches[1];
  if (req.has_param("epsilon")) r.epsilon = parse_double("epsilon", req.get_param_value("epsilon"));
  if (req.has_param("root")) r.root = static_cast<Vertex>(parse_integer("root", req.get_param_value("root")));
  if (req.has_param("seed")) r.seed = static_cast<std::uint64_t>(parse_integer("seed", req.get_param_value("seed")));
  if (req.has_param("force")) {
    const std::string v = req.get_param_value("force");
    if (v != "true" && v != "false" && v != "1" && v != "0") throw InputError("query parameter force must be true or false");
    r.force = v == "true" || v == "1";
  }
  return r;
}

using Handler = std::function<Json(const Instance&, const RequestOptions&)>;

httplib::Server::Handler endpoint(Handler handler) {
  return [handler = std::move(handler)](const httplib::Request& req, httplib::Response& res) {
    try {
      res.set_content(render(handler(read_instance(req.body), request_from(req))), kJson);
    } catch (...) {
      const auto error = std::current_exception();
      const int code = exit_code_for(error);
      std::string message = "unknown failure";
      try {
        std::rethrow_exception(error);
      } catch (const std::exception& e) {
        message = e.what();
      } catch (...) {
      }
      res.status = http_status(code);
      res.set_content(render(Json{{"error", message}, {"exit_code", code}}), kJson);
    }
  };
}

}  // namespace

struct Server::Impl {
  httplib::Server http;
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  // The library default sets SO_REUSEPORT, which would let a second server
  // share a port that is already taken.
  http.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  http.Get("/problems", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(render(problems_document()), kJson);
  });
  http.Post(R"(/solve/([A-Za-z0-9_-]+))", endpoint(solve_document));
  http.Post(R"(/trace/([A-Za-z0-9_-]+))", endpoint(trace_document));
  http.Post(R"(/compare/([A-Za-z0-9_-]+))", endpoint(compare_document));
}

Server::~Server() { stop(); }

int Server::bind(int port) {
  auto& http = impl_->http;
  const int bound = port == 0 ? http.bind_to_any_port("127.0.0.1") : (http.bind_to_port("127.0.0.1", port) ? port : -1);
  if (bound < 0) throw InputError("cannot bind 127.0.0.1:" + std::to_string(port) + " (port busy?)");
  return bound;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace approx::cli
