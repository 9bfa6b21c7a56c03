#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approx/document.hpp"
#include "approx/instance.hpp"
#include "approx/solve.hpp"

namespace approx::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInput = 2, kCapOrGuarantee = 3 };

// Maps a caught exception to its exit code.
int exit_code_for(const std::exception_ptr& error);

struct RequestOptions {
  std::string algorithm;
  std::optional<double> epsilon;
  Vertex root = 0;
  bool force = false;
  std::uint64_t seed = 0;
};

SolveOptions to_solve_options(const RequestOptions& request);

// The documents both transports emit. Each throws the library's exceptions.
Json solve_document(const Instance& instance, const RequestOptions& request);
Json trace_document(const Instance& instance, const RequestOptions& request);
Json compare_document(const Instance& instance, const RequestOptions& request);
Json problems_document();

// Serialized form written to files and HTTP bodies.
std::string render(const Json& doc);

/// argv-style entry point without the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

class Server {
 public:
  Server();
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds to the loopback interface. Port 0 picks a free port. Returns the
  // bound port; throws InputError if the port is unavailable.
  int bind(int port);
  // Blocks until stop() is called.
  void listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace approx::cli
