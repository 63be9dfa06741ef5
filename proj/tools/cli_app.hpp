#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "veronese/error.hpp"

namespace veronese::cli {

// A validated job: the command name plus its canonical parameter document.
// The parameter document doubles as the certificate's "inputs" echo, so a
// certificate can be replayed by feeding the echo straight back in.
struct JobSpec {
  std::string command;
  nlohmann::json params;
  bool machine = false;
  std::string out_path;

  bool operator==(const JobSpec& other) const {
    return command == other.command && params == other.params;
  }
};

// Parse argv into a JobSpec. Throws Error(usage_error/schema_error); the
// special exit_request code (carried via UsageExit) handles --help.
JobSpec parse(int argc, const char* const* argv);

// Thrown when CLI11 wants to exit cleanly (--help and friends).
struct UsageExit {
  int code = 0;
  std::string message;
};

// Execute the job and return the full certificate document, with "valid"
// recomputed by the independent checker.
nlohmann::json run(const JobSpec& spec);

// Reconstruct the JobSpec a certificate was produced from.
JobSpec jobspec_from_certificate(const nlohmann::json& certificate);

// Structural re-validation of a certificate from its inputs echo; pure
// arithmetic, no solver calls.
bool check_certificate(const nlohmann::json& certificate, std::string* why = nullptr);

// Human-readable rendering of a certificate.
std::string render_text(const nlohmann::json& certificate);

// Full pipeline: parse, run, check, emit. Returns the process exit code:
// 0 valid, 2 usage or schema error, 3 computation error, 4 failed checker.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace veronese::cli
