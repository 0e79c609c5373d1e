#pragma once

#include <stdexcept>
#include <string>

namespace arcstab {

// Machine-parsable error categories.  The CLI prints these as
// "error[<name>]: <message>" and maps them to nonzero exit codes.
enum class Errc {
  usage,         // bad command line
  parse,         // malformed input file
  precondition,  // operation called outside its contract
  hypothesis,    // construction hypothesis not satisfied by the input
  undecided,     // question not decidable within configured caps
  cap_exceeded,  // enumeration/search cap hit
  internal,      // invariant that should hold by construction failed
  io,            // file system trouble
  unknown_name,  // catalog lookup miss
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::usage: return "usage";
    case Errc::parse: return "parse";
    case Errc::precondition: return "precondition";
    case Errc::hypothesis: return "hypothesis";
    case Errc::undecided: return "undecided";
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::internal: return "internal";
    case Errc::io: return "io";
    case Errc::unknown_name: return "unknown-name";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace arcstab
