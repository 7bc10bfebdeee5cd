#pragma once

#include <stdexcept>
#include <string>

namespace asknav {

// Bad values in a config file or CLI arguments.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error("config: " + msg) {}
};

// An operation was called outside its contract (e.g. step() after done).
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& msg) : std::logic_error("contract: " + msg) {}
};

// Filesystem problems: missing file, failed write.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error("io: " + msg) {}
};

// Checkpoint bytes do not checksum / are truncated / have a bad magic.
struct CorruptionError : std::runtime_error {
  explicit CorruptionError(const std::string& msg) : std::runtime_error("corrupt: " + msg) {}
};

// Checkpoint has a valid layout but an unsupported format version.
struct VersionError : std::runtime_error {
  explicit VersionError(const std::string& msg) : std::runtime_error("version: " + msg) {}
};

// Training diverged (non-finite loss or parameters).
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& msg) : std::runtime_error("diverged: " + msg) {}
};

}  // namespace asknav
