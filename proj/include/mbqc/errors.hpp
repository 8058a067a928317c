#pragma once

#include <stdexcept>
#include <string>

namespace mbqc {

// Error categories map to CLI exit codes (see tools/clusterlab.cpp).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension mismatches, basis mismatches, invalid complexes.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// A postcondition we rely on failed to hold (bug or inconsistent data).
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mbqc
