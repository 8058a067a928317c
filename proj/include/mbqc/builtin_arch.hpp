#pragma once

#include <string>

namespace mbqc {

// Architecture definition text for a shipped distributed layout, or nullptr.
// The same text ships as data/arch/<name>.arch.
const char* builtin_arch_text(const std::string& name);

}  // namespace mbqc
