#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace psiaut {

// Runtime failure carrying a stable machine-readable code (kebab-case),
// e.g. "pole-proximity", "duplicate-point", "unsupported-configuration".
// The CLI maps these to structured {code, message} JSON with exit status 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace psiaut
