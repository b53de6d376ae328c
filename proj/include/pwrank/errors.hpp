#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrank {

// Input-side failures (bad files, bad columns, invalid configuration).
// CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    InputError(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

// Numerical failures (singular designs, non-PSD correlation, nonpositive
// scale). CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
public:
    NumericalError(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

struct Diagnostic {
    enum class Severity { Warning, Error };

    Severity severity = Severity::Warning;
    std::string category;
    std::string message;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Diagnostic::Severity::Error) return true;
    return false;
}

}  // namespace pwrank
