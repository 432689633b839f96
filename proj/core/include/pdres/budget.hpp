#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdres {

/// Thrown when an exhaustive search would exceed its configured budget.
/// Callers distinguish this from a mathematical failure (CLI exit code 3).
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Default number of enumeration steps allowed per exhaustive search.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace pdres
