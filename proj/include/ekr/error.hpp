#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ekr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A family, set, or argument violates its precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The member count is above what the clique counter has been allowed to take on.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t members, std::size_t cap)
        : Error("family has " + std::to_string(members) + " members, counting cap is " +
                std::to_string(cap) + " (use a bounded profile or raise the cap)"),
          members_(members), cap_(cap) {}

    std::size_t members() const noexcept { return members_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t members_;
    std::size_t cap_;
};

/// An exhaustive enumeration would visit more families than the configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string needed, std::string budget)
        : Error("exhaustive search needs " + needed + " families, budget is " + budget),
          needed_(std::move(needed)) {}

    const std::string& needed() const noexcept { return needed_; }

private:
    std::string needed_;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ekr
