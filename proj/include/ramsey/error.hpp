#pragma once

#include <cstddef>
#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Input that violates an operation's preconditions (bad edges, bad colors,
/// malformed files). The CLI maps these to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LoopEdge : public InvalidInput {
public:
    explicit LoopEdge(int v)
        : InvalidInput("loop edge at vertex " + std::to_string(v)) {}
};

class VertexOutOfRange : public InvalidInput {
public:
    VertexOutOfRange(int v, int count)
        : InvalidInput("vertex " + std::to_string(v) + " out of range for " +
                       std::to_string(count) + " vertices") {}
};

class MissingColoring : public InvalidInput {
public:
    MissingColoring() : InvalidInput("structure has no coloring") {}
};

class NotOrdered : public InvalidInput {
public:
    NotOrdered() : InvalidInput("structure is not ordered") {}
};

class NotNColorable : public InvalidInput {
public:
    explicit NotNColorable(int n)
        : InvalidInput("structure is not " + std::to_string(n) + "-colorable") {}
};

class InvalidExtension : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InvalidInput("parse error at byte " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Work that would exceed a configured size or search budget. Exit code 3.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SizeCapExceeded : public LimitExceeded {
public:
    SizeCapExceeded(int size, int cap)
        : LimitExceeded("size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)) {}
};

class BudgetExceeded : public LimitExceeded {
public:
    explicit BudgetExceeded(unsigned long long reached)
        : LimitExceeded("search budget exceeded after " + std::to_string(reached) + " nodes"),
          reached_(reached) {}

    unsigned long long reached() const noexcept { return reached_; }

private:
    unsigned long long reached_;
};

/// Sink for non-fatal diagnostics. Defaults to stderr; tests may replace it.
inline std::function<void(const std::string&)>& warning_sink() {
    static std::function<void(const std::string&)> sink = [](const std::string& msg) {
        std::cerr << "warning: " << msg << '\n';
    };
    return sink;
}

inline void warn(const std::string& msg) {
    if (auto& sink = warning_sink()) sink(msg);
}

inline void check_cap(int size, int cap) {
    if (size > cap) throw SizeCapExceeded(size, cap);
}

} // namespace ramsey
