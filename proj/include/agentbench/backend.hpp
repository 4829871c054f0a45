#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agentbench/chat.hpp"

namespace agentbench {

// Base class for everything that can turn a prompt into a completion.
class TextBackend {
public:
    virtual ~TextBackend() = default;
    virtual std::string complete(const MessageList& messages) = 0;
};

class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AuthMissingError : public BackendError {
public:
    explicit AuthMissingError(const std::string& env_var)
        : BackendError("API key environment variable not set: " + env_var) {}
};

class TimeoutError : public BackendError {
public:
    using BackendError::BackendError;
};

class HttpStatusError : public BackendError {
public:
    HttpStatusError(int status, const std::string& body)
        : BackendError("HTTP status " + std::to_string(status) + ": " + body), status_(status) {}
    int status() const { return status_; }

private:
    int status_;
};

class EmptyCompletionError : public BackendError {
public:
    using BackendError::BackendError;
};

class FixtureExhaustedError : public BackendError {
public:
    using BackendError::BackendError;
};

class FixtureNoMatchError : public BackendError {
public:
    explicit FixtureNoMatchError(const std::string& digest)
        : BackendError("no fixture entry matches prompt digest " + digest) {}
};

// One scripted exchange. A matcher is either a 0-based call index or the
// digest of the final human message of the prompt.
struct FixtureEntry {
    std::optional<int> index;
    std::string digest;
    std::string response;
};

struct Fixture {
    std::vector<FixtureEntry> entries;

    static Fixture load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    static FixtureEntry indexed(int index, std::string response);
    static FixtureEntry keyed(std::string digest, std::string response);
};

// Deterministic replay backend. Index-matched entries are consumed in call
// order; digest-matched entries behave as a lookup table and may serve the
// same prompt repeatedly. Never touches the network.
class ScriptedBackend : public TextBackend {
public:
    explicit ScriptedBackend(std::shared_ptr<const Fixture> fixture);
    explicit ScriptedBackend(Fixture fixture);

    std::string complete(const MessageList& messages) override;

    std::size_t cursor() const { return cursor_; }
    int calls() const { return calls_; }

private:
    std::shared_ptr<const Fixture> fixture_;
    std::size_t cursor_ = 0;
    int calls_ = 0;
};

// Wraps a live backend and appends every (prompt digest, response) pair to a
// fixture file so the session can be replayed later.
class RecordingBackend : public TextBackend {
public:
    RecordingBackend(TextBackend& inner, std::filesystem::path sink);

    std::string complete(const MessageList& messages) override;

private:
    TextBackend& inner_;
    std::filesystem::path sink_;
};

}  // namespace agentbench
