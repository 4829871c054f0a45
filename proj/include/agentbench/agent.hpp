#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "agentbench/chat.hpp"
#include "agentbench/opinions.hpp"

namespace agentbench {

class Environment;
class TextBackend;
class OpinionProvider;

// A tool the agent may invoke, with one to three demonstration exchanges that
// are rendered into the system message.
struct ToolSpec {
    struct Demo {
        std::string observation;
        std::string command;
    };

    std::string name;
    std::string description;
    std::vector<Demo> demos;
};

struct ThoughtRecord {
    std::string text;
    std::string reasoning;
    std::string plan;
    std::string criticism;

    bool operator==(const ThoughtRecord&) const = default;
};

struct CommandRequest {
    std::string name;
    std::string tool_input;

    bool operator==(const CommandRequest&) const = default;
};

struct AgentConfig {
    std::string goal;
    std::vector<ToolSpec> tools;
    int max_steps = 20;
    int opinion_k = 0;
    std::string backend_id;
    std::uint64_t seed = 0;
    std::size_t context_capacity = 24000;
    int parse_retries = 1;  // re-prompts per step on malformed output

    void validate() const;  // throws std::invalid_argument
};

// Bounded chat history. The initial goal/instruction message is pinned; when
// the character budget overflows, the oldest non-initial messages go first.
class ContextBuffer {
public:
    ContextBuffer(ChatMessage initial, std::size_t capacity);

    void append(ChatMessage msg);
    const MessageList& messages() const { return messages_; }
    std::size_t size_chars() const { return size_chars_; }
    std::size_t capacity() const { return capacity_; }

private:
    void evict_to_fit();

    MessageList messages_;
    std::size_t capacity_;
    std::size_t size_chars_ = 0;
};

enum class ParseErrorKind { no_json_found, missing_field };

const char* parse_error_name(ParseErrorKind kind);

struct ParseOutcome {
    bool ok = false;
    ThoughtRecord thought;
    CommandRequest command;
    ParseErrorKind error = ParseErrorKind::no_json_found;
    std::string error_detail;  // dotted path of the first missing field
};

// Extracts the first balanced JSON object that carries the full
// thoughts/command shape. Prose around (or between) objects is ignored.
ParseOutcome parse_response(const std::string& raw);

// Canonical rendering of a (thought, command) pair; parse_response inverts it.
std::string render_response(const ThoughtRecord& thought, const CommandRequest& command);

// The fixed per-step trigger sentence appended as the final human message.
extern const char* const kTriggerPrompt;

// Builds the system message (goal + tool demos + response format contract).
ChatMessage build_system_message(const AgentConfig& config);

// Returns ctx messages plus exactly one fresh human message: the rendered
// opinion prompt when opinions are present, the plain trigger otherwise.
MessageList build_prompt(const AgentConfig& config, const ContextBuffer& ctx,
                         const std::vector<Opinion>* opinions);

struct StepError {
    std::string kind;    // "no_json_found" | "missing_field" | "unknown_tool"
    std::string detail;
    std::string raw;     // verbatim backend output, kept for replay

    bool operator==(const StepError&) const = default;
};

struct AgentStep {
    int index = 0;
    MessageList prompt;  // snapshot of the prompt for the step's final attempt
    std::optional<ThoughtRecord> thought;
    std::optional<CommandRequest> command;
    std::string observation;
    std::vector<std::string> opinions_shown;
    std::optional<bool> agreed;
    std::optional<StepError> error;
};

struct EpisodeTrace {
    std::vector<AgentStep> steps;
    bool committed = false;     // env reached its goal-side terminal state
    bool parse_dead = false;    // no step ever produced a usable command
    std::vector<AgreementRecord> agreements;
};

AgentStep run_step(Environment& env, TextBackend& backend, const AgentConfig& config,
                   ContextBuffer& ctx, OpinionProvider* provider, int index,
                   std::vector<AgreementRecord>* agreements);

EpisodeTrace run_episode(Environment& env, TextBackend& backend, const AgentConfig& config,
                         OpinionProvider* provider);

}  // namespace agentbench
