#pragma once

#include <memory>
#include <string>
#include <vector>

#include "agentbench/agent.hpp"

namespace agentbench {

// What the agent sees after each step: the rendered page/room text plus the
// enumerable canonical actions accepted right now.
struct EnvObservation {
    std::string text;
    std::vector<std::string> actions;
};

struct EnvResult {
    double reward = 0.0;
    bool success = false;
};

// One episode's environment instance. Implementations are deterministic state
// machines; an instance is owned by exactly one episode.
class Environment {
public:
    virtual ~Environment() = default;

    virtual std::string goal_text() const = 0;
    virtual std::vector<ToolSpec> tools() const = 0;
    virtual const EnvObservation& observation() const = 0;

    // Applies a canonical action string ("search[q]", "click[t]", or a house
    // action). Invalid input yields an in-band error observation and still
    // consumes an environment step.
    virtual const EnvObservation& act(const std::string& action) = 0;

    // Routes a parsed agent command into the environment.
    virtual const EnvObservation& dispatch(const CommandRequest& command) = 0;

    // Canonical action string for a command, used for agreement bookkeeping.
    virtual std::string action_string(const CommandRequest& command) const = 0;

    // Inverse of action_string for the enumerable action grammar.
    virtual CommandRequest command_for(const std::string& action) const = 0;

    virtual bool terminal() const = 0;
    virtual bool committed() const = 0;  // purchase made / task goal satisfied
    virtual int steps_used() const = 0;
    virtual int max_steps() const = 0;
    virtual EnvResult result() const = 0;

    virtual std::unique_ptr<Environment> clone() const = 0;
};

}  // namespace agentbench
