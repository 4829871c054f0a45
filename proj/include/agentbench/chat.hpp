#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace agentbench {

enum class Role { system, human, assistant };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::system: return "system";
        case Role::human: return "human";
        case Role::assistant: return "assistant";
    }
    return "human";
}

inline Role role_from_name(const std::string& name) {
    if (name == "system") return Role::system;
    if (name == "human") return Role::human;
    if (name == "assistant") return Role::assistant;
    throw std::invalid_argument("unknown chat role: " + name);
}

struct ChatMessage {
    Role role = Role::human;
    std::string content;

    bool operator==(const ChatMessage&) const = default;
};

using MessageList = std::vector<ChatMessage>;

}  // namespace agentbench
