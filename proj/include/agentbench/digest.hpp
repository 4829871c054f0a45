#pragma once

#include <string>

#include "agentbench/chat.hpp"

namespace agentbench {

// Hex-encoded SHA-256.
std::string sha256_hex(const std::string& data);

// Digest of a single message as "role:content".
std::string message_digest(const ChatMessage& msg);

// Replay key for a prompt: digest of the final human message. Throws
// std::invalid_argument when the prompt contains no human message.
std::string final_human_digest(const MessageList& messages);

}  // namespace agentbench
