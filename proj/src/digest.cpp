#include "agentbench/digest.hpp"

#include <openssl/sha.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace agentbench {

std::string sha256_hex(const std::string& data) {
    std::array<unsigned char, SHA256_DIGEST_LENGTH> hash{};
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), hash.data());
    std::string out;
    out.reserve(hash.size() * 2);
    static const char* hex = "0123456789abcdef";
    for (unsigned char b : hash) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 0x0F]);
    }
    return out;
}

std::string message_digest(const ChatMessage& msg) {
    return sha256_hex(std::string(role_name(msg.role)) + ":" + msg.content);
}

std::string final_human_digest(const MessageList& messages) {
    for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
        if (it->role == Role::human) return message_digest(*it);
    }
    throw std::invalid_argument("prompt has no human message to digest");
}

}  // namespace agentbench
