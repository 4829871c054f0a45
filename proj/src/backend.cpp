#include "agentbench/backend.hpp"

#include <fstream>

#include "agentbench/digest.hpp"
#include "json.hpp"

namespace agentbench {

namespace {

nlohmann::json entry_to_json(const FixtureEntry& e) {
    nlohmann::json j;
    if (e.index.has_value()) {
        j["match"] = *e.index;
    } else {
        j["match"] = e.digest;
    }
    j["response"] = e.response;
    return j;
}

FixtureEntry entry_from_json(const nlohmann::json& j, const std::filesystem::path& path,
                             std::size_t line_no) {
    if (!j.contains("match") || !j.contains("response")) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": fixture line needs 'match' and 'response'");
    }
    FixtureEntry e;
    if (j["match"].is_number_integer()) {
        e.index = j["match"].get<int>();
    } else if (j["match"].is_string()) {
        e.digest = j["match"].get<std::string>();
    } else {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": fixture matcher must be an index or a digest string");
    }
    e.response = j["response"].get<std::string>();
    return e;
}

}  // namespace

Fixture Fixture::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path.string());
    Fixture f;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                     ": malformed fixture JSON");
        }
        f.entries.push_back(entry_from_json(j, path, line_no));
    }
    return f;
}

void Fixture::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write fixture file: " + path.string());
    for (const auto& e : entries) out << entry_to_json(e).dump() << "\n";
}

FixtureEntry Fixture::indexed(int index, std::string response) {
    FixtureEntry e;
    e.index = index;
    e.response = std::move(response);
    return e;
}

FixtureEntry Fixture::keyed(std::string digest, std::string response) {
    FixtureEntry e;
    e.digest = std::move(digest);
    e.response = std::move(response);
    return e;
}

ScriptedBackend::ScriptedBackend(std::shared_ptr<const Fixture> fixture)
    : fixture_(std::move(fixture)) {
    if (!fixture_) throw std::invalid_argument("null fixture");
}

ScriptedBackend::ScriptedBackend(Fixture fixture)
    : ScriptedBackend(std::make_shared<const Fixture>(std::move(fixture))) {}

std::string ScriptedBackend::complete(const MessageList& messages) {
    const int call_index = calls_++;
    for (std::size_t i = cursor_; i < fixture_->entries.size(); ++i) {
        const auto& e = fixture_->entries[i];
        if (e.index.has_value() && *e.index == call_index) {
            cursor_ = i + 1;
            return e.response;
        }
    }
    const std::string digest = final_human_digest(messages);
    for (const auto& e : fixture_->entries) {
        if (!e.index.has_value() && e.digest == digest) return e.response;
    }
    bool any_keyed = false;
    for (const auto& e : fixture_->entries) any_keyed |= !e.index.has_value();
    if (any_keyed) throw FixtureNoMatchError(digest);
    throw FixtureExhaustedError("fixture exhausted at call " + std::to_string(call_index));
}

RecordingBackend::RecordingBackend(TextBackend& inner, std::filesystem::path sink)
    : inner_(inner), sink_(std::move(sink)) {
    // Truncate up front so an empty session still leaves a valid fixture file.
    std::ofstream out(sink_, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open fixture sink: " + sink_.string());
}

std::string RecordingBackend::complete(const MessageList& messages) {
    std::string response = inner_.complete(messages);
    std::ofstream out(sink_, std::ios::app);
    if (!out) throw std::runtime_error("cannot append to fixture sink: " + sink_.string());
    out << entry_to_json(Fixture::keyed(final_human_digest(messages), response)).dump() << "\n";
    return response;
}

}  // namespace agentbench
