#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace agentbench {

class OpinionProvider;

// An expert suggestion for the next environment action.
struct Opinion {
    std::string action;
    std::optional<double> score;
};

struct OpinionPrompt {
    std::string rendered;
    int k = 0;
};

enum class AgreementMode { any_match, exact_top1 };

const char* agreement_mode_name(AgreementMode mode);
AgreementMode agreement_mode_from_name(const std::string& name);

struct AgreementRecord {
    int step = 0;
    std::string chosen;
    std::vector<std::string> shown;
    AgreementMode mode = AgreementMode::exact_top1;
    bool agreed = false;
};

class UndefinedRatioError : public std::runtime_error {
public:
    UndefinedRatioError() : std::runtime_error("agreement ratio undefined over zero records") {}
};

// Top-k opinions by descending provider score; equal scores break toward the
// lexicographically smaller action string. Empty when the provider has no
// scored actions (the caller then falls back to the plain trigger prompt).
std::vector<Opinion> sample_topk(OpinionProvider& provider, int k);

// Suggestion wording shown to the agent, singular or plural by count.
OpinionPrompt render_opinion_prompt(const std::vector<Opinion>& opinions);

// Case-, trim- and inner-whitespace-insensitive comparison of the chosen
// action against the shown suggestions.
bool detect_agreement(const std::string& chosen, const std::vector<std::string>& shown,
                      AgreementMode mode);

std::string normalize_action(const std::string& action);

double agreement_ratio(const std::vector<AgreementRecord>& records);

}  // namespace agentbench
