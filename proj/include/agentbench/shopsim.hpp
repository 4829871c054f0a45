#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agentbench/env.hpp"

namespace agentbench {

struct Product {
    std::string id;  // ASIN-like
    std::string title;
    std::string description;
    std::string features;
    std::string reviews;
    double price = 0.0;
    std::map<std::string, std::vector<std::string>> options;  // name -> values
    std::set<std::string> attributes;
    std::string product_type;
};

using Catalog = std::vector<Product>;

struct ShoppingGoal {
    std::string instruction;
    std::set<std::string> required_attributes;
    std::map<std::string, std::string> required_options;
    double price_cap = 0.0;
    std::string target_type;
};

struct ShopReward {
    double reward = 0.0;  // 0..100
    bool success = false;
};

// Lowercase alphanumeric token runs.
std::vector<std::string> tokenize(const std::string& text);

// Lexical relevance: per query token, occurrences in title count twice,
// occurrences in attributes and product type once.
double lexical_score(const Product& product, const std::vector<std::string>& query_tokens);

// Indices of products with positive score, by descending score then ascending
// id. rank_catalog scores products in parallel; rank_catalog_serial is the
// reference path and must produce the identical ordering.
std::vector<std::size_t> rank_catalog(const Catalog& catalog, const std::string& query);
std::vector<std::size_t> rank_catalog_serial(const Catalog& catalog, const std::string& query);

// Reward for a terminal state. No purchase scores zero. Otherwise the product
// type gates everything; matched attributes, matched options and the price cap
// each earn an equal share; success means a full score of 100.
ShopReward compute_reward(const ShoppingGoal& goal, const Product* purchased,
                          const std::map<std::string, std::string>& selected_options);

Catalog load_catalog(const std::filesystem::path& path);
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);
Catalog gen_catalog(std::uint64_t seed, int n);

std::vector<ShoppingGoal> load_goals(const std::filesystem::path& path);
void save_goals(const std::vector<ShoppingGoal>& goals, const std::filesystem::path& path);
// Goals derived from catalog products, so a perfect purchase always exists.
std::vector<ShoppingGoal> gen_goals(const Catalog& catalog, std::uint64_t seed, int n);

enum class ShopPhase { search, results, item, terminal };
enum class ItemTab { none, description, features, reviews };

class ShopEnv final : public Environment {
public:
    ShopEnv(std::shared_ptr<const Catalog> catalog, ShoppingGoal goal, int max_steps);

    // Environment interface
    std::string goal_text() const override { return goal_.instruction; }
    std::vector<ToolSpec> tools() const override;
    const EnvObservation& observation() const override { return obs_; }
    const EnvObservation& act(const std::string& action) override;
    const EnvObservation& dispatch(const CommandRequest& command) override;
    std::string action_string(const CommandRequest& command) const override;
    CommandRequest command_for(const std::string& action) const override;
    bool terminal() const override { return phase_ == ShopPhase::terminal; }
    bool committed() const override { return purchased_.has_value(); }
    int steps_used() const override { return steps_used_; }
    int max_steps() const override { return max_steps_; }
    EnvResult result() const override;
    std::unique_ptr<Environment> clone() const override;

    // Page-level operations (also reachable through act/dispatch)
    const EnvObservation& search(const std::string& query);
    const EnvObservation& click(const std::string& target);

    // State views used by expert policies and tests
    ShopPhase phase() const { return phase_; }
    const ShoppingGoal& goal() const { return goal_; }
    const Catalog& catalog() const { return *catalog_; }
    const std::vector<std::string>& buttons() const { return obs_.actions_raw; }
    std::vector<std::string> page_item_ids() const;
    const Product* viewed_product() const;
    const std::map<std::string, std::string>& selected_options() const { return selected_; }
    const std::optional<std::pair<std::string, std::map<std::string, std::string>>>& purchased()
        const {
        return purchased_;
    }

    struct Obs : EnvObservation {
        std::vector<std::string> actions_raw;  // button labels as printed
    };

private:
    void render();
    void consume_step();
    bool click_known(const std::string& target_lower);

    std::shared_ptr<const Catalog> catalog_;
    ShoppingGoal goal_;
    int max_steps_;

    ShopPhase phase_ = ShopPhase::search;
    ItemTab tab_ = ItemTab::none;
    std::string query_;
    std::vector<std::size_t> results_;
    int page_ = 0;
    std::optional<std::size_t> viewed_;
    std::map<std::string, std::string> selected_;
    std::optional<std::pair<std::string, std::map<std::string, std::string>>> purchased_;
    int steps_used_ = 0;
    std::string status_line_;  // transient banner (invalid action, purchase note)

    Obs obs_;
};

}  // namespace agentbench
