#include "agentbench/shopsim.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "agentbench/rng.hpp"
#include "json.hpp"

namespace agentbench {

namespace {

constexpr int kPageSize = 10;

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::string money(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string title_case(const std::string& words) {
    std::string out = words;
    bool start = true;
    for (char& c : out) {
        if (std::isalpha(static_cast<unsigned char>(c))) {
            c = start ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
            start = false;
        } else {
            start = true;
        }
    }
    return out;
}

std::unordered_map<std::string, int> token_counts(const std::string& text) {
    std::unordered_map<std::string, int> counts;
    for (const auto& t : tokenize(text)) ++counts[t];
    return counts;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            cur.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

double lexical_score(const Product& product, const std::vector<std::string>& query_tokens) {
    const auto title = token_counts(product.title);
    std::string attr_text;
    for (const auto& a : product.attributes) {
        attr_text += a;
        attr_text += ' ';
    }
    const auto attrs = token_counts(attr_text);
    const auto type = token_counts(product.product_type);

    double score = 0.0;
    for (const auto& t : query_tokens) {
        auto it = title.find(t);
        if (it != title.end()) score += 2.0 * it->second;
        it = attrs.find(t);
        if (it != attrs.end()) score += it->second;
        it = type.find(t);
        if (it != type.end()) score += it->second;
    }
    return score;
}

namespace {

std::vector<std::size_t> order_hits(const Catalog& catalog, const std::vector<double>& scores) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        if (scores[i] > 0.0) hits.push_back(i);
    }
    std::sort(hits.begin(), hits.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return catalog[a].id < catalog[b].id;
    });
    return hits;
}

}  // namespace

std::vector<std::size_t> rank_catalog(const Catalog& catalog, const std::string& query) {
    const auto tokens = tokenize(query);
    std::vector<double> scores(catalog.size(), 0.0);
    const std::int64_t n = static_cast<std::int64_t>(catalog.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        scores[static_cast<std::size_t>(i)] =
            lexical_score(catalog[static_cast<std::size_t>(i)], tokens);
    }
    return order_hits(catalog, scores);
}

std::vector<std::size_t> rank_catalog_serial(const Catalog& catalog, const std::string& query) {
    const auto tokens = tokenize(query);
    std::vector<double> scores(catalog.size(), 0.0);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        scores[i] = lexical_score(catalog[i], tokens);
    }
    return order_hits(catalog, scores);
}

ShopReward compute_reward(const ShoppingGoal& goal, const Product* purchased,
                          const std::map<std::string, std::string>& selected_options) {
    if (purchased == nullptr) return {};

    const bool type_ok = purchased->product_type == goal.target_type;
    std::size_t attr_hits = 0;
    for (const auto& a : goal.required_attributes) {
        if (purchased->attributes.count(a)) ++attr_hits;
    }
    std::size_t option_hits = 0;
    for (const auto& [name, value] : goal.required_options) {
        auto it = selected_options.find(name);
        if (it != selected_options.end() && to_lower(it->second) == to_lower(value)) ++option_hits;
    }
    const bool price_ok = purchased->price <= goal.price_cap + 1e-9;

    const std::size_t denom = goal.required_attributes.size() + goal.required_options.size() + 1;
    const std::size_t hits = attr_hits + option_hits + (price_ok ? 1 : 0);

    ShopReward r;
    r.success = type_ok && hits == denom;
    r.reward = type_ok ? 100.0 * static_cast<double>(hits) / static_cast<double>(denom) : 0.0;
    if (r.success) r.reward = 100.0;
    return r;
}

// ---------------------------------------------------------------------------
// ShopEnv

ShopEnv::ShopEnv(std::shared_ptr<const Catalog> catalog, ShoppingGoal goal, int max_steps)
    : catalog_(std::move(catalog)), goal_(std::move(goal)), max_steps_(max_steps) {
    if (!catalog_ || catalog_->empty()) throw std::invalid_argument("catalog is empty");
    if (max_steps_ < 1) throw std::invalid_argument("max_steps must be >= 1");
    render();
}

std::vector<ToolSpec> ShopEnv::tools() const {
    ToolSpec search_tool;
    search_tool.name = "search";
    search_tool.description =
        "Search the product catalog. tool_input is the free-text query. Only available from the "
        "search page (use click with 'Back to Search' to get there).";
    search_tool.demos = {
        {"Instruction:\ni want a dishwasher safe ceramic coffee mug, and price lower than 25.00 "
         "dollars\nUse the search command to look for matching products.",
         R"({"name": "search", "args": {"tool_input": "dishwasher safe ceramic coffee mug"}})"},
        {"Page 1 (Total results: 0)",
         R"({"name": "search", "args": {"tool_input": "ceramic coffee mug"}})"}};

    ToolSpec click_tool;
    click_tool.name = "click";
    click_tool.description =
        "Click a button on the current page. tool_input is the button text: an item id, an option "
        "value, 'Description', 'Features', 'Reviews', 'Next >', '< Prev', 'Back to Search', or "
        "'Buy Now'.";
    click_tool.demos = {
        {"[button] B0EXAMPLE01 [button_]\nCasaro Dishwasher Safe Ceramic Coffee Mug\n$12.50",
         R"({"name": "click", "args": {"tool_input": "B0EXAMPLE01"}})"},
        {"Casaro Dishwasher Safe Ceramic Coffee Mug\nPrice: $12.50\ncolor:\n[button] blue "
         "[button_]\n[button] white [button_]\n[button] Buy Now [button_]",
         R"({"name": "click", "args": {"tool_input": "blue"}})"},
        {"Selected options: color: blue\n[button] Buy Now [button_]",
         R"({"name": "click", "args": {"tool_input": "Buy Now"}})"}};

    return {search_tool, click_tool};
}

std::string ShopEnv::action_string(const CommandRequest& command) const {
    return to_lower(command.name) + "[" + command.tool_input + "]";
}

CommandRequest ShopEnv::command_for(const std::string& action) const {
    if (action.size() >= 8 && to_lower(action.substr(0, 7)) == "search[" && action.back() == ']') {
        return {"search", action.substr(7, action.size() - 8)};
    }
    if (action.size() >= 7 && to_lower(action.substr(0, 6)) == "click[" && action.back() == ']') {
        return {"click", action.substr(6, action.size() - 7)};
    }
    return {"click", action};
}

const EnvObservation& ShopEnv::act(const std::string& action) {
    const CommandRequest cmd = command_for(action);
    if (action.find('[') == std::string::npos) {
        // Bare strings are not part of the action grammar.
        if (phase_ == ShopPhase::terminal) return obs_;
        consume_step();
        status_line_ = "Invalid action. Nothing happens.";
        render();
        return obs_;
    }
    return dispatch(cmd);
}

const EnvObservation& ShopEnv::dispatch(const CommandRequest& command) {
    const std::string name = to_lower(command.name);
    if (name == "search") return search(command.tool_input);
    if (name == "click") return click(command.tool_input);
    if (phase_ == ShopPhase::terminal) return obs_;
    consume_step();
    status_line_ = "Invalid action. Nothing happens.";
    render();
    return obs_;
}

void ShopEnv::consume_step() {
    ++steps_used_;
}

const EnvObservation& ShopEnv::search(const std::string& query) {
    if (phase_ == ShopPhase::terminal) return obs_;
    consume_step();
    status_line_.clear();

    if (phase_ != ShopPhase::search && phase_ != ShopPhase::results) {
        status_line_ = "Invalid action. Nothing happens.";
    } else if (tokenize(query).empty()) {
        status_line_ = "Search error: empty query.";
    } else {
        query_ = query;
        results_ = rank_catalog(*catalog_, query_);
        page_ = 0;
        phase_ = ShopPhase::results;
        tab_ = ItemTab::none;
        viewed_.reset();
        selected_.clear();
    }

    if (steps_used_ >= max_steps_ && phase_ != ShopPhase::terminal) phase_ = ShopPhase::terminal;
    render();
    return obs_;
}

bool ShopEnv::click_known(const std::string& target) {
    // Returns true when the target named a live button and was applied.
    if (target == "back to search") {
        if (phase_ != ShopPhase::results && phase_ != ShopPhase::item) return false;
        phase_ = ShopPhase::search;
        tab_ = ItemTab::none;
        viewed_.reset();
        selected_.clear();
        return true;
    }
    if (target == "< prev") {
        if (phase_ == ShopPhase::item && tab_ != ItemTab::none) {
            tab_ = ItemTab::none;
            return true;
        }
        if (phase_ == ShopPhase::item) {
            phase_ = ShopPhase::results;
            viewed_.reset();
            selected_.clear();
            return true;
        }
        if (phase_ == ShopPhase::results && page_ > 0) {
            --page_;
            return true;
        }
        return false;
    }
    if (target == "next >") {
        if (phase_ == ShopPhase::results &&
            static_cast<std::size_t>((page_ + 1) * kPageSize) < results_.size()) {
            ++page_;
            return true;
        }
        return false;
    }
    if (phase_ == ShopPhase::results) {
        const auto ids = page_item_ids();
        for (std::size_t slot = 0; slot < ids.size(); ++slot) {
            if (to_lower(ids[slot]) == target) {
                viewed_ = results_[static_cast<std::size_t>(page_ * kPageSize) + slot];
                phase_ = ShopPhase::item;
                tab_ = ItemTab::none;
                selected_.clear();
                return true;
            }
        }
        return false;
    }
    if (phase_ == ShopPhase::item && tab_ == ItemTab::none) {
        if (target == "description") {
            tab_ = ItemTab::description;
            return true;
        }
        if (target == "features") {
            tab_ = ItemTab::features;
            return true;
        }
        if (target == "reviews") {
            tab_ = ItemTab::reviews;
            return true;
        }
        if (target == "buy now") {
            purchased_ = {catalog_->at(*viewed_).id, selected_};
            phase_ = ShopPhase::terminal;
            return true;
        }
        const Product& p = catalog_->at(*viewed_);
        for (const auto& [name, values] : p.options) {
            for (const auto& v : values) {
                if (to_lower(v) == target) {
                    selected_[name] = v;
                    return true;
                }
            }
        }
        return false;
    }
    return false;
}

const EnvObservation& ShopEnv::click(const std::string& target) {
    if (phase_ == ShopPhase::terminal) return obs_;
    consume_step();
    status_line_.clear();

    if (!click_known(to_lower(target))) {
        status_line_ = "Invalid action. Nothing happens.";
    }
    if (steps_used_ >= max_steps_ && phase_ != ShopPhase::terminal) phase_ = ShopPhase::terminal;
    render();
    return obs_;
}

std::vector<std::string> ShopEnv::page_item_ids() const {
    std::vector<std::string> ids;
    if (phase_ != ShopPhase::results) return ids;
    const std::size_t begin = static_cast<std::size_t>(page_ * kPageSize);
    for (std::size_t i = begin; i < results_.size() && i < begin + kPageSize; ++i) {
        ids.push_back(catalog_->at(results_[i]).id);
    }
    return ids;
}

const Product* ShopEnv::viewed_product() const {
    if (!viewed_.has_value()) return nullptr;
    return &catalog_->at(*viewed_);
}

EnvResult ShopEnv::result() const {
    if (!purchased_.has_value()) return {};
    const Product* p = nullptr;
    for (const auto& cand : *catalog_) {
        if (cand.id == purchased_->first) {
            p = &cand;
            break;
        }
    }
    const ShopReward r = compute_reward(goal_, p, purchased_->second);
    return {r.reward, r.success};
}

std::unique_ptr<Environment> ShopEnv::clone() const {
    return std::make_unique<ShopEnv>(*this);
}

void ShopEnv::render() {
    std::ostringstream text;
    std::vector<std::string> buttons;

    if (!status_line_.empty()) text << status_line_ << "\n";
    text << "Instruction:\n" << goal_.instruction << "\n";

    switch (phase_) {
        case ShopPhase::search:
            text << "Use the search command to look for matching products.";
            break;
        case ShopPhase::results: {
            buttons.push_back("Back to Search");
            text << "[button] Back to Search [button_]\n";
            text << "Page " << (page_ + 1) << " (Total results: " << results_.size() << ")";
            if (page_ > 0) {
                buttons.push_back("< Prev");
                text << "\n[button] < Prev [button_]";
            }
            if (static_cast<std::size_t>((page_ + 1) * kPageSize) < results_.size()) {
                buttons.push_back("Next >");
                text << "\n[button] Next > [button_]";
            }
            const std::size_t begin = static_cast<std::size_t>(page_ * kPageSize);
            for (std::size_t i = begin; i < results_.size() && i < begin + kPageSize; ++i) {
                const Product& p = catalog_->at(results_[i]);
                buttons.push_back(p.id);
                text << "\n\n[button] " << p.id << " [button_]\n"
                     << p.title << "\n$" << money(p.price);
            }
            break;
        }
        case ShopPhase::item: {
            const Product& p = catalog_->at(*viewed_);
            buttons.push_back("Back to Search");
            buttons.push_back("< Prev");
            text << "[button] Back to Search [button_]\n[button] < Prev [button_]\n";
            if (tab_ == ItemTab::none) {
                text << p.title << "\nPrice: $" << money(p.price);
                for (const auto& [name, values] : p.options) {
                    text << "\n" << name << ":";
                    for (const auto& v : values) {
                        buttons.push_back(v);
                        text << "\n[button] " << v << " [button_]";
                    }
                }
                if (!selected_.empty()) {
                    text << "\nSelected options:";
                    bool first = true;
                    for (const auto& [name, value] : selected_) {
                        text << (first ? " " : " | ") << name << ": " << value;
                        first = false;
                    }
                }
                for (const char* tab : {"Description", "Features", "Reviews", "Buy Now"}) {
                    buttons.push_back(tab);
                    text << "\n[button] " << tab << " [button_]";
                }
            } else {
                const char* label = tab_ == ItemTab::description ? "Description"
                                    : tab_ == ItemTab::features  ? "Features"
                                                                  : "Reviews";
                const std::string& body = tab_ == ItemTab::description ? p.description
                                          : tab_ == ItemTab::features  ? p.features
                                                                        : p.reviews;
                text << label << ":\n" << body;
            }
            break;
        }
        case ShopPhase::terminal:
            if (purchased_.has_value()) {
                text << "You have purchased " << purchased_->first
                     << ". Thank you for your purchase!";
            } else {
                text << "You have run out of steps.";
            }
            break;
    }

    obs_.text = text.str();
    obs_.actions_raw = buttons;
    obs_.actions.clear();
    for (const auto& b : buttons) obs_.actions.push_back("click[" + b + "]");
    if (phase_ == ShopPhase::search || phase_ == ShopPhase::results) {
        obs_.actions.push_back("search[" + goal_.instruction + "]");
    }
}

// ---------------------------------------------------------------------------
// Catalog and goal files

namespace {

Product product_from_json(const nlohmann::json& j) {
    Product p;
    p.id = j.at("id").get<std::string>();
    p.title = j.at("title").get<std::string>();
    p.description = j.value("description", "");
    p.features = j.value("features", "");
    p.reviews = j.value("reviews", "");
    p.price = j.at("price").get<double>();
    p.product_type = j.at("product_type").get<std::string>();
    for (const auto& a : j.value("attributes", nlohmann::json::array())) {
        p.attributes.insert(a.get<std::string>());
    }
    if (j.contains("options")) {
        for (const auto& [name, values] : j["options"].items()) {
            std::vector<std::string> vs;
            for (const auto& v : values) vs.push_back(v.get<std::string>());
            p.options[name] = std::move(vs);
        }
    }
    return p;
}

nlohmann::json product_to_json(const Product& p) {
    nlohmann::json j;
    j["id"] = p.id;
    j["title"] = p.title;
    j["description"] = p.description;
    j["features"] = p.features;
    j["reviews"] = p.reviews;
    j["price"] = p.price;
    j["product_type"] = p.product_type;
    j["attributes"] = p.attributes;
    j["options"] = nlohmann::json::object();
    for (const auto& [name, values] : p.options) j["options"][name] = values;
    return j;
}

void validate_product(const Product& p, const std::string& where) {
    if (p.id.empty()) throw std::runtime_error(where + ": product id is empty");
    if (p.price <= 0.0) throw std::runtime_error(where + ": product price must be > 0");
    for (const auto& [name, values] : p.options) {
        if (values.empty()) {
            throw std::runtime_error(where + ": option '" + name + "' has no values");
        }
    }
}

}  // namespace

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path.string());
    Catalog catalog;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw std::runtime_error(where + ": malformed product JSON");
        Product p;
        try {
            p = product_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        validate_product(p, where);
        if (!seen.insert(p.id).second) {
            throw std::runtime_error(where + ": duplicate product id " + p.id);
        }
        catalog.push_back(std::move(p));
    }
    if (catalog.empty()) throw std::runtime_error("catalog file is empty: " + path.string());
    return catalog;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write catalog file: " + path.string());
    for (const auto& p : catalog) out << product_to_json(p).dump() << "\n";
}

namespace {

struct OptionSchema {
    const char* name;
    std::vector<const char*> values;
};

struct CategoryTemplate {
    const char* type;
    const char* noun;
    std::vector<const char*> attrs;
    std::vector<OptionSchema> options;
    double price_lo;
    double price_hi;
};

const std::vector<CategoryTemplate>& categories() {
    static const std::vector<CategoryTemplate> cats = {
        {"hair towel", "Hair Towel Wrap",
         {"quick drying", "microfiber", "super absorbent", "anti frizz", "machine washable",
          "ultra soft"},
         {{"color", {"pink", "grey", "light blue", "purple", "white", "beige"}},
          {"size", {"one size", "25x70cm", "30x80cm"}}},
         4.0, 40.0},
        {"storage ottoman", "Storage Ottoman Bench",
         {"faux leather", "easy to install", "foldable", "memory foam seat", "high load capacity",
          "tufted"},
         {{"color", {"black", "brown", "orange", "pink", "beige", "purple"}},
          {"size", {"40x40x40cm", "60x40x40cm", "76x38x38cm"}}},
         60.0, 400.0},
        {"water bottle", "Water Bottle",
         {"double walled", "leak proof", "vacuum insulated", "bpa free", "wide mouth",
          "powder coated"},
         {{"color", {"teal", "black", "white", "red", "navy"}},
          {"capacity", {"500ml", "750ml", "1l"}}},
         8.0, 45.0},
        {"desk lamp", "Desk Lamp",
         {"dimmable", "touch control", "eye caring", "adjustable arm", "usb charging port",
          "energy efficient"},
         {{"color", {"black", "white", "silver"}},
          {"light color", {"warm white", "cool white", "daylight"}}},
         15.0, 90.0},
        {"yoga mat", "Yoga Mat",
         {"non slip", "extra thick", "eco friendly", "moisture resistant", "lightweight",
          "textured surface"},
         {{"color", {"green", "blue", "pink", "gray", "purple"}},
          {"thickness", {"4mm", "6mm", "8mm"}}},
         12.0, 80.0},
        {"coffee mug", "Coffee Mug",
         {"ceramic", "dishwasher safe", "double walled", "hand painted", "large handle",
          "matte finish"},
         {{"color", {"blue", "white", "black", "yellow", "green"}},
          {"capacity", {"11oz", "14oz", "20oz"}}},
         6.0, 35.0},
        {"phone case", "Phone Case",
         {"shockproof", "slim fit", "wireless charging compatible", "raised edges",
          "military grade", "anti scratch"},
         {{"color", {"clear", "black", "navy", "rose gold", "mint"}},
          {"finish", {"glossy", "matte"}}},
         7.0, 30.0},
        {"throw pillow", "Throw Pillow",
         {"velvet", "hypoallergenic", "removable cover", "hidden zipper", "fade resistant",
          "plush filling"},
         {{"color", {"mustard", "teal", "ivory", "charcoal", "blush"}},
          {"size", {"16x16 inch", "18x18 inch", "20x20 inch"}}},
         9.0, 50.0},
        {"laptop sleeve", "Laptop Sleeve",
         {"water resistant", "padded interior", "slim profile", "scratch proof", "extra pocket",
          "reinforced seams"},
         {{"color", {"gray", "black", "pink", "navy"}},
          {"size", {"13 inch", "14 inch", "15.6 inch"}}},
         10.0, 45.0},
        {"bath towel set", "Bath Towel Set",
         {"egyptian cotton", "quick drying", "fade resistant", "extra large", "plush weave",
          "machine washable"},
         {{"color", {"white", "sand", "sage", "slate blue"}},
          {"set size", {"2 pack", "4 pack", "6 pack"}}},
         15.0, 90.0},
    };
    return cats;
}

const std::vector<const char*>& brands() {
    static const std::vector<const char*> names = {"Lumo",    "Casaro",  "Nordview", "Pexley",
                                                   "Verano",  "Orla",    "Kentwell", "Mirelle",
                                                   "Danford", "Soleio"};
    return names;
}

std::string gen_product_id(SplitMix& rng, std::unordered_set<std::string>& used) {
    static const char* alphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    while (true) {
        std::string id = "B0";
        for (int i = 0; i < 8; ++i) id.push_back(alphabet[rng.below(36)]);
        if (used.insert(id).second) return id;
    }
}

// k distinct indices from [0, n), in draw order.
std::vector<std::size_t> draw_distinct(SplitMix& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k && !pool.empty(); ++i) {
        const std::size_t pick = rng.below(pool.size());
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

}  // namespace

Catalog gen_catalog(std::uint64_t seed, int n) {
    if (n < 1) throw std::invalid_argument("catalog size must be >= 1");
    SplitMix rng(mix64(seed ^ 0xCA7A10D0ULL));
    Catalog catalog;
    std::unordered_set<std::string> used_ids;

    for (int i = 0; i < n; ++i) {
        const auto& cat = categories()[static_cast<std::size_t>(i) % categories().size()];
        Product p;
        p.id = gen_product_id(rng, used_ids);
        p.product_type = cat.type;

        const auto attr_idx = draw_distinct(rng, cat.attrs.size(), 3);
        std::vector<std::string> attrs;
        for (auto idx : attr_idx) attrs.emplace_back(cat.attrs[idx]);
        p.attributes = {attrs.begin(), attrs.end()};

        for (const auto& schema : cat.options) {
            const std::size_t want = 2 + rng.below(std::min<std::size_t>(3, schema.values.size() - 1));
            auto idx = draw_distinct(rng, schema.values.size(), want);
            std::sort(idx.begin(), idx.end());  // keep pool order in the listing
            std::vector<std::string> values;
            for (auto k : idx) values.emplace_back(schema.values[k]);
            p.options[schema.name] = std::move(values);
        }

        p.price = std::round((cat.price_lo + rng.unit() * (cat.price_hi - cat.price_lo)) * 100.0) /
                  100.0;

        const std::string brand = brands()[rng.below(brands().size())];
        p.title = brand + " " + title_case(attrs[0]) + " " + title_case(attrs[1]) + " " + cat.noun;
        if (rng.below(2) == 0) {
            // Some titles advertise an option value, like real listings do.
            const auto& first_opt = p.options.begin()->second;
            p.title += " (" + title_case(first_opt[rng.below(first_opt.size())]) + ")";
        }

        p.description = "The " + brand + " " + std::string(cat.noun) + " is " + attrs[0] + ", " +
                        attrs[1] + " and " + attrs[2] + ". Designed for everyday use.";
        p.features = "- " + attrs[0] + "\n- " + attrs[1] + "\n- " + attrs[2];
        p.reviews = "Rated " + std::to_string(35 + static_cast<int>(rng.below(15))).insert(1, ".") +
                    "/5 by " + std::to_string(12 + static_cast<int>(rng.below(488))) +
                    " customers. Buyers mention it is " + attrs[2] + ".";

        catalog.push_back(std::move(p));
    }
    return catalog;
}

std::vector<ShoppingGoal> gen_goals(const Catalog& catalog, std::uint64_t seed, int n) {
    if (catalog.empty()) throw std::invalid_argument("catalog is empty");
    if (n < 1) throw std::invalid_argument("goal count must be >= 1");
    SplitMix rng(mix64(seed ^ 0x60A15EEDULL));
    std::vector<ShoppingGoal> goals;

    for (int i = 0; i < n; ++i) {
        const Product& p = catalog[rng.below(catalog.size())];
        ShoppingGoal g;
        g.target_type = p.product_type;

        std::vector<std::string> attrs(p.attributes.begin(), p.attributes.end());
        const std::size_t attr_count = 1 + rng.below(2);
        std::string attr_clause;
        for (auto idx : draw_distinct(rng, attrs.size(), attr_count)) {
            g.required_attributes.insert(attrs[idx]);
        }
        {
            bool first = true;
            for (const auto& a : g.required_attributes) {
                attr_clause += (first ? "" : " and ") + a;
                first = false;
            }
        }

        std::vector<std::pair<std::string, std::vector<std::string>>> opts(p.options.begin(),
                                                                           p.options.end());
        const std::size_t opt_count = rng.below(std::min<std::size_t>(opts.size(), 2) + 1);
        std::string opt_clause;
        for (auto idx : draw_distinct(rng, opts.size(), opt_count)) {
            const auto& [name, values] = opts[idx];
            const std::string value = values[rng.below(values.size())];
            g.required_options[name] = value;
        }
        for (const auto& [name, value] : g.required_options) {
            opt_clause += ", " + name + " should be " + to_lower(value);
        }

        g.price_cap =
            std::ceil(p.price * (1.15 + 0.35 * rng.unit()) * 100.0) / 100.0;

        g.instruction = "i want a " + attr_clause + " " + g.target_type + opt_clause +
                        ", and price lower than " + money(g.price_cap) + " dollars";
        goals.push_back(std::move(g));
    }
    return goals;
}

std::vector<ShoppingGoal> load_goals(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open goal file: " + path.string());
    std::vector<ShoppingGoal> goals;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) throw std::runtime_error(where + ": malformed goal JSON");
        ShoppingGoal g;
        try {
            g.instruction = j.at("instruction").get<std::string>();
            g.price_cap = j.at("price_cap").get<double>();
            g.target_type = j.at("target_type").get<std::string>();
            for (const auto& a : j.value("required_attributes", nlohmann::json::array())) {
                g.required_attributes.insert(a.get<std::string>());
            }
            if (j.contains("required_options")) {
                for (const auto& [name, value] : j["required_options"].items()) {
                    g.required_options[name] = value.get<std::string>();
                }
            }
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(where + ": " + e.what());
        }
        if (g.instruction.empty()) throw std::runtime_error(where + ": instruction is empty");
        if (g.price_cap <= 0.0) throw std::runtime_error(where + ": price_cap must be > 0");
        goals.push_back(std::move(g));
    }
    return goals;
}

void save_goals(const std::vector<ShoppingGoal>& goals, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write goal file: " + path.string());
    for (const auto& g : goals) {
        nlohmann::json j;
        j["instruction"] = g.instruction;
        j["required_attributes"] = g.required_attributes;
        j["required_options"] = nlohmann::json::object();
        for (const auto& [name, value] : g.required_options) j["required_options"][name] = value;
        j["price_cap"] = g.price_cap;
        j["target_type"] = g.target_type;
        out << j.dump() << "\n";
    }
}

}  // namespace agentbench
