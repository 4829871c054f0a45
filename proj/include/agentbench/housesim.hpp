#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agentbench/env.hpp"

namespace agentbench {

struct ReceptacleSpec {
    std::string id;  // "cabinet 1"
    bool openable = false;
};

struct ObjectSpec {
    std::string id;  // "soapbar 1"
    std::string object_class;
    std::string location;  // receptacle id
};

struct WorldSpec {
    std::string name;
    std::vector<ReceptacleSpec> receptacles;
    std::vector<ObjectSpec> objects;

    // Appliance classes present (sinkbasin, microwave, fridge, desklamp).
    std::set<std::string> appliances() const;
    void validate() const;  // unique ids, declared locations
};

enum class TaskFamily {
    pick_and_place_simple,
    pick_clean_then_place_in_recep,
    pick_heat_then_place_in_recep,
    pick_cool_then_place_in_recep,
    look_at_obj_in_light,
    pick_two_obj_and_place,
};

const char* family_name(TaskFamily family);
TaskFamily family_from_name(const std::string& name);

struct HouseTask {
    TaskFamily family = TaskFamily::pick_and_place_simple;
    std::string object_class;  // "soapbar"
    std::string target_class;  // "countertop"
    std::string id;            // "<family>-<Object>-None-<Receptacle>-<number>"
    std::string world;         // world name

    std::string instruction() const;  // "clean some soapbar and put it in countertop."
};

// "cabinet 1" -> "cabinet"
std::string receptacle_class(const std::string& id);

std::string camel_case_label(const std::string& cls);
std::string make_task_id(TaskFamily family, const std::string& object_class,
                         const std::string& target_class, int number);

// Throws when no goal-satisfying action sequence can exist in the world.
void validate_task(const WorldSpec& world, const HouseTask& task);

class HouseEnv final : public Environment {
public:
    HouseEnv(WorldSpec world, HouseTask task, int max_steps);

    std::string goal_text() const override { return task_.instruction(); }
    std::vector<ToolSpec> tools() const override;
    const EnvObservation& observation() const override { return obs_; }
    const EnvObservation& act(const std::string& action) override { return execute(action); }
    const EnvObservation& dispatch(const CommandRequest& command) override;
    std::string action_string(const CommandRequest& command) const override;
    CommandRequest command_for(const std::string& action) const override;
    bool terminal() const override;
    bool committed() const override { return done_; }
    int steps_used() const override { return steps_used_; }
    int max_steps() const override { return max_steps_; }
    EnvResult result() const override { return {done_ ? 1.0 : 0.0, done_}; }
    std::unique_ptr<Environment> clone() const override;

    // Exactly the executable actions in the current state, sorted.
    std::vector<std::string> available_actions() const;

    // Applies the action when it is available; anything else observes
    // "Nothing happens." Either way one step is consumed.
    const EnvObservation& execute(const std::string& action);

    bool goal_satisfied() const { return done_; }

    // State views for expert policies and tests.
    const WorldSpec& world() const { return world_; }
    const HouseTask& task() const { return task_; }
    const std::string& location() const { return location_; }
    const std::optional<std::string>& inventory() const { return inventory_; }
    const std::map<std::string, std::string>& object_locations() const { return object_location_; }
    bool is_open(const std::string& receptacle) const;
    bool is_clean(const std::string& object) const { return clean_.count(object) > 0; }
    bool is_hot(const std::string& object) const { return hot_.count(object) > 0; }
    bool is_cold(const std::string& object) const { return cold_.count(object) > 0; }
    bool lamp_on(const std::string& lamp) const { return lamps_on_.count(lamp) > 0; }

private:
    const ReceptacleSpec* find_receptacle(const std::string& id) const;
    bool contents_visible(const ReceptacleSpec& r) const;
    std::vector<std::string> objects_at(const std::string& receptacle) const;
    std::string describe_contents(const std::string& receptacle) const;
    std::string room_overview() const;
    std::string apply(const std::string& action);
    bool check_goal() const;
    void render(const std::string& description);

    WorldSpec world_;
    HouseTask task_;
    int max_steps_;

    std::string location_ = "start";
    std::optional<std::string> inventory_;
    std::map<std::string, std::string> object_location_;  // object id -> receptacle id
    std::map<std::string, std::string> object_class_;
    std::map<std::string, bool> open_;  // openable receptacles only
    std::set<std::string> clean_, hot_, cold_;
    std::set<std::string> lamps_on_;
    int steps_used_ = 0;
    bool done_ = false;

    EnvObservation obs_;
};

// JSON-lines world and task files.
std::vector<WorldSpec> load_worlds(const std::filesystem::path& path);
void save_worlds(const std::vector<WorldSpec>& worlds, const std::filesystem::path& path);
std::vector<HouseTask> load_house_tasks(const std::filesystem::path& path,
                                        const std::vector<WorldSpec>& worlds);
void save_house_tasks(const std::vector<HouseTask>& tasks, const std::filesystem::path& path);

struct HouseSuite {
    std::vector<WorldSpec> worlds;
    std::vector<HouseTask> tasks;
};

// Small authored worlds with seeded object placement; cycles the six task
// families so any prefix covers a spread of them.
HouseSuite gen_house_suite(std::uint64_t seed, int n);

}  // namespace agentbench
