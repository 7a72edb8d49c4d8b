#include "scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "error.hpp"

namespace beltsim {

namespace {

using nlohmann::json;

// Strict-view of a JSON object: every field must be consumed exactly once and
// anything left over is an error naming the field.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) {
            fail(ErrorCode::parse, "section " + path_ + " must be an object");
        }
        for (const auto& item : node_.items()) remaining_.insert(item.key());
    }

    ~Section() = default;

    bool has(const std::string& key) const { return node_.contains(key); }

    const json& get(const std::string& key) {
        remaining_.erase(key);
        return node_.at(key);
    }

    double number(const std::string& key) {
        const json& v = get(key);
        if (!v.is_number()) type_error(key, "a number");
        return v.get<double>();
    }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    int integer(const std::string& key) {
        const json& v = get(key);
        if (!v.is_number_integer()) type_error(key, "an integer");
        return v.get<int>();
    }

    std::string text(const std::string& key) {
        const json& v = get(key);
        if (!v.is_string()) type_error(key, "a string");
        return v.get<std::string>();
    }

    void finish() const {
        if (!remaining_.empty()) {
            fail(ErrorCode::parse,
                 "unknown field \"" + *remaining_.begin() + "\" in " + path_);
        }
    }

    const std::string& path() const { return path_; }

private:
    [[noreturn]] void type_error(const std::string& key, const char* expected) const {
        fail(ErrorCode::parse, "field " + path_ + "." + key + " must be " + expected);
    }

    const json& node_;
    std::string path_;
    std::set<std::string> remaining_;
};

std::vector<double> number_list(const json& node, const std::string& path) {
    if (!node.is_array()) fail(ErrorCode::parse, "field " + path + " must be an array");
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& v : node) {
        if (!v.is_number()) fail(ErrorCode::parse, "field " + path + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ObjectSpec parse_object(const json& node) {
    Section sec(node, "object");
    const Shape shape = shape_from_string(sec.text("shape"));
    const double mass = sec.number("mass_kg");
    const double length = sec.number_or("length_m", 0.0);

    std::optional<double> radius;
    if (sec.has("radius_m")) {
        radius = sec.number("radius_m");
    } else if (shape == Shape::sphere || shape == Shape::cube) {
        if (length <= 0.0) {
            fail(ErrorCode::parse, "object needs radius_m or length_m for shape " +
                                       to_string(shape));
        }
        radius = length / 2.0;  // published dimension is the length only
    } else {
        fail(ErrorCode::parse,
             "object field radius_m is required for shape " + to_string(shape));
    }

    std::optional<double> inertia;
    if (sec.has("inertia_kgm2")) inertia = sec.number("inertia_kgm2");
    std::optional<double> friction;
    if (sec.has("friction_override")) friction = sec.number("friction_override");
    sec.finish();
    return ObjectSpec::make(shape, mass, radius, length, inertia, friction);
}

StiffnessProfile parse_stiffness(const json& node) {
    Section sec(node, "stiffness_profile");
    if (sec.has("k_N_per_mm")) {
        StiffnessProfile profile;
        profile.angles_deg = number_list(sec.get("angles_deg"), "stiffness_profile.angles_deg");
        profile.heights = number_list(sec.get("heights_m"), "stiffness_profile.heights_m");
        const json& rows = sec.get("k_N_per_mm");
        if (!rows.is_array()) {
            fail(ErrorCode::parse, "field stiffness_profile.k_N_per_mm must be an array");
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            profile.k.push_back(
                number_list(rows[i], "stiffness_profile.k_N_per_mm[" + std::to_string(i) + "]"));
        }
        sec.finish();
        return profile;
    }
    const double s45 = sec.number_or("theta45_scale", 1.0);
    const double s90 = sec.number_or("theta90_scale", 1.0);
    std::vector<double> heights = {0.025, 0.050, 0.075, 0.100};
    if (sec.has("heights_m")) {
        heights = number_list(sec.get("heights_m"), "stiffness_profile.heights_m");
    }
    sec.finish();
    return StiffnessProfile::measured_default(s45, s90, std::move(heights));
}

GripperConfig parse_gripper(const json& node, const json* stiffness_node) {
    Section sec(node, "gripper");
    GripperConfig gripper;
    gripper.gap = sec.number("gap_m");
    gripper.finger_height = sec.number_or("finger_height_m", kDefaultFingerHeight);
    gripper.mu_bo = sec.number("mu_bo");

    if (sec.has("tau_m_Nm") && sec.has("tau_m_kgcm")) {
        fail(ErrorCode::parse, "gripper: give tau_m_Nm or tau_m_kgcm, not both");
    }
    if (sec.has("tau_m_Nm")) {
        gripper.tau_m = sec.number("tau_m_Nm");
    } else {
        gripper.tau_m = sec.number_or("tau_m_kgcm", 3.4) * kKgCmToNewtonMeter;
    }

    if (sec.has("lever_arm_m") && sec.has("lever_arm_cm")) {
        fail(ErrorCode::parse, "gripper: give lever_arm_m or lever_arm_cm, not both");
    }
    if (sec.has("lever_arm_m")) {
        gripper.lever_arm = sec.number("lever_arm_m");
    } else {
        gripper.lever_arm = sec.number_or("lever_arm_cm", 5.965) / 100.0;
    }

    gripper.belt_speed_limit = sec.number_or("belt_speed_limit_mps", 0.5);
    if (sec.has("pulley_radius_m")) gripper.pulley_radius = sec.number("pulley_radius_m");
    sec.finish();

    gripper.stiffness = stiffness_node ? parse_stiffness(*stiffness_node)
                                       : StiffnessProfile::measured_default();
    return gripper;
}

ContactParams parse_contact(const json* node, const GripperConfig& gripper) {
    ContactParams params;
    params.mu = gripper.mu_bo;
    if (node) {
        Section sec(*node, "contact");
        params.mu = sec.number_or("mu_bo", gripper.mu_bo);
        params.v_eps = sec.number_or("v_eps_mps", 1e-3);
        sec.finish();
    }
    return params;
}

BeltSchedule parse_schedule(const json& node, const GripperConfig& gripper) {
    if (!node.is_array()) fail(ErrorCode::parse, "field schedule must be an array of segments");
    BeltSchedule schedule;
    for (std::size_t i = 0; i < node.size(); ++i) {
        Section sec(node[i], "schedule[" + std::to_string(i) + "]");
        BeltSegment seg;
        seg.duration = sec.number("duration_s");
        const bool linear = sec.has("v_left_mps") || sec.has("v_right_mps");
        const bool angular = sec.has("omega_left_radps") || sec.has("omega_right_radps");
        if (linear && angular) {
            fail(ErrorCode::parse, sec.path() + ": give linear or angular speeds, not both");
        }
        if (angular) {
            if (!gripper.pulley_radius) {
                fail(ErrorCode::parse,
                     sec.path() + ": angular speeds need gripper.pulley_radius_m");
            }
            seg.v_left = sec.number("omega_left_radps") * *gripper.pulley_radius;
            seg.v_right = sec.number("omega_right_radps") * *gripper.pulley_radius;
        } else {
            seg.v_left = sec.number("v_left_mps");
            seg.v_right = sec.number("v_right_mps");
        }
        sec.finish();
        schedule.segments.push_back(seg);
    }
    return schedule;
}

SimulationSettings parse_simulation(const json& node) {
    Section sec(node, "simulation");
    SimulationSettings sim;
    sim.x0 = sec.number("x0_m");
    sim.v0 = sec.number_or("v0_mps", 0.0);
    sim.alpha0 = sec.number_or("alpha0_rad", 0.0);
    sim.omega0 = sec.number_or("omega0_radps", 0.0);
    sim.dt = sec.number_or("dt_s", 1e-4);
    sim.t_end = sec.number("t_end_s");
    sim.decimation = sec.has("decimation") ? sec.integer("decimation") : 1;
    sec.finish();
    return sim;
}

}  // namespace

void Scenario::validate() const {
    if (schema_version != 1) {
        fail(ErrorCode::parse, "unsupported schema_version " + std::to_string(schema_version));
    }
    object.validate();
    gripper.validate();
    contact.validate();
    if (effective_mu() <= 0.0) {
        fail(ErrorCode::invalid, "effective friction coefficient must be positive");
    }
    schedule.validate(gripper.belt_speed_limit);
    if (!(sim.dt > 0.0) || !(sim.dt <= kMaxTimestep)) {
        fail(ErrorCode::invalid, "simulation dt must lie in (0, 1e-3] s");
    }
    if (sim.decimation < 1) fail(ErrorCode::invalid, "simulation decimation must be >= 1");
    if (!(sim.t_end > 0.0) || sim.t_end < schedule.total_duration()) {
        fail(ErrorCode::invalid, "simulation t_end must cover the schedule duration");
    }
    const double h_lo = gripper.stiffness.min_height();
    const double h_hi = gripper.stiffness.max_height();
    if (sim.x0 < h_lo || sim.x0 > h_hi) {
        fail(ErrorCode::invalid, "simulation x0_m outside characterized finger region");
    }
    initial_state().validate();
}

BodyState Scenario::initial_state() const {
    BodyState body;
    body.x = sim.x0;
    body.v = sim.v0;
    body.alpha = sim.alpha0;
    body.omega = sim.omega0;
    return body;
}

double Scenario::effective_mu() const {
    return object.friction_override.value_or(contact.mu);
}

Scenario parse_scenario(const std::string& json_text) {
    json root_node = json::parse(json_text, nullptr, false);
    if (root_node.is_discarded()) {
        fail(ErrorCode::parse, "scenario is not valid JSON");
    }
    Section root(root_node, "scenario");

    Scenario scenario;
    scenario.schema_version = root.integer("schema_version");
    if (root.has("name")) scenario.name = root.text("name");

    scenario.object = parse_object(root.get("object"));
    const json* stiffness = root.has("stiffness_profile") ? &root.get("stiffness_profile")
                                                          : nullptr;
    scenario.gripper = parse_gripper(root.get("gripper"), stiffness);
    const json* contact = root.has("contact") ? &root.get("contact") : nullptr;
    scenario.contact = parse_contact(contact, scenario.gripper);
    scenario.schedule = parse_schedule(root.get("schedule"), scenario.gripper);
    scenario.sim = parse_simulation(root.get("simulation"));
    root.finish();

    scenario.validate();
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string serialize_scenario(const Scenario& scenario) {
    json root;
    root["schema_version"] = scenario.schema_version;
    if (!scenario.name.empty()) root["name"] = scenario.name;

    json object;
    object["shape"] = to_string(scenario.object.shape);
    object["mass_kg"] = scenario.object.mass;
    if (scenario.object.length > 0.0) object["length_m"] = scenario.object.length;
    if (scenario.object.radius) object["radius_m"] = *scenario.object.radius;
    if (!scenario.object.inertia_auto) object["inertia_kgm2"] = scenario.object.inertia;
    if (scenario.object.friction_override) {
        object["friction_override"] = *scenario.object.friction_override;
    }
    root["object"] = object;

    json gripper;
    gripper["gap_m"] = scenario.gripper.gap;
    gripper["finger_height_m"] = scenario.gripper.finger_height;
    gripper["mu_bo"] = scenario.gripper.mu_bo;
    gripper["tau_m_Nm"] = scenario.gripper.tau_m;
    gripper["lever_arm_m"] = scenario.gripper.lever_arm;
    gripper["belt_speed_limit_mps"] = scenario.gripper.belt_speed_limit;
    if (scenario.gripper.pulley_radius) {
        gripper["pulley_radius_m"] = *scenario.gripper.pulley_radius;
    }
    root["gripper"] = gripper;

    json contact;
    contact["mu_bo"] = scenario.contact.mu;
    contact["v_eps_mps"] = scenario.contact.v_eps;
    root["contact"] = contact;

    json stiffness;
    stiffness["angles_deg"] = scenario.gripper.stiffness.angles_deg;
    stiffness["heights_m"] = scenario.gripper.stiffness.heights;
    stiffness["k_N_per_mm"] = scenario.gripper.stiffness.k;
    root["stiffness_profile"] = stiffness;

    json schedule = json::array();
    for (const auto& seg : scenario.schedule.segments) {
        json entry;
        entry["duration_s"] = seg.duration;
        entry["v_left_mps"] = seg.v_left;
        entry["v_right_mps"] = seg.v_right;
        schedule.push_back(entry);
    }
    root["schedule"] = schedule;

    json sim;
    sim["x0_m"] = scenario.sim.x0;
    sim["v0_mps"] = scenario.sim.v0;
    sim["alpha0_rad"] = scenario.sim.alpha0;
    sim["omega0_radps"] = scenario.sim.omega0;
    sim["dt_s"] = scenario.sim.dt;
    sim["t_end_s"] = scenario.sim.t_end;
    sim["decimation"] = scenario.sim.decimation;
    root["simulation"] = sim;

    return root.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::io, "cannot write scenario file: " + path);
    out << serialize_scenario(scenario);
    if (!out) fail(ErrorCode::io, "write failed: " + path);
}

Trajectory simulate(const Scenario& scenario) {
    scenario.validate();
    ContactParams params = scenario.contact;
    params.mu = scenario.effective_mu();
    return simulate(scenario.initial_state(), scenario.schedule, scenario.object,
                    scenario.gripper, params, scenario.sim.dt, scenario.sim.t_end,
                    scenario.sim.decimation);
}

}  // namespace beltsim
