#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sim/config.hpp"
#include "sim/math.hpp"
#include "sim/mesh.hpp"

namespace sim {

struct SceneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row-major heightfield over a regular grid, bilinear between nodes.
struct Terrain {
    uint32_t rows = 0;  // node count along y
    uint32_t cols = 0;  // node count along x
    float cell_size = 1.0f;
    double origin_x = 0.0, origin_y = 0.0;
    std::vector<float> heights;  // rows * cols, row-major

    float at(uint32_t row, uint32_t col) const { return heights[size_t(row) * cols + col]; }
    double extent_x() const { return double(cols - 1) * cell_size; }
    double extent_y() const { return double(rows - 1) * cell_size; }
    bool in_footprint(double x, double y) const {
        return x >= origin_x && y >= origin_y && x <= origin_x + extent_x() &&
               y <= origin_y + extent_y();
    }
};

// Bilinear height lookup. Throws SceneError outside the grid footprint.
double terrain_height(const Terrain& terrain, double x, double y);

// Binary DEM file: magic "DEM1", u32 rows, u32 cols, f32 cell_size,
// f64 origin_x, f64 origin_y, rows*cols f32 heights row-major, little-endian.
Terrain load_dem(const std::string& path);
void save_dem(const Terrain& terrain, const std::string& path);

enum class Archetype : uint8_t { trunk = 0, canopy, bush, rock, grass_patch };

const char* archetype_name(Archetype a);

struct FloraInstance {
    Archetype archetype_id = Archetype::trunk;
    Vec3 position;        // on the terrain surface
    double yaw = 0.0;     // [0, 2pi)
    double scale = 1.0;   // [0.8, 1.25]
    double sway_phase = 0.0;
    double sway_gain = 0.0;       // 0 for rock/trunk
    double color_jitter = 1.0;    // per-instance brightness factor
};

struct WindParams {
    Vec3 mean_velocity;             // m/s
    double turbulence_intensity = 0.0;  // OU stationary sigma, m/s
    double correlation_time = 1.5;      // s
    uint64_t gust_seed = 0;
};

// Sway constants: displacement = gain * k * |wind| * sin(omega*t + phase),
// clamped to +-cap, along the horizontal wind direction.
struct SwayParams {
    double k = 0.02;      // meters per (m/s)
    double omega = 1.3;   // rad/s
    double cap = 0.5;     // meters
};

struct SceneConfig {
    double area_min_x = -20.0, area_max_x = 20.0;
    double area_min_y = -20.0, area_max_y = 20.0;
    uint32_t terrain_rows = 49, terrain_cols = 49;
    double cell_size = 1.0;
    double terrain_roughness = 0.0;   // height amplitude, meters
    double terrain_noise_scale = 8.0; // noise feature size, meters
    uint32_t tree_count = 40;
    uint32_t bush_count = 20;
    uint32_t rock_count = 12;
    uint32_t grass_count = 60;
    WindParams wind;
    SwayParams sway;

    static SceneConfig from_config(const Config& cfg, const std::string& section = "scene");
    void validate() const;
};

// Per-canopy bounding sphere in world space (undisplaced); shade tests and
// ray-cast culling use these.
struct CanopySphere {
    Vec3 center;
    double radius = 0.0;
    uint32_t flora_index = 0;
};

struct Scene {
    uint64_t seed = 0;
    SceneConfig config;
    Terrain terrain;
    std::vector<FloraInstance> flora;
    WindParams wind;
    SwayParams sway;
    Aabb bounds;
    std::vector<CanopySphere> canopy_spheres;
};

// Deterministic procedural build; pure function of (seed, config).
Scene build_scene(uint64_t seed, const SceneConfig& config);

// Archetype geometry: one mesh per archetype, origin at ground level.
// `rock_seed` feeds the rock deformation only.
const TriMesh& archetype_mesh(Archetype a);

// Canopy foliage sphere parameters at scale 1 (center height, radius).
struct CanopyShape {
    double center_height;
    double radius;
};
CanopyShape canopy_shape();

struct WindState {
    Vec3 velocity;  // instantaneous wind, m/s
};

// Horizontal sway displacement of one instance at time t.
Vec3 wind_displacement(const FloraInstance& instance, const WindState& wind, double t,
                       const SwayParams& sway);

}  // namespace sim
