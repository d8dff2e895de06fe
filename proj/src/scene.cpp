#include "sim/scene.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "sim/binio.hpp"
#include "sim/rng.hpp"

namespace sim {

namespace {

// Lattice value noise with quintic fade; integer lattice hashed from the seed
// so the field is a pure function of (seed, x, y).
double lattice_value(uint64_t seed, int64_t ix, int64_t iy) {
    uint64_t s = seed ^ (uint64_t(ix) * 0x9e3779b97f4a7c15ull) ^
                 (uint64_t(iy) * 0xc2b2ae3d27d4eb4full);
    uint64_t h = splitmix64(s);
    return double(h >> 11) * 0x1.0p-53;  // [0, 1)
}

double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }

double value_noise(uint64_t seed, double x, double y) {
    double fx = std::floor(x), fy = std::floor(y);
    int64_t ix = int64_t(fx), iy = int64_t(fy);
    double tx = fade(x - fx), ty = fade(y - fy);
    double v00 = lattice_value(seed, ix, iy);
    double v10 = lattice_value(seed, ix + 1, iy);
    double v01 = lattice_value(seed, ix, iy + 1);
    double v11 = lattice_value(seed, ix + 1, iy + 1);
    double a = v00 + (v10 - v00) * tx;
    double b = v01 + (v11 - v01) * tx;
    return a + (b - a) * ty;  // [0, 1)
}

constexpr double kTwoPi = 2.0 * M_PI;

struct ArchetypeSpec {
    double sway_gain;
    uint32_t SceneConfig::*count;
};

}  // namespace

const char* archetype_name(Archetype a) {
    switch (a) {
        case Archetype::trunk: return "trunk";
        case Archetype::canopy: return "canopy";
        case Archetype::bush: return "bush";
        case Archetype::rock: return "rock";
        case Archetype::grass_patch: return "grass_patch";
    }
    return "?";
}

double terrain_height(const Terrain& terrain, double x, double y) {
    if (terrain.rows < 2 || terrain.cols < 2) throw SceneError("terrain grid is degenerate");
    if (!terrain.in_footprint(x, y))
        throw SceneError("terrain_height: query outside grid footprint");
    double gx = (x - terrain.origin_x) / terrain.cell_size;
    double gy = (y - terrain.origin_y) / terrain.cell_size;
    uint32_t cx = uint32_t(std::min(double(terrain.cols - 2), std::floor(gx)));
    uint32_t cy = uint32_t(std::min(double(terrain.rows - 2), std::floor(gy)));
    double tx = gx - cx, ty = gy - cy;
    double h00 = terrain.at(cy, cx), h10 = terrain.at(cy, cx + 1);
    double h01 = terrain.at(cy + 1, cx), h11 = terrain.at(cy + 1, cx + 1);
    double a = h00 + (h10 - h00) * tx;
    double b = h01 + (h11 - h01) * tx;
    return a + (b - a) * ty;
}

Terrain load_dem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SceneError("cannot open DEM file: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    ByteReader r(bytes.data(), bytes.size());
    std::string magic = r.bytes(4);
    if (!r.ok || magic != "DEM1") throw SceneError("bad DEM magic in " + path);
    Terrain t;
    t.rows = r.u32();
    t.cols = r.u32();
    t.cell_size = r.f32();
    t.origin_x = r.f64();
    t.origin_y = r.f64();
    if (!r.ok || t.rows < 2 || t.cols < 2 || !(t.cell_size > 0.0f))
        throw SceneError("bad DEM header in " + path);
    size_t n = size_t(t.rows) * t.cols;
    if (r.remaining() != n * 4) throw SceneError("DEM payload size mismatch in " + path);
    t.heights.resize(n);
    for (size_t i = 0; i < n; ++i) {
        float h = r.f32();
        if (!std::isfinite(h)) throw SceneError("non-finite height in " + path);
        t.heights[i] = h;
    }
    return t;
}

void save_dem(const Terrain& terrain, const std::string& path) {
    std::vector<uint8_t> b;
    b.insert(b.end(), {'D', 'E', 'M', '1'});
    put_u32(b, terrain.rows);
    put_u32(b, terrain.cols);
    put_f32(b, terrain.cell_size);
    put_f64(b, terrain.origin_x);
    put_f64(b, terrain.origin_y);
    for (float h : terrain.heights) put_f32(b, h);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw SceneError("cannot write DEM file: " + path);
    out.write(reinterpret_cast<const char*>(b.data()), std::streamsize(b.size()));
}

SceneConfig SceneConfig::from_config(const Config& cfg, const std::string& section) {
    static const std::set<std::string> allowed = {
        "area_min_x", "area_max_x", "area_min_y", "area_max_y",
        "terrain_rows", "terrain_cols", "cell_size",
        "terrain_roughness", "terrain_noise_scale",
        "tree_count", "bush_count", "rock_count", "grass_count",
        "wind_mean", "turbulence", "correlation_time", "gust_seed",
        "sway_k", "sway_omega", "sway_cap"};
    cfg.require_known_keys(section, allowed);
    SceneConfig c;
    c.area_min_x = cfg.get_double(section, "area_min_x", c.area_min_x);
    c.area_max_x = cfg.get_double(section, "area_max_x", c.area_max_x);
    c.area_min_y = cfg.get_double(section, "area_min_y", c.area_min_y);
    c.area_max_y = cfg.get_double(section, "area_max_y", c.area_max_y);
    c.terrain_rows = uint32_t(cfg.get_int(section, "terrain_rows", c.terrain_rows));
    c.terrain_cols = uint32_t(cfg.get_int(section, "terrain_cols", c.terrain_cols));
    c.cell_size = cfg.get_double(section, "cell_size", c.cell_size);
    c.terrain_roughness = cfg.get_double(section, "terrain_roughness", c.terrain_roughness);
    c.terrain_noise_scale = cfg.get_double(section, "terrain_noise_scale", c.terrain_noise_scale);
    c.tree_count = uint32_t(cfg.get_int(section, "tree_count", c.tree_count));
    c.bush_count = uint32_t(cfg.get_int(section, "bush_count", c.bush_count));
    c.rock_count = uint32_t(cfg.get_int(section, "rock_count", c.rock_count));
    c.grass_count = uint32_t(cfg.get_int(section, "grass_count", c.grass_count));
    if (cfg.has(section, "wind_mean")) {
        auto v = cfg.get_doubles(section, "wind_mean");
        if (v.size() != 3) throw ConfigError("wind_mean needs 3 components");
        c.wind.mean_velocity = {v[0], v[1], v[2]};
    }
    c.wind.turbulence_intensity = cfg.get_double(section, "turbulence", c.wind.turbulence_intensity);
    c.wind.correlation_time = cfg.get_double(section, "correlation_time", c.wind.correlation_time);
    c.wind.gust_seed = cfg.get_u64(section, "gust_seed", c.wind.gust_seed);
    c.sway.k = cfg.get_double(section, "sway_k", c.sway.k);
    c.sway.omega = cfg.get_double(section, "sway_omega", c.sway.omega);
    c.sway.cap = cfg.get_double(section, "sway_cap", c.sway.cap);
    c.validate();
    return c;
}

void SceneConfig::validate() const {
    if (!(area_max_x > area_min_x) || !(area_max_y > area_min_y))
        throw SceneError("scene area extents must be positive");
    if (!(cell_size > 0.0)) throw SceneError("cell_size must be > 0");
    if (terrain_rows < 2 || terrain_cols < 2) throw SceneError("terrain grid needs >= 2x2 nodes");
    if (terrain_roughness < 0.0) throw SceneError("terrain_roughness must be >= 0");
    if (wind.turbulence_intensity < 0.0) throw SceneError("turbulence must be >= 0");
    if (!(wind.correlation_time > 0.0)) throw SceneError("correlation_time must be > 0");
    if (sway.cap < 0.0) throw SceneError("sway_cap must be >= 0");
}

const TriMesh& archetype_mesh(Archetype a) {
    // Single fixed mesh per archetype; built once.
    static const TriMesh trunk = mesh::tapered_cylinder(0.35, 0.18, 9.0, 16);
    static const TriMesh canopy =
        mesh::translated(mesh::icosphere(canopy_shape().radius, 1),
                         {0, 0, canopy_shape().center_height});
    static const TriMesh bush =
        mesh::translated(mesh::icosphere(0.9, 1), {0, 0, 0.8});
    static const TriMesh rock = mesh::translated(
        mesh::deformed_icosphere(0.55, 0x9c0ffeeull, 0.35), {0, 0, 0.35});
    static const TriMesh grass = mesh::crossed_quads(1.1, 0.8);
    switch (a) {
        case Archetype::trunk: return trunk;
        case Archetype::canopy: return canopy;
        case Archetype::bush: return bush;
        case Archetype::rock: return rock;
        case Archetype::grass_patch: return grass;
    }
    return trunk;
}

CanopyShape canopy_shape() { return {10.5, 3.5}; }

Scene build_scene(uint64_t seed, const SceneConfig& config) {
    config.validate();
    Scene scene;
    scene.seed = seed;
    scene.config = config;
    scene.wind = config.wind;
    scene.sway = config.sway;

    // Terrain centered on the configured area.
    Terrain& t = scene.terrain;
    t.rows = config.terrain_rows;
    t.cols = config.terrain_cols;
    t.cell_size = float(config.cell_size);
    double cx = 0.5 * (config.area_min_x + config.area_max_x);
    double cy = 0.5 * (config.area_min_y + config.area_max_y);
    t.origin_x = cx - 0.5 * t.extent_x();
    t.origin_y = cy - 0.5 * t.extent_y();
    t.heights.resize(size_t(t.rows) * t.cols);
    uint64_t terrain_seed = derive_seed(seed, 0);
    for (uint32_t r = 0; r < t.rows; ++r) {
        for (uint32_t c = 0; c < t.cols; ++c) {
            double h = 0.0;
            if (config.terrain_roughness > 0.0) {
                double x = (t.origin_x + c * config.cell_size) / config.terrain_noise_scale;
                double y = (t.origin_y + r * config.cell_size) / config.terrain_noise_scale;
                double n = value_noise(terrain_seed, x, y) +
                           0.5 * value_noise(terrain_seed ^ 0xabcdu, x * 2.0, y * 2.0);
                h = config.terrain_roughness * (n / 1.5 - 0.5);
            }
            t.heights[size_t(r) * t.cols + c] = float(h);
        }
    }

    // Flora footprint: configured area clipped to the terrain grid.
    double fx0 = std::max(config.area_min_x, t.origin_x);
    double fx1 = std::min(config.area_max_x, t.origin_x + t.extent_x());
    double fy0 = std::max(config.area_min_y, t.origin_y);
    double fy1 = std::min(config.area_max_y, t.origin_y + t.extent_y());
    if (!(fx1 > fx0) || !(fy1 > fy0))
        throw SceneError("flora area does not overlap the terrain footprint");

    auto place = [&](Archetype a, uint32_t count, double sway_gain, uint64_t tag) {
        Rng rng(derive_seed(seed, tag));
        for (uint32_t i = 0; i < count; ++i) {
            FloraInstance inst;
            inst.archetype_id = a;
            double x = rng.uniform(fx0, fx1);
            double y = rng.uniform(fy0, fy1);
            inst.position = {x, y, terrain_height(t, x, y)};
            inst.yaw = rng.uniform() * kTwoPi;
            inst.scale = std::exp(rng.uniform(-1.0, 1.0) * std::log(1.25));
            inst.sway_phase = rng.uniform() * kTwoPi;
            inst.sway_gain = sway_gain;
            inst.color_jitter = rng.uniform(0.85, 1.10);
            scene.flora.push_back(inst);
        }
    };

    // A tree is a trunk and a canopy at the same spot: canopy sways, trunk
    // does not.
    {
        Rng rng(derive_seed(seed, 1));
        for (uint32_t i = 0; i < config.tree_count; ++i) {
            double x = rng.uniform(fx0, fx1);
            double y = rng.uniform(fy0, fy1);
            double z = terrain_height(t, x, y);
            double yaw = rng.uniform() * kTwoPi;
            double s = std::exp(rng.uniform(-1.0, 1.0) * std::log(1.25));
            double phase = rng.uniform() * kTwoPi;
            double cj_trunk = rng.uniform(0.85, 1.10);
            double cj_canopy = rng.uniform(0.85, 1.10);
            scene.flora.push_back({Archetype::trunk, {x, y, z}, yaw, s, phase, 0.0, cj_trunk});
            scene.flora.push_back({Archetype::canopy, {x, y, z}, yaw, s, phase, 1.0, cj_canopy});
        }
    }
    place(Archetype::bush, config.bush_count, 0.7, 2);
    place(Archetype::rock, config.rock_count, 0.0, 3);
    place(Archetype::grass_patch, config.grass_count, 1.3, 4);

    for (uint32_t i = 0; i < scene.flora.size(); ++i) {
        const FloraInstance& f = scene.flora[i];
        if (f.archetype_id != Archetype::canopy) continue;
        CanopyShape cs = canopy_shape();
        scene.canopy_spheres.push_back(
            {f.position + Vec3{0, 0, cs.center_height * f.scale}, cs.radius * f.scale, i});
    }

    // Bounds: terrain footprint, heights, and flora tops.
    float hmin = t.heights[0], hmax = t.heights[0];
    for (float h : t.heights) { hmin = std::min(hmin, h); hmax = std::max(hmax, h); }
    scene.bounds.extend({t.origin_x, t.origin_y, double(hmin)});
    scene.bounds.extend({t.origin_x + t.extent_x(), t.origin_y + t.extent_y(), double(hmax)});
    for (const auto& f : scene.flora)
        scene.bounds.extend(f.position + Vec3{0, 0, 14.0 * f.scale + 1.0});
    return scene;
}

Vec3 wind_displacement(const FloraInstance& instance, const WindState& wind, double t,
                       const SwayParams& sway) {
    if (instance.sway_gain <= 0.0) return {};
    Vec3 h{wind.velocity.x, wind.velocity.y, 0.0};
    double hn = h.norm();
    if (hn < 1e-12) return {};
    double mag = instance.sway_gain * sway.k * wind.velocity.norm() *
                 std::sin(sway.omega * t + instance.sway_phase);
    mag = clamp(mag, -sway.cap, sway.cap);
    return h * (mag / hn);
}

}  // namespace sim
