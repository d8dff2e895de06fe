#include "sim/mesh.hpp"

#include <cmath>
#include <map>

#include "sim/rng.hpp"

namespace sim {
namespace mesh {

TriMesh tapered_cylinder(double base_radius, double top_radius, double height, int faces) {
    TriMesh m;
    for (int i = 0; i < faces; ++i) {
        double a = 2.0 * M_PI * double(i) / double(faces);
        double c = std::cos(a), s = std::sin(a);
        m.vertices.push_back({base_radius * c, base_radius * s, 0.0});
        m.vertices.push_back({top_radius * c, top_radius * s, height});
    }
    for (int i = 0; i < faces; ++i) {
        uint32_t b0 = uint32_t(2 * i);
        uint32_t t0 = b0 + 1;
        uint32_t b1 = uint32_t(2 * ((i + 1) % faces));
        uint32_t t1 = b1 + 1;
        m.add_tri(b0, b1, t1);
        m.add_tri(b0, t1, t0);
    }
    // top cap fan
    uint32_t apex = uint32_t(m.vertices.size());
    m.vertices.push_back({0.0, 0.0, height});
    for (int i = 0; i < faces; ++i) {
        uint32_t t0 = uint32_t(2 * i + 1);
        uint32_t t1 = uint32_t(2 * ((i + 1) % faces) + 1);
        m.add_tri(t0, t1, apex);
    }
    return m;
}

// Pole-aligned icosahedron: vertices at +-z and two latitude rings. Keeping
// exact polar vertices lets a vertical ray meet the sphere surface at exactly
// one mesh vertex, which the geometric oracles rely on.
TriMesh icosphere(double radius, int level) {
    TriMesh m;
    m.vertices.push_back({0, 0, 1});
    double lat = std::atan(0.5);
    for (int ring = 0; ring < 2; ++ring) {
        double z = ring == 0 ? std::sin(lat) : -std::sin(lat);
        double r = std::cos(lat);
        double off = ring == 0 ? 0.0 : M_PI / 5.0;
        for (int i = 0; i < 5; ++i) {
            double a = 2.0 * M_PI * double(i) / 5.0 + off;
            m.vertices.push_back({r * std::cos(a), r * std::sin(a), z});
        }
    }
    m.vertices.push_back({0, 0, -1});
    for (int i = 0; i < 5; ++i) {
        uint32_t a = uint32_t(1 + i), b = uint32_t(1 + (i + 1) % 5);
        uint32_t c = uint32_t(6 + i), d = uint32_t(6 + (i + 1) % 5);
        m.add_tri(0, a, b);
        m.add_tri(a, c, d);
        m.add_tri(a, d, b);
        m.add_tri(11, d, c);
    }
    for (int l = 0; l < level; ++l) {
        TriMesh next;
        next.vertices = m.vertices;
        std::map<std::pair<uint32_t, uint32_t>, uint32_t> midpoint;
        auto mid = [&](uint32_t a, uint32_t b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            Vec3 p = ((next.vertices[a] + next.vertices[b]) * 0.5).normalized();
            uint32_t idx = uint32_t(next.vertices.size());
            next.vertices.push_back(p);
            midpoint.emplace(key, idx);
            return idx;
        };
        for (auto& t : m.triangles) {
            uint32_t ab = mid(t[0], t[1]), bc = mid(t[1], t[2]), ca = mid(t[2], t[0]);
            next.add_tri(t[0], ab, ca);
            next.add_tri(t[1], bc, ab);
            next.add_tri(t[2], ca, bc);
        }
        m = std::move(next);
    }
    for (auto& v : m.vertices) v *= radius;
    return m;
}

TriMesh deformed_icosphere(double radius, uint64_t seed, double jitter) {
    TriMesh m = icosphere(1.0, 1);
    Rng rng(seed);
    for (auto& v : m.vertices) {
        double f = 1.0 + jitter * (rng.uniform() - 0.5);
        v *= radius * f;
    }
    return m;
}

TriMesh crossed_quads(double width, double height) {
    TriMesh m;
    double hw = width * 0.5;
    auto quad = [&](Vec3 a, Vec3 b, Vec3 c, Vec3 d) {
        uint32_t base = uint32_t(m.vertices.size());
        m.vertices.push_back(a);
        m.vertices.push_back(b);
        m.vertices.push_back(c);
        m.vertices.push_back(d);
        m.add_tri(base, base + 1, base + 2);
        m.add_tri(base, base + 2, base + 3);
    };
    quad({-hw, 0, 0}, {hw, 0, 0}, {hw, 0, height}, {-hw, 0, height});
    quad({0, -hw, 0}, {0, hw, 0}, {0, hw, height}, {0, -hw, height});
    return m;
}

namespace {

void add_box(TriMesh& m, const Vec3& center, const Vec3& half) {
    uint32_t base = uint32_t(m.vertices.size());
    for (int i = 0; i < 8; ++i) {
        m.vertices.push_back({center.x + (i & 1 ? half.x : -half.x),
                              center.y + (i & 2 ? half.y : -half.y),
                              center.z + (i & 4 ? half.z : -half.z)});
    }
    static const int faces[6][4] = {{0, 1, 3, 2}, {4, 6, 7, 5}, {0, 4, 5, 1},
                                    {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 5, 7, 3}};
    for (auto& f : faces) {
        m.add_tri(base + f[0], base + f[1], base + f[2]);
        m.add_tri(base + f[0], base + f[2], base + f[3]);
    }
}

void add_disk(TriMesh& m, const Vec3& center, double radius, int faces = 8) {
    uint32_t c = uint32_t(m.vertices.size());
    m.vertices.push_back(center);
    uint32_t first = uint32_t(m.vertices.size());
    for (int i = 0; i < faces; ++i) {
        double a = 2.0 * M_PI * double(i) / double(faces);
        m.vertices.push_back({center.x + radius * std::cos(a),
                              center.y + radius * std::sin(a), center.z});
    }
    for (int i = 0; i < faces; ++i) {
        m.add_tri(c, first + uint32_t(i), first + uint32_t((i + 1) % faces));
    }
}

}  // namespace

TriMesh quadrotor(double arm_length) {
    TriMesh m;
    double z = 0.0;
    add_box(m, {0, 0, z}, {0.12, 0.08, 0.04});
    // nose fin, front only
    add_box(m, {0.17, 0, z + 0.05}, {0.05, 0.012, 0.05});
    double d = arm_length * 0.70710678118654752;
    const Vec3 rotors[4] = {{d, d, z}, {-d, d, z}, {-d, -d, z}, {d, -d, z}};
    for (auto& r : rotors) {
        Vec3 dir = Vec3{r.x, r.y, 0}.normalized();
        add_box(m, r * 0.5, {std::fabs(dir.x) * arm_length * 0.5 + 0.01,
                             std::fabs(dir.y) * arm_length * 0.5 + 0.01, 0.012});
        add_disk(m, {r.x, r.y, z + 0.03}, 0.11);
    }
    return m;
}

TriMesh translated(TriMesh m, const Vec3& offset) {
    for (auto& v : m.vertices) v += offset;
    return m;
}

}  // namespace mesh
}  // namespace sim
