#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sim/math.hpp"

namespace sim {

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;

    void add_tri(uint32_t a, uint32_t b, uint32_t c) { triangles.push_back({a, b, c}); }
};

// Archetype meshes are authored in meters at scale 1 with the local origin at
// ground level and +z up. Each archetype owns exactly one mesh; there is no
// distance-dependent variant to swap in.
namespace mesh {

// Tapered 16-face open cylinder: base radius -> top radius over [0, height].
TriMesh tapered_cylinder(double base_radius, double top_radius, double height, int faces = 16);

// Icosphere with polar vertices on the local z axis. level 0 = icosahedron.
TriMesh icosphere(double radius, int level = 1);

// Icosphere with per-vertex radial jitter (seeded); used for rocks.
TriMesh deformed_icosphere(double radius, uint64_t seed, double jitter = 0.3);

// Two vertical quads crossed at 90 degrees.
TriMesh crossed_quads(double width, double height);

// Quadrotor silhouette: center box, four arms, rotor disks, nose fin. The fin
// makes the outline front/back asymmetric on purpose.
TriMesh quadrotor(double arm_length = 0.25);

// Offset every vertex.
TriMesh translated(TriMesh m, const Vec3& offset);

}  // namespace mesh
}  // namespace sim
