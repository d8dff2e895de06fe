#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace sim {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const {
        double n = norm();
        return n > 0.0 ? *this / n : Vec3{};
    }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Unit quaternion, scalar-first (w, x, y, z). Rotates body-frame vectors into world frame.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quat identity() { return {}; }

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        Vec3 a = axis.normalized();
        double h = 0.5 * angle;
        double s = std::sin(h);
        return {std::cos(h), a.x * s, a.y * s, a.z * s};
    }

    static Quat yaw(double angle) { return from_axis_angle({0, 0, 1}, angle); }

    // Shortest-arc rotation taking unit vector `from` to unit vector `to`.
    static Quat between(const Vec3& from, const Vec3& to) {
        double d = from.dot(to);
        Vec3 c = from.cross(to);
        double s2 = c.norm2();
        if (s2 < 1e-24) {
            if (d > 0.0) return identity();
            // Antiparallel: rotate pi about any axis orthogonal to `from`.
            Vec3 axis = std::fabs(from.x) < 0.9 ? from.cross(Vec3{1, 0, 0}) : from.cross(Vec3{0, 1, 0});
            return from_axis_angle(axis, M_PI);
        }
        Quat q{1.0 + d, c.x, c.y, c.z};
        return q.normalized();
    }

    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z,
                w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x,
                w * o.z + x * o.y - y * o.x + z * o.w};
    }

    Quat conj() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

    Quat normalized() const {
        double n = norm();
        if (n <= 0.0) return identity();
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        // q v q* expanded: v + 2 u x (u x v + w v), u = (x,y,z)
        Vec3 u{x, y, z};
        Vec3 t = u.cross(v) * 2.0;
        return v + t * w + u.cross(t);
    }

    bool finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    Quat slerp(const Quat& to, double t) const {
        Quat b = to;
        double d = w * b.w + x * b.x + y * b.y + z * b.z;
        if (d < 0.0) { b = {-b.w, -b.x, -b.y, -b.z}; d = -d; }
        if (d > 0.9995) {
            Quat r{w + t * (b.w - w), x + t * (b.x - x), y + t * (b.y - y), z + t * (b.z - z)};
            return r.normalized();
        }
        double th = std::acos(std::min(1.0, d));
        double sa = std::sin(th);
        double wa = std::sin((1.0 - t) * th) / sa;
        double wb = std::sin(t * th) / sa;
        return Quat{wa * w + wb * b.w, wa * x + wb * b.x, wa * y + wb * b.y, wa * z + wb * b.z}
            .normalized();
    }
};

struct Pose6DOF {
    Vec3 position;
    Quat orientation;

    bool finite() const { return position.finite() && orientation.finite(); }
};

// Rigid transform: rotate then translate.
struct Transform {
    Quat rotation;
    Vec3 translation;

    Vec3 apply(const Vec3& p) const { return rotation.rotate(p) + translation; }
    Transform compose(const Transform& inner) const {
        return {rotation * inner.rotation, rotation.rotate(inner.translation) + translation};
    }
};

struct Aabb {
    Vec3 min{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
             std::numeric_limits<double>::max()};
    Vec3 max{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
             std::numeric_limits<double>::lowest()};

    void extend(const Vec3& p) {
        min.x = std::min(min.x, p.x); min.y = std::min(min.y, p.y); min.z = std::min(min.z, p.z);
        max.x = std::max(max.x, p.x); max.y = std::max(max.y, p.y); max.z = std::max(max.z, p.z);
    }
};

constexpr double kGravity = 9.81;  // m/s^2

inline double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

}  // namespace sim
