#pragma once

#include <cstdint>
#include <stdexcept>

#include "sim/math.hpp"

namespace sim {

// Camera frame: right-handed, looks along -Z, +X right, +Y up.
// mount_offset is the camera pose expressed in the owner body frame
// (body frame: +X forward, +Y left, +Z up).
struct CameraSpec {
    uint32_t camera_id = 0;
    uint32_t owner_body = 0;
    uint16_t width = 320;
    uint16_t height = 240;
    double hfov = 1.0471975511965976;  // 60 deg
    double near_clip = 0.1;
    double far_clip = 500.0;
    Transform mount_offset;  // camera -> body

    void validate() const {
        if (width < 16 || height < 16) throw std::invalid_argument("camera: width/height >= 16");
        if (!(near_clip > 0.0) || !(far_clip > near_clip))
            throw std::invalid_argument("camera: need 0 < near < far");
        if (!(hfov > 0.0) || !(hfov < M_PI)) throw std::invalid_argument("camera: need 0 < hfov < pi");
    }

    double focal_px() const { return (double(width) * 0.5) / std::tan(hfov * 0.5); }

    // Camera looking along body +X (forward), image up = body +Z.
    // Camera axes in body coordinates: camX=(0,-1,0) camY=(0,0,1) camZ=(-1,0,0).
    static Transform forward_mount() { return {Quat{0.5, 0.5, -0.5, -0.5}, {0, 0, 0}}; }

    // Camera looking along body -Z (straight down), image up = body +X.
    // Camera axes in body coordinates: camX=(0,-1,0) camY=(1,0,0) camZ=(0,0,1).
    static Transform down_mount() {
        double s = std::sqrt(0.5);
        return {Quat{s, 0, 0, -s}, {0, 0, 0}};
    }
};

}  // namespace sim
