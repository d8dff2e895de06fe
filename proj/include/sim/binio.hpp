#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace sim {

// Little-endian primitive append/read over byte buffers. All wire and file
// formats in this project are little-endian with fixed-width types.

inline void put_u8(std::vector<uint8_t>& b, uint8_t v) { b.push_back(v); }

inline void put_u16(std::vector<uint8_t>& b, uint16_t v) {
    b.push_back(uint8_t(v & 0xff));
    b.push_back(uint8_t(v >> 8));
}

inline void put_u32(std::vector<uint8_t>& b, uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(uint8_t(v >> (8 * i)));
}

inline void put_u64(std::vector<uint8_t>& b, uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(uint8_t(v >> (8 * i)));
}

inline void put_f32(std::vector<uint8_t>& b, float v) {
    uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(b, bits);
}

inline void put_f64(std::vector<uint8_t>& b, double v) {
    uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(b, bits);
}

// Bounds-checked cursor over a byte span; `ok` latches false on underrun.
struct ByteReader {
    const uint8_t* data = nullptr;
    size_t size = 0;
    size_t pos = 0;
    bool ok = true;

    ByteReader(const uint8_t* d, size_t n) : data(d), size(n) {}

    bool take(size_t n) {
        if (!ok || pos + n > size) { ok = false; return false; }
        return true;
    }
    uint8_t u8() {
        if (!take(1)) return 0;
        return data[pos++];
    }
    uint16_t u16() {
        if (!take(2)) return 0;
        uint16_t v = uint16_t(data[pos]) | uint16_t(data[pos + 1]) << 8;
        pos += 2;
        return v;
    }
    uint32_t u32() {
        if (!take(4)) return 0;
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= uint32_t(data[pos + i]) << (8 * i);
        pos += 4;
        return v;
    }
    uint64_t u64() {
        if (!take(8)) return 0;
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= uint64_t(data[pos + i]) << (8 * i);
        pos += 8;
        return v;
    }
    float f32() {
        uint32_t bits = u32();
        float v;
        std::memcpy(&v, &bits, 4);
        return v;
    }
    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    std::string bytes(size_t n) {
        if (!take(n)) return {};
        std::string s(reinterpret_cast<const char*>(data + pos), n);
        pos += n;
        return s;
    }
    size_t remaining() const { return ok ? size - pos : 0; }
};

}  // namespace sim
