#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace evac {

// Grid cell coordinate. x is the column, y is the row; (0,0) is the top-left
// cell of a map document and y grows downward.
struct Coord {
    int x = 0;
    int y = 0;

    friend bool operator==(const Coord& a, const Coord& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Coord& a, const Coord& b) { return !(a == b); }
    friend bool operator<(const Coord& a, const Coord& b)
    {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

struct CoordHash {
    std::size_t operator()(const Coord& c) const
    {
        return std::hash<std::int64_t>()((static_cast<std::int64_t>(c.y) << 32) ^
                                         static_cast<std::uint32_t>(c.x));
    }
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline std::string to_string(const Coord& c)
{
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

inline double euclidean(const Coord& a, const Coord& b)
{
    const double dx = static_cast<double>(a.x - b.x);
    const double dy = static_cast<double>(a.y - b.y);
    return std::sqrt(dx * dx + dy * dy);
}

inline int manhattan(const Coord& a, const Coord& b)
{
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

// Wraps an angle into [-pi, pi].
inline double wrap_angle(double a)
{
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a < -M_PI) a += 2.0 * M_PI;
    return a;
}

// Nearest integer with ties rounded toward zero: 0.5 -> 0, -0.5 -> 0, 0.7 -> 1.
inline int round_ties_to_zero(double v)
{
    const double mag = std::abs(v);
    const double fl = std::floor(mag);
    const int m = (mag - fl > 0.5) ? static_cast<int>(fl) + 1 : static_cast<int>(fl);
    return v < 0.0 ? -m : m;
}

// Cells on the discrete segment from a to b (inclusive), in traversal order.
inline std::vector<Coord> bresenham_line(const Coord& a, const Coord& b)
{
    std::vector<Coord> cells;
    int x0 = a.x, y0 = a.y;
    const int x1 = b.x, y1 = b.y;
    const int dx = std::abs(x1 - x0);
    const int dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1;
    const int sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        cells.push_back({x0, y0});
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
    return cells;
}

} // namespace evac
