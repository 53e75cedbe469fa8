#pragma once

#include <memory>
#include <vector>

#include "bimatch/matching.hpp"

// Small hand-checked configurations shared across the test binaries.
namespace fx {

using namespace bimatch;

inline Point w(long x, long y) { return {{rat(x), rat(y)}, Color::White}; }
inline Point b(long x, long y) { return {{rat(x), rat(y)}, Color::Black}; }

inline std::shared_ptr<const PointSet> make_ps(std::vector<Point> pts) {
    auto p = std::make_shared<const PointSet>(std::move(pts));
    p->validate();
    return p;
}

// Two vertical unit-ish segments on a rectangle; the matching is unique.
inline std::shared_ptr<const PointSet> square() {
    return make_ps({w(0, 0), b(0, 2), w(3, 0), b(3, 2)});
}
inline BRMatching square_m() {
    auto p = square();
    return BRMatching(p, {{0, 1}, {2, 3}});
}

// Two antiparallel segments; the point set has a second (horizontal)
// matching, so this one admits a cut.
inline std::shared_ptr<const PointSet> anti() {
    return make_ps({w(0, 0), w(3, 2), b(0, 2), b(3, 0)});
}
inline BRMatching anti_m() {
    auto p = anti();
    return BRMatching(p, {{0, 2}, {1, 3}});
}

// Three segments radiating from the center; smallest circular example.
inline std::shared_ptr<const PointSet> star3() {
    return make_ps({w(0, 1), w(1, -1), w(-1, -1), b(0, 3), b(3, -3), b(-3, -3)});
}
inline BRMatching star3_m() {
    auto p = star3();
    return BRMatching(p, {{0, 3}, {1, 4}, {2, 5}});
}

}  // namespace fx
