// Copyright 2026 The dircode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIRCODE_VEC2_H
#define DIRCODE_VEC2_H

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace dircode {

/// Integer point / displacement in Z^2.
struct Vec2 {
    int64_t x = 0;
    int64_t y = 0;

    constexpr Vec2 operator+(const Vec2 &o) const {
        return {x + o.x, y + o.y};
    }
    constexpr Vec2 operator-(const Vec2 &o) const {
        return {x - o.x, y - o.y};
    }
    constexpr Vec2 operator-() const {
        return {-x, -y};
    }
    constexpr Vec2 operator*(int64_t k) const {
        return {k * x, k * y};
    }
    constexpr Vec2 &operator+=(const Vec2 &o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr bool is_zero() const {
        return x == 0 && y == 0;
    }
    /// Parity of x + y; data sites are even, ancilla sites odd.
    constexpr bool odd_parity() const {
        return ((x + y) % 2) != 0;
    }

    constexpr auto operator<=>(const Vec2 &) const = default;

    std::string str() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
};

inline std::ostream &operator<<(std::ostream &out, const Vec2 &v) {
    return out << v.str();
}

/// Mathematical modulus, result in [0, m).
constexpr int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

constexpr int64_t floor_div(int64_t a, int64_t m) {
    return (a - floor_mod(a, m)) / m;
}

}  // namespace dircode

#endif
