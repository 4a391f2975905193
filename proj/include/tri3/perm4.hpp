#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace tri3 {

/// A permutation of {0,1,2,3}, stored as its image array.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : img_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    /// Transposition of x and y (identity when x == y).
    static constexpr Perm4 swap(int x, int y) {
        Perm4 p;
        p.img_[x] = static_cast<std::uint8_t>(y);
        p.img_[y] = static_cast<std::uint8_t>(x);
        return p;
    }

    /// The i-th permutation in lexicographic order of image arrays, 0 <= i < 24.
    static Perm4 from_index(int i);
    static const std::array<Perm4, 24>& all();

    constexpr int operator[](int i) const { return img_[i]; }

    /// Composition: (a * b)[i] = a[b[i]].
    constexpr Perm4 operator*(const Perm4& b) const {
        return Perm4(img_[b.img_[0]], img_[b.img_[1]], img_[b.img_[2]], img_[b.img_[3]]);
    }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    constexpr int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2) ? -1 : 1;
    }

    constexpr bool is_identity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2; }

    /// Index in lexicographic order (inverse of from_index).
    int index() const;

    /// Validity check for perms built from untrusted input.
    constexpr bool valid() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img_[i] > 3) return false;
            seen |= 1 << img_[i];
        }
        return seen == 0xF;
    }

    std::string str() const;

    friend constexpr bool operator==(const Perm4& a, const Perm4& b) { return a.img_ == b.img_; }
    friend constexpr bool operator<(const Perm4& a, const Perm4& b) { return a.img_ < b.img_; }

private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace tri3
