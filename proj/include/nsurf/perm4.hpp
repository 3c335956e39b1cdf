#pragma once

// Permutations of {0,1,2,3}, the glue that binds tetrahedra together.
//
// A gluing between two tetrahedron faces is described by the image of all
// four corner labels, written as a 4-character digit string (the image of
// corners 0123 in order, e.g. "2013").

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace nsurf {

class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d) : img_{static_cast<std::uint8_t>(a),
                                                       static_cast<std::uint8_t>(b),
                                                       static_cast<std::uint8_t>(c),
                                                       static_cast<std::uint8_t>(d)} {}

    /// Parse a 4-digit image string such as "2013"; empty on invalid input.
    static std::optional<Perm4> parse(const std::string& s) {
        if (s.size() != 4) return std::nullopt;
        std::array<std::uint8_t, 4> img{};
        std::array<bool, 4> seen{};
        for (int i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '3') return std::nullopt;
            int v = s[i] - '0';
            if (seen[v]) return std::nullopt;
            seen[v] = true;
            img[i] = static_cast<std::uint8_t>(v);
        }
        Perm4 p;
        p.img_ = img;
        return p;
    }

    int operator[](int i) const { return img_[i]; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    /// Composition: (a * b)[i] = a[b[i]].
    friend Perm4 operator*(const Perm4& a, const Perm4& b) {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[i] = a.img_[b.img_[i]];
        return r;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }

    bool is_identity() const { return *this == Perm4(); }

    /// +1 for even permutations, -1 for odd ones.  Odd gluings preserve
    /// orientation between tetrahedra (the two tetrahedra are mirrored
    /// through the shared face).
    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) ++inv;
        return (inv % 2 == 0) ? 1 : -1;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + img_[i]);
        return s;
    }

private:
    std::array<std::uint8_t, 4> img_;
};

}  // namespace nsurf
