#pragma once

#include <cstdint>
#include <limits>
#include <ostream>

#include "qirw/errors.hpp"

namespace qirw {

// Non-negative integer distance with an explicit infinity. Addition saturates,
// so unreachable stays unreachable through any chain of compositions.
class Dist {
public:
    constexpr Dist() : v_(0) {}

    static constexpr Dist infinity() {
        Dist d;
        d.v_ = kInf;
        return d;
    }
    static Dist of(std::int64_t value) {
        if (value < 0) throw InputError("Dist::of: negative value");
        Dist d;
        d.v_ = value;
        return d;
    }

    bool finite() const { return v_ != kInf; }
    std::int64_t value() const {
        if (!finite()) throw InputError("Dist::value: infinite");
        return v_;
    }
    // Finite value, or `fallback` when infinite. Handy in max-reductions.
    std::int64_t value_or(std::int64_t fallback) const { return finite() ? v_ : fallback; }

    Dist operator+(Dist o) const {
        if (!finite() || !o.finite()) return infinity();
        Dist d;
        d.v_ = v_ + o.v_;
        return d;
    }
    Dist operator+(std::int64_t o) const { return *this + Dist::of(o); }

    friend bool operator==(Dist a, Dist b) { return a.v_ == b.v_; }
    friend bool operator!=(Dist a, Dist b) { return a.v_ != b.v_; }
    // Infinity compares greater than every finite distance.
    friend bool operator<(Dist a, Dist b) {
        if (a.v_ == b.v_) return false;
        if (a.v_ == kInf) return false;
        if (b.v_ == kInf) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(Dist a, Dist b) { return b < a; }
    friend bool operator<=(Dist a, Dist b) { return !(b < a); }
    friend bool operator>=(Dist a, Dist b) { return !(a < b); }

    // a <= L*b + C with the convention that an infinite right side absorbs all.
    // Wide arithmetic: pipeline constants can make L*b overflow 64 bits.
    bool within_affine(std::int64_t l, std::int64_t c, Dist b) const {
        if (!b.finite()) return true;
        if (!finite()) return false;
        return static_cast<__int128>(v_) <=
               static_cast<__int128>(l) * b.v_ + static_cast<__int128>(c);
    }

    friend std::ostream& operator<<(std::ostream& os, Dist d) {
        if (d.finite()) return os << d.v_;
        return os << "inf";
    }

private:
    static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
    std::int64_t v_;
};

} // namespace qirw
