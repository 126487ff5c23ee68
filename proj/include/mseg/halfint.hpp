#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace mseg {

// Exact rational with denominator 1 or 2, stored as twice its value.
// Exponent positions on a cuspidal line are integers except in the
// theta transport, which needs half-integers; nothing finer ever occurs.
class HalfInt {
  public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int v) : tw_(2 * static_cast<std::int64_t>(v)) {}

    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.tw_ = twice;
        return h;
    }

    constexpr std::int64_t twice() const { return tw_; }
    constexpr bool is_integer() const { return tw_ % 2 == 0; }

    // Valid only when is_integer().
    constexpr std::int64_t as_integer() const
    {
        if (!is_integer())
            throw std::logic_error("HalfInt: not an integer");
        return tw_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.tw_ + b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.tw_ - b.tw_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.tw_); }

    HalfInt& operator+=(HalfInt o)
    {
        tw_ += o.tw_;
        return *this;
    }
    HalfInt& operator-=(HalfInt o)
    {
        tw_ -= o.tw_;
        return *this;
    }

    friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  private:
    std::int64_t tw_ = 0;
};

// One half, the only non-integer step ever needed.
inline constexpr HalfInt half() { return HalfInt::from_twice(1); }

} // namespace mseg
