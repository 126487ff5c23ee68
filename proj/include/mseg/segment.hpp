#pragma once

#include <optional>
#include <string>
#include <utility>

#include "mseg/halfint.hpp"

namespace mseg {

// A cuspidal line: all integer twists of one fixed cuspidal. The unit
// degree is the group size one point of the line accounts for.
struct Line {
    std::string id;  // empty = the default line
    int unit = 1;

    friend bool operator==(const Line&, const Line&) = default;
    friend auto operator<=>(const Line&, const Line&) = default;
};

inline Line line(std::string id = {}, int unit = 1)
{
    if (unit < 1)
        throw std::invalid_argument("line unit degree must be >= 1");
    return Line{std::move(id), unit};
}

// A point of a line: one cuspidal, identified with its exponent position.
struct Point {
    Line line;
    HalfInt x;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Point point(HalfInt x, Line ln = {}) { return Point{std::move(ln), x}; }

// An integer-step interval [b, e] on a line, b <= e. Never empty; the
// empty segment is represented only by absence.
class Segment {
  public:
    Segment(HalfInt b, HalfInt e, Line ln = {}) : line_(std::move(ln)), b_(b), e_(e)
    {
        if (e - b < HalfInt(0) || !(e - b).is_integer())
            throw std::invalid_argument("segment needs e - b a non-negative integer");
    }

    const Line& line() const { return line_; }
    HalfInt b() const { return b_; }
    HalfInt e() const { return e_; }

    std::int64_t length() const { return (e_ - b_).as_integer() + 1; }
    std::int64_t degree() const { return length() * line_.unit; }

    Point begin_point() const { return Point{line_, b_}; }
    Point end_point() const { return Point{line_, e_}; }

    bool contains(HalfInt x) const { return b_ <= x && x <= e_ && (x - b_).is_integer(); }

    // The segment extended one step below the begin (the paper-level
    // "add a point in front").
    Segment extended_begin() const { return Segment(b_ - HalfInt(1), e_, line_); }
    // Extended one step past the end.
    Segment extended_end() const { return Segment(b_, e_ + HalfInt(1), line_); }
    // Shortened from the begin; absent if the segment was a single point.
    std::optional<Segment> shortened_begin() const
    {
        if (b_ == e_)
            return std::nullopt;
        return Segment(b_ + HalfInt(1), e_, line_);
    }

    Segment shifted(HalfInt x) const { return Segment(b_ + x, e_ + x, line_); }
    Segment reflected() const { return Segment(-e_, -b_, line_); }

    friend bool operator==(const Segment&, const Segment&) = default;

  private:
    Line line_;
    HalfInt b_;
    HalfInt e_;
};

inline Segment seg(HalfInt b, HalfInt e, Line ln = {}) { return Segment(b, e, std::move(ln)); }
inline Segment singleton(HalfInt x, Line ln = {}) { return Segment(x, x, std::move(ln)); }

// Two segments are linked when their union is again a segment and
// neither contains the other. Distinct lines are never linked.
bool linked(const Segment& a, const Segment& b);

// a precedes b: linked, and b starts one step after a point of a.
bool precedes(const Segment& a, const Segment& b);

// The order used on one line: later begin, or equal begin and longer.
// Asking it across lines is an error (the order is undefined there).
bool segment_ge(const Segment& a, const Segment& b);

// Union and intersection of a linked pair; the intersection is absent
// for adjacent segments. Unlinked input is a precondition error.
std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& a, const Segment& b);

// Canonical sequence order: lines ascending, then begin descending,
// then end descending. Positions in this order realize the non-
// precedence ordering every statement assumes.
bool canonical_less(const Segment& a, const Segment& b);

} // namespace mseg
