#pragma once

#include <cstdint>
#include <vector>

#include "mseg/segment.hpp"

namespace mseg {

// A finite multiset of segments, kept in canonical order (lines
// ascending, begins descending, ends descending). In that order no
// earlier segment precedes a later one on the same line.
class Multisegment {
  public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> items);

    const std::vector<Segment>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    const Segment& operator[](std::size_t i) const { return items_[i]; }

    std::int64_t degree() const;

    // Multiset of all points of all segments, sorted.
    std::vector<Point> support() const;

    // Distinct lines occurring, ascending.
    std::vector<Line> lines() const;
    Multisegment restricted_to(const Line& ln) const;

    Multisegment shifted(HalfInt x) const;
    Multisegment reflected() const;

    Multisegment with_added(const Segment& s) const;
    // Removes one copy of the i-th segment (canonical position).
    Multisegment with_removed(std::size_t i) const;
    // Replaces the i-th segment (canonical position) and re-sorts.
    Multisegment with_replaced(std::size_t i, const Segment& s) const;

    friend Multisegment operator+(const Multisegment& a, const Multisegment& b);
    friend bool operator==(const Multisegment&, const Multisegment&) = default;

  private:
    std::vector<Segment> items_;
};

// The canonical ordering map: any multiset of segments to its unique
// ranged sequence. Total, deterministic, idempotent.
Multisegment range_sort(std::vector<Segment> items);

inline Multisegment mseg(std::initializer_list<Segment> items)
{
    return range_sort(std::vector<Segment>(items));
}

// Each [b, e] becomes [b + x, e + x] on its own line.
Multisegment twist(const Multisegment& m, HalfInt x);

// Each [b, e] becomes [-e, -b]; the parameter of the contragredient.
Multisegment contragredient(const Multisegment& m);

// Which parametrization a multisegment tags: as the unique irreducible
// quotient of the ordered product of square-integrable pieces
// (Langlands), or the unique submodule of the trivial-type product
// (Zelevinsky).
enum class ParamTag { Langlands, Zelevinsky };

struct IrreducibleParam {
    ParamTag tag = ParamTag::Langlands;
    Multisegment m;

    friend bool operator==(const IrreducibleParam&, const IrreducibleParam&) = default;
};

} // namespace mseg
