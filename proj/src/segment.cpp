#include "mseg/segment.hpp"

#include <tuple>

namespace mseg {

bool linked(const Segment& a, const Segment& b)
{
    if (a.line() != b.line())
        return false;
    if (!(a.b() - b.b()).is_integer())
        return false;
    // Union contiguous: neither interval starts more than one step past
    // the other's end.
    const bool contiguous = a.b() <= b.e() + HalfInt(1) && b.b() <= a.e() + HalfInt(1);
    if (!contiguous)
        return false;
    const bool a_in_b = b.b() <= a.b() && a.e() <= b.e();
    const bool b_in_a = a.b() <= b.b() && b.e() <= a.e();
    return !a_in_b && !b_in_a;
}

bool precedes(const Segment& a, const Segment& b)
{
    return linked(a, b) && a.b() < b.b();
}

bool segment_ge(const Segment& a, const Segment& b)
{
    if (a.line() != b.line())
        throw std::invalid_argument("segment order is undefined across lines");
    if (a.b() != b.b())
        return a.b() > b.b();
    return a.length() >= b.length();
}

std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& a, const Segment& b)
{
    if (!linked(a, b))
        throw std::invalid_argument("union_intersection needs a linked pair");
    const Segment uni(std::min(a.b(), b.b()), std::max(a.e(), b.e()), a.line());
    const HalfInt ib = std::max(a.b(), b.b());
    const HalfInt ie = std::min(a.e(), b.e());
    if (ib > ie)
        return {uni, std::nullopt};
    return {uni, Segment(ib, ie, a.line())};
}

bool canonical_less(const Segment& a, const Segment& b)
{
    if (a.line() != b.line())
        return a.line() < b.line();
    if (a.b() != b.b())
        return a.b() > b.b();
    return a.e() > b.e();
}

} // namespace mseg
