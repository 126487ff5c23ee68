#include "mseg/multisegment.hpp"

#include <algorithm>

namespace mseg {

Multisegment::Multisegment(std::vector<Segment> items) : items_(std::move(items))
{
    std::stable_sort(items_.begin(), items_.end(), canonical_less);
}

std::int64_t Multisegment::degree() const
{
    std::int64_t d = 0;
    for (const auto& s : items_)
        d += s.degree();
    return d;
}

std::vector<Point> Multisegment::support() const
{
    std::vector<Point> pts;
    for (const auto& s : items_)
        for (HalfInt x = s.b(); x <= s.e(); x += HalfInt(1))
            pts.push_back(Point{s.line(), x});
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::vector<Line> Multisegment::lines() const
{
    std::vector<Line> ls;
    for (const auto& s : items_)
        if (ls.empty() || ls.back() != s.line())
            ls.push_back(s.line());
    // items_ are sorted by line already; dedupe handles repeats.
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    return ls;
}

Multisegment Multisegment::restricted_to(const Line& ln) const
{
    std::vector<Segment> out;
    for (const auto& s : items_)
        if (s.line() == ln)
            out.push_back(s);
    return Multisegment(std::move(out));
}

Multisegment Multisegment::shifted(HalfInt x) const
{
    std::vector<Segment> out;
    out.reserve(items_.size());
    for (const auto& s : items_)
        out.push_back(s.shifted(x));
    return Multisegment(std::move(out));
}

Multisegment Multisegment::reflected() const
{
    std::vector<Segment> out;
    out.reserve(items_.size());
    for (const auto& s : items_)
        out.push_back(s.reflected());
    return Multisegment(std::move(out));
}

Multisegment Multisegment::with_added(const Segment& s) const
{
    auto out = items_;
    out.push_back(s);
    return Multisegment(std::move(out));
}

Multisegment Multisegment::with_removed(std::size_t i) const
{
    auto out = items_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return Multisegment(std::move(out));
}

Multisegment Multisegment::with_replaced(std::size_t i, const Segment& s) const
{
    auto out = items_;
    out[i] = s;
    return Multisegment(std::move(out));
}

Multisegment operator+(const Multisegment& a, const Multisegment& b)
{
    auto out = a.items_;
    out.insert(out.end(), b.items_.begin(), b.items_.end());
    return Multisegment(std::move(out));
}

Multisegment range_sort(std::vector<Segment> items) { return Multisegment(std::move(items)); }

Multisegment twist(const Multisegment& m, HalfInt x) { return m.shifted(x); }

Multisegment contragredient(const Multisegment& m) { return m.reflected(); }

} // namespace mseg
