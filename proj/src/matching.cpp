#include "mseg/matching.hpp"

#include <algorithm>

namespace mseg {

namespace {

std::vector<int> positions_with(const Multisegment& m, const Line& ln,
                                HalfInt value, bool on_begin)
{
    std::vector<int> out;
    for (std::size_t p = 0; p < m.size(); ++p) {
        const Segment& s = m[p];
        if (s.line() != ln)
            continue;
        if ((on_begin ? s.b() : s.e()) == value)
            out.push_back(static_cast<int>(p));
    }
    return out;
}

void fill_families(MatchingReport& r)
{
    r.t = static_cast<int>(r.j.size());
    for (std::size_t v = 0; v < r.j.size(); ++v) {
        if (r.i[v]) {
            r.k.push_back(r.j[v]);
            r.h.push_back(*r.i[v]);
        } else {
            r.s.push_back(r.j[v]);
        }
    }
    r.w = static_cast<int>(r.k.size());
    r.u = static_cast<int>(r.l.size());
    r.l_prime = r.t - r.w;
}

} // namespace

MatchingReport begin_matching(const Multisegment& m, const Point& c)
{
    MatchingReport r;
    r.c = c;
    r.j = positions_with(m, c.line, c.x, /*on_begin=*/true);
    const std::vector<int> cand = positions_with(m, c.line, c.x + HalfInt(1), true);
    std::vector<bool> used(cand.size(), false);

    // Descending j order = ascending positions. Each j-segment takes the
    // largest unused candidate position whose end strictly exceeds its
    // own end (the smallest such segment).
    for (int jp : r.j) {
        std::optional<int> pick;
        for (std::size_t a = cand.size(); a-- > 0;) {
            if (!used[a] && m[cand[a]].e() > m[jp].e()) {
                pick = static_cast<int>(a);
                break;
            }
        }
        if (pick) {
            used[*pick] = true;
            r.i.push_back(cand[*pick]);
        } else {
            r.i.push_back(std::nullopt);
        }
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
        if (!used[a])
            r.l.push_back(cand[a]);
    fill_families(r);
    return r;
}

MatchingReport end_matching(const Multisegment& m, const Point& c)
{
    MatchingReport r;
    r.c = c;
    r.j = positions_with(m, c.line, c.x, /*on_begin=*/false);
    const std::vector<int> cand = positions_with(m, c.line, c.x - HalfInt(1), false);
    std::vector<bool> used(cand.size(), false);

    // The pairing runs from the longest end-c segment (largest position)
    // upward; each takes the smallest unused candidate position whose
    // segment begins strictly earlier.
    std::vector<std::optional<int>> picked(r.j.size());
    for (std::size_t v = r.j.size(); v-- > 0;) {
        const int jp = r.j[v];
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!used[a] && m[cand[a]].b() < m[jp].b()) {
                used[a] = true;
                picked[v] = cand[a];
                break;
            }
        }
    }
    r.i = std::move(picked);
    for (std::size_t a = 0; a < cand.size(); ++a)
        if (!used[a])
            r.l.push_back(cand[a]);
    fill_families(r);
    return r;
}

std::vector<Multisegment> socle_candidates(const Multisegment& m, const Point& c)
{
    std::vector<Multisegment> out;
    out.push_back(m.with_added(singleton(c.x, c.line)));
    const MatchingReport r = begin_matching(m, c);
    for (int p : r.l)
        out.push_back(m.with_replaced(static_cast<std::size_t>(p),
                                      m[static_cast<std::size_t>(p)].extended_begin()));
    return out;
}

std::vector<Multisegment> quotient_candidates(const Multisegment& m, const Point& c)
{
    std::vector<Multisegment> out;
    out.push_back(m.with_added(singleton(c.x, c.line)));
    const MatchingReport r = end_matching(m, c);
    for (int p : r.l)
        out.push_back(m.with_replaced(static_cast<std::size_t>(p),
                                      m[static_cast<std::size_t>(p)].extended_end()));
    return out;
}

} // namespace mseg
