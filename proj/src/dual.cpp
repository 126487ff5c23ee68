#include "mseg/dual.hpp"

namespace mseg {

namespace {

// A maximal begin on the first line of m. Every begin-c segment there is
// unmatched (nothing begins later on that line), so annihilation is in
// image and the recursion consumes one support point per step.
Point peel_point(const Multisegment& m)
{
    return m[0].begin_point();
}

} // namespace

Multisegment dual(const Multisegment& m)
{
    if (m.empty())
        return m;
    const Point c = peel_point(m);
    return cosocle_create(dual(*socle_annihilate(m, c)), c);
}

DualTrace dual_with_trace(const Multisegment& m)
{
    DualTrace tr;
    Multisegment cur = m;
    while (!cur.empty()) {
        const Point c = peel_point(cur);
        cur = *socle_annihilate(cur, c);
        tr.steps.emplace_back(c, cur);
    }
    for (std::size_t v = tr.steps.size(); v-- > 0;)
        tr.result = cosocle_create(tr.result, tr.steps[v].first);
    return tr;
}

} // namespace mseg
