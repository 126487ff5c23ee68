#include "mseg/socle.hpp"

namespace mseg {

Multisegment socle_create(const Multisegment& m, const Point& c)
{
    const MatchingReport r = begin_matching(m, c);
    if (r.u >= 1) {
        const auto p = static_cast<std::size_t>(r.l.front());
        return m.with_replaced(p, m[p].extended_begin());
    }
    return m.with_added(singleton(c.x, c.line));
}

std::optional<Multisegment> socle_annihilate(const Multisegment& m, const Point& c)
{
    const MatchingReport r = begin_matching(m, c);
    if (r.l_prime < 1)
        return std::nullopt;
    const auto p = static_cast<std::size_t>(r.s.back());
    if (auto shorter = m[p].shortened_begin())
        return m.with_replaced(p, *shorter);
    return m.with_removed(p);
}

Multisegment cosocle_create(const Multisegment& m, const Point& c)
{
    const MatchingReport r = end_matching(m, c);
    if (r.u >= 1) {
        const auto p = static_cast<std::size_t>(r.l.front());
        return m.with_replaced(p, m[p].extended_end());
    }
    return m.with_added(singleton(c.x, c.line));
}

namespace {

bool begin_side(const SocleQuery& q)
{
    const bool right = q.side == CuspidalSide::Right;
    const bool socle = q.mode == SocleMode::Socle;
    // Langlands: creation exactly when side and mode agree (socle of
    // pi x rho, cosocle of rho x pi); Zelevinsky swaps.
    if (q.pi.tag == ParamTag::Langlands)
        return right == socle;
    return right != socle;
}

} // namespace

IrreducibleParam socle_cosocle(const SocleQuery& q)
{
    const Multisegment& m = q.pi.m;
    Multisegment out = begin_side(q) ? socle_create(m, q.rho) : cosocle_create(m, q.rho);
    return IrreducibleParam{q.pi.tag, std::move(out)};
}

IrreducibleParam socle_cosocle_mirrored(const SocleQuery& q)
{
    // Same dispatch, but each creation runs through reflection with the
    // opposite-side primitive, so none of the code of socle_cosocle's
    // chosen primitive is reused.
    const Point rc{q.rho.line, -q.rho.x};
    const Multisegment rm = q.pi.m.reflected();
    Multisegment out = begin_side(q) ? cosocle_create(rm, rc).reflected()
                                     : socle_create(rm, rc).reflected();
    return IrreducibleParam{q.pi.tag, std::move(out)};
}

bool is_irreducible_with_cuspidal(const Multisegment& m, const Point& c)
{
    return begin_matching(m, c).u == 0 && end_matching(m, c).u == 0;
}

int l_prime_invariant(const Multisegment& m, const Point& c)
{
    return begin_matching(m, c).l_prime;
}

std::int64_t l_sup_formula(const Multisegment& m, const Point& c, int unit_degree)
{
    return static_cast<std::int64_t>(unit_degree) * l_prime_invariant(m, c);
}

bool condition_c(const Multisegment& m)
{
    const auto& v = m.items();
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (linked(v[a], v[b]))
                return false;
            if (v[a].line() != v[b].line())
                continue;
            const bool equal = v[a] == v[b];
            const bool disjoint = v[a].e() < v[b].b() || v[b].e() < v[a].b() ||
                                  !(v[a].b() - v[b].b()).is_integer();
            if (!equal && !disjoint)
                return false;
        }
    }
    return true;
}

bool unlinked_product_irreducible(std::span<const Segment> segs)
{
    for (std::size_t a = 0; a < segs.size(); ++a)
        for (std::size_t b = a + 1; b < segs.size(); ++b)
            if (linked(segs[a], segs[b]))
                return false;
    return true;
}

} // namespace mseg
