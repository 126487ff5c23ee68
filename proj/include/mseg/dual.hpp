#pragma once

#include "mseg/socle.hpp"

namespace mseg {

// Replayable record of the peeling recursion: steps[v] holds the point
// peeled at and the multisegment left after peeling. Applying the
// end-side creations at the recorded points (last step first) rebuilds
// `result`; applying begin-side creations instead rebuilds the input.
struct DualTrace {
    std::vector<std::pair<Point, Multisegment>> steps;
    Multisegment result;
};

// The parametrization-exchanging involution, computed per line by
// peeling at a maximal begin (where annihilation is always defined) and
// rebuilding on the end side:
//   dual({}) = {};  dual(m) = cosocle_create(dual(annihilate(m, c)), c)
// with c a maximal begin of some line of m.
Multisegment dual(const Multisegment& m);

DualTrace dual_with_trace(const Multisegment& m);

// Same recursion but peeling at an arbitrary in-image point chosen by
// the caller-supplied picker; used to check the result does not depend
// on the peeling order. The picker gets the list of in-image points of
// the current multisegment and returns an index into it.
template <typename Picker>
Multisegment dual_with_peel_choice(const Multisegment& m, Picker&& pick)
{
    if (m.empty())
        return m;
    std::vector<Point> in_image;
    for (const auto& s : m.items()) {
        const Point c = s.begin_point();
        if ((in_image.empty() || !(in_image.back() == c)) &&
            begin_matching(m, c).l_prime >= 1)
            in_image.push_back(c);
    }
    const Point c = in_image[pick(in_image.size())];
    const Multisegment rest = *socle_annihilate(m, c);
    return cosocle_create(dual_with_peel_choice(rest, pick), c);
}

} // namespace mseg
