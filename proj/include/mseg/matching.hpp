#pragma once

#include <optional>
#include <vector>

#include "mseg/multisegment.hpp"

namespace mseg {

// Index families of the begin-c / end-c matchings. All entries are
// 0-based positions into the canonical order of the multisegment; the
// "no such partner" sentinel is an absent optional, never an integer.
//
// Unprimed (begin) reading at the point c:
//   j  - positions of segments beginning at c, in decreasing segment
//        order (ascending positions);
//   i  - parallel to j: the matched begin-(c+1) position, i.e. the
//        largest unused position whose segment begins at c+1 and ends
//        strictly past the j-segment's end;
//   k,h - the matched (j, i) pairs, k ascending, h parallel;
//   l  - free begin-(c+1) positions (never used as a partner),
//        ascending; l.front() is the largest such segment;
//   s  - unmatched j positions, ascending; s.back() is the smallest
//        unmatched begin-c segment.
// Counts: t = |j|, w = |k|, u = |l|, l_prime = t - w = |s|.
//
// The end (primed) reading mirrors everything: j holds end-c positions,
// partners end at c-1 and must begin strictly earlier, the pairing runs
// from the longest end-c segment upward taking the smallest admissible
// position, and l holds free end-(c-1) positions.
struct MatchingReport {
    Point c;
    std::vector<int> j;
    std::vector<std::optional<int>> i;
    std::vector<int> k;
    std::vector<int> h;
    std::vector<int> l;
    std::vector<int> s;
    int t = 0;
    int w = 0;
    int u = 0;
    int l_prime = 0;
};

MatchingReport begin_matching(const Multisegment& m, const Point& c);
MatchingReport end_matching(const Multisegment& m, const Point& c);

// Candidate parameter lists for the socle of <m>^t x rho_c (resp. the
// quotient side): the append-{c} candidate first, then one extension
// per free position. Size is u + 1 (resp. u' + 1).
std::vector<Multisegment> socle_candidates(const Multisegment& m, const Point& c);
std::vector<Multisegment> quotient_candidates(const Multisegment& m, const Point& c);

} // namespace mseg
