#pragma once

#include <optional>
#include <span>

#include "mseg/matching.hpp"

namespace mseg {

// Creation at c (the operator behind every socle parameter): if a free
// begin-(c+1) segment exists, the largest one grows down to c;
// otherwise the singleton {c} is adjoined.
Multisegment socle_create(const Multisegment& m, const Point& c);

// Annihilation at c, the partial inverse of socle_create: the smallest
// unmatched begin-c segment loses its first point (disappearing when it
// was the singleton {c}). Absent when no begin-c segment is unmatched;
// note that the genuine empty multisegment is an in-image value, so
// "not in the image" is a distinguished result, not {}.
std::optional<Multisegment> socle_annihilate(const Multisegment& m, const Point& c);

// The end-side twin (behind every cosocle parameter): the largest free
// end-(c-1) segment grows up to c, else {c} is adjoined.
Multisegment cosocle_create(const Multisegment& m, const Point& c);

enum class CuspidalSide { Left, Right };   // which side of the product the cuspidal sits on
enum class SocleMode { Socle, Cosocle };

struct SocleQuery {
    IrreducibleParam pi;
    Point rho;               // a cuspidal: the length-1 segment [c, c]
    CuspidalSide side = CuspidalSide::Right;
    SocleMode mode = SocleMode::Socle;
};

// The unique irreducible submodule or quotient of the product of pi
// with the cuspidal at rho, as a parameter:
//   Langlands:  socle(pi x rho) = cosocle(rho x pi) -> creation;
//               cosocle(pi x rho) = socle(rho x pi) -> end creation.
//   Zelevinsky: socle(rho x pi) = cosocle(pi x rho) -> creation;
//               socle(pi x rho) = cosocle(rho x pi) -> end creation.
IrreducibleParam socle_cosocle(const SocleQuery& q);

// Independent route used to cross-check the dispatch: everything is
// computed through reflection and begin-side creation only.
IrreducibleParam socle_cosocle_mirrored(const SocleQuery& q);

// The product of <m> (either parametrization) with the cuspidal at c is
// irreducible iff nothing is free on either side: u = u' = 0.
bool is_irreducible_with_cuspidal(const Multisegment& m, const Point& c);

// Count of unmatched begin-c segments; n times it is the exact maximal
// Jacquet drop toward the cuspidal support {c} (n the line unit degree).
int l_prime_invariant(const Multisegment& m, const Point& c);
std::int64_t l_sup_formula(const Multisegment& m, const Point& c, int unit_degree);

// Pairwise unlinked and every pair equal or disjoint: the hypothesis
// under which a product with any irreducible keeps a unique socle.
bool condition_c(const Multisegment& m);

// Pairwise unlinked: the product of the segment representations (either
// type) is irreducible.
bool unlinked_product_irreducible(std::span<const Segment> segs);

} // namespace mseg
