#pragma once

#include <string>
#include <string_view>

#include "mseg/multisegment.hpp"

namespace mseg {

// Raised on malformed input text; pos is a byte offset into the input.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos)
    {
    }
    std::size_t pos() const { return pos_; }

  private:
    std::size_t pos_;
};

// Grammar:
//   MSEG   := SEG ('+' SEG)* | '0'
//   SEG    := '[' RAT '..' RAT ']' ('@' LINEID)?
//   POINT  := RAT ('@' LINEID)?
//   RAT    := INT | INT '/2'
//   LINEID := [A-Za-z_][A-Za-z0-9_]*
// An omitted LINEID means the default line. Rationals with any other
// denominator are rejected. '[2..0]' is an error (b > e).
// Lines parse with unit degree 1; callers needing another unit rewrite
// the parsed lines (the CLI's --unit flag does this).

std::string format_half(HalfInt h);
std::string format_point(const Point& p);
std::string format_segment(const Segment& s);
std::string format_multisegment(const Multisegment& m);

HalfInt parse_half(std::string_view text);
Point parse_point(std::string_view text);
Segment parse_segment(std::string_view text);
Multisegment parse_multisegment(std::string_view text);

} // namespace mseg
