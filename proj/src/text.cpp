#include "mseg/text.hpp"

#include <cctype>

namespace mseg {

std::string format_half(HalfInt h)
{
    if (h.is_integer())
        return std::to_string(h.as_integer());
    return std::to_string(h.twice()) + "/2";
}

std::string format_point(const Point& p)
{
    std::string out = format_half(p.x);
    if (!p.line.id.empty())
        out += "@" + p.line.id;
    return out;
}

std::string format_segment(const Segment& s)
{
    std::string out = "[" + format_half(s.b()) + ".." + format_half(s.e()) + "]";
    if (!s.line().id.empty())
        out += "@" + s.line().id;
    return out;
}

std::string format_multisegment(const Multisegment& m)
{
    if (m.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i)
            out += "+";
        out += format_segment(m[i]);
    }
    return out;
}

namespace {

class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }
    std::size_t pos() const { return pos_; }

    bool eat(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    HalfInt rational()
    {
        const std::size_t start = pos_;
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a rational");
        std::int64_t num = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            num = num * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        if (neg)
            num = -num;
        if (eat('/')) {
            if (!eat('2')) {
                pos_ = start;
                fail("only denominator 2 is allowed");
            }
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = start;
                fail("only denominator 2 is allowed");
            }
            return HalfInt::from_twice(num);
        }
        return HalfInt(static_cast<int>(num));
    }

    Line line_suffix()
    {
        if (!eat('@'))
            return Line{};
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected a line identifier");
        std::string id;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
            id += text_[pos_];
            ++pos_;
        }
        return Line{id, 1};
    }

    Segment segment()
    {
        expect('[');
        const HalfInt b = rational();
        expect('.');
        expect('.');
        const HalfInt e = rational();
        if (e < b)
            fail("segment end before begin");
        if (!(e - b).is_integer())
            fail("segment endpoints differ by a non-integer");
        expect(']');
        return Segment(b, e, line_suffix());
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

void expect_done(Cursor& c)
{
    if (!c.done())
        c.fail("trailing input");
}

} // namespace

HalfInt parse_half(std::string_view text)
{
    Cursor c(text);
    HalfInt h = c.rational();
    expect_done(c);
    return h;
}

Point parse_point(std::string_view text)
{
    Cursor c(text);
    HalfInt h = c.rational();
    Line ln = c.line_suffix();
    expect_done(c);
    return Point{ln, h};
}

Segment parse_segment(std::string_view text)
{
    Cursor c(text);
    Segment s = c.segment();
    expect_done(c);
    return s;
}

Multisegment parse_multisegment(std::string_view text)
{
    Cursor c(text);
    if (c.peek() == '0') {
        c.eat('0');
        expect_done(c);
        return Multisegment{};
    }
    std::vector<Segment> items;
    items.push_back(c.segment());
    while (c.eat('+'))
        items.push_back(c.segment());
    expect_done(c);
    return range_sort(std::move(items));
}

} // namespace mseg
