#include "ascq/complex_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace ascq
{

std::string format_real(double x)
{
    if (x == 0.0)
        x = 0.0; // folds -0
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
    if (ec != std::errc())
        throw Error(ErrorKind::Parameter, "failed to format real value");
    return std::string(buf.data(), end);
}

std::string format_complex(Complex z)
{
    std::string out = format_real(z.real());
    if (z.imag() == 0.0)
        return out;
    const std::string im = format_real(z.imag());
    if (im.front() != '-')
        out += '+';
    out += im;
    out += 'i';
    return out;
}

namespace
{

[[noreturn]] void malformed(std::string_view text)
{
    throw Error(ErrorKind::Parameter, "malformed complex argument '" + std::string(text) + "'");
}

double parse_real(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.front() == '+' || s.front() == '-')
        malformed(whole);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value))
        malformed(whole);
    return negative ? -value : value;
}

// Imaginary coefficient text without the trailing 'i'; a bare sign means unit magnitude.
double parse_imag(std::string_view s, std::string_view whole)
{
    if (s.empty() || s == "+")
        return 1.0;
    if (s == "-")
        return -1.0;
    return parse_real(s, whole);
}

} // namespace

Complex parse_complex(std::string_view text)
{
    if (text.empty())
        malformed(text);

    if (const auto at = text.find('@'); at != std::string_view::npos) {
        const double r = parse_real(text.substr(0, at), text);
        const double theta = parse_real(text.substr(at + 1), text);
        return std::polar(r, theta);
    }

    if (text.back() != 'i' && text.back() != 'j')
        return {parse_real(text, text), 0.0};

    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is neither leading nor part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_imag(body, text)};
    return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

} // namespace ascq
