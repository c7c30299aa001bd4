#include "ascq/svg.hpp"

#include "ascq/complex_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

namespace ascq
{

namespace
{

constexpr double kSize = 640.0;
constexpr double kMargin = 56.0;

std::string fixed(double x, int digits = 2)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
    std::string s(buf, ec == std::errc() ? end : buf);
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, s.front() == '-' ? 1 : 0);
    return s;
}

class Canvas
{
  public:
    explicit Canvas(const PlotWindow& w) : w_(w)
    {
        const double span = std::max(w.xmax - w.xmin, w.ymax - w.ymin);
        scale_ = (kSize - 2 * kMargin) / span;
        width_ = 2 * kMargin + (w.xmax - w.xmin) * scale_;
        height_ = 2 * kMargin + (w.ymax - w.ymin) * scale_;
    }

    double px(double x) const { return kMargin + (x - w_.xmin) * scale_; }
    double py(double y) const { return height_ - kMargin - (y - w_.ymin) * scale_; }
    double width() const { return width_; }
    double height() const { return height_; }
    const PlotWindow& window() const { return w_; }

  private:
    PlotWindow w_;
    double scale_ = 1.0;
    double width_ = kSize;
    double height_ = kSize;
};

double tick_step(double span)
{
    const double raw = span / 8.0;
    const double decade = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0})
        if (m * decade >= raw)
            return m * decade;
    return 10.0 * decade;
}

void header(std::ostream& out, const Canvas& c, const std::string& title, const std::string& metadata)
{
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(c.width(), 0) << "\" height=\""
        << fixed(c.height(), 0) << "\" viewBox=\"0 0 " << fixed(c.width(), 0) << ' ' << fixed(c.height(), 0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
        << "<title>" << title << "</title>\n"
        << "<metadata>" << metadata << "</metadata>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void axes(std::ostream& out, const Canvas& c)
{
    const PlotWindow& w = c.window();
    out << "<rect x=\"" << fixed(c.px(w.xmin)) << "\" y=\"" << fixed(c.py(w.ymax)) << "\" width=\""
        << fixed(c.px(w.xmax) - c.px(w.xmin)) << "\" height=\"" << fixed(c.py(w.ymin) - c.py(w.ymax))
        << "\" fill=\"none\" stroke=\"#444\"/>\n";

    const double x0 = std::clamp(0.0, w.xmin, w.xmax);
    const double y0 = std::clamp(0.0, w.ymin, w.ymax);
    out << "<g stroke=\"#999\" stroke-width=\"0.8\">\n"
        << "<line x1=\"" << fixed(c.px(w.xmin)) << "\" y1=\"" << fixed(c.py(y0)) << "\" x2=\"" << fixed(c.px(w.xmax))
        << "\" y2=\"" << fixed(c.py(y0)) << "\"/>\n"
        << "<line x1=\"" << fixed(c.px(x0)) << "\" y1=\"" << fixed(c.py(w.ymin)) << "\" x2=\"" << fixed(c.px(x0))
        << "\" y2=\"" << fixed(c.py(w.ymax)) << "\"/>\n"
        << "</g>\n";

    const double step = tick_step(std::max(w.xmax - w.xmin, w.ymax - w.ymin));
    const int digits = step < 0.1 ? 2 : (step < 1.0 ? 1 : 0);
    out << "<g stroke=\"#444\" fill=\"#222\">\n";
    for (double t = std::ceil(w.xmin / step - 1e-9) * step; t <= w.xmax + 1e-9; t += step) {
        out << "<line x1=\"" << fixed(c.px(t)) << "\" y1=\"" << fixed(c.py(w.ymin)) << "\" x2=\"" << fixed(c.px(t))
            << "\" y2=\"" << fixed(c.py(w.ymin) + 5) << "\"/>"
            << "<text stroke=\"none\" text-anchor=\"middle\" x=\"" << fixed(c.px(t)) << "\" y=\""
            << fixed(c.py(w.ymin) + 18) << "\">" << fixed(t, digits) << "</text>\n";
    }
    for (double t = std::ceil(w.ymin / step - 1e-9) * step; t <= w.ymax + 1e-9; t += step) {
        out << "<line x1=\"" << fixed(c.px(w.xmin) - 5) << "\" y1=\"" << fixed(c.py(t)) << "\" x2=\""
            << fixed(c.px(w.xmin)) << "\" y2=\"" << fixed(c.py(t)) << "\"/>"
            << "<text stroke=\"none\" text-anchor=\"end\" x=\"" << fixed(c.px(w.xmin) - 8) << "\" y=\""
            << fixed(c.py(t) + 4) << "\">" << fixed(t, digits) << "</text>\n";
    }
    out << "</g>\n";
}

void marker(std::ostream& out, const Canvas& c, Complex z, const char* label, const char* color)
{
    out << "<circle cx=\"" << fixed(c.px(z.real())) << "\" cy=\"" << fixed(c.py(z.imag()))
        << "\" r=\"6\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>"
        << "<text fill=\"" << color << "\" x=\"" << fixed(c.px(z.real()) + 8) << "\" y=\""
        << fixed(c.py(z.imag()) - 8) << "\">" << label << "</text>\n";
}

} // namespace

PlotWindow fit_window(std::span<const Complex> points, PlotWindow base)
{
    PlotWindow w = base;
    for (Complex z : points) {
        if (!is_finite(z))
            continue;
        w.xmin = std::min(w.xmin, z.real());
        w.xmax = std::max(w.xmax, z.real());
        w.ymin = std::min(w.ymin, z.imag());
        w.ymax = std::max(w.ymax, z.imag());
    }
    const double pad = 0.05 * std::max(w.xmax - w.xmin, w.ymax - w.ymin);
    if (w.xmin < base.xmin) w.xmin -= pad;
    if (w.xmax > base.xmax) w.xmax += pad;
    if (w.ymin < base.ymin) w.ymin -= pad;
    if (w.ymax > base.ymax) w.ymax += pad;
    return w;
}

void write_zeros_svg(std::ostream& out, const ZeroSet& set, Complex a, Complex q, const PlotWindow& window)
{
    const Canvas c(window);
    const std::string meta = "kind=zeros N=" + std::to_string(set.zeros.size()) + " a=" + format_complex(a) +
                             " q=" + format_complex(q) + " max_residual=" + format_real(set.max_residual());
    header(out, c, "Zeros of U_" + std::to_string(set.zeros.size()) + "(x; q), a = " + format_complex(a), meta);
    axes(out, c);
    out << "<g fill=\"#1f4e9c\">\n";
    for (Complex z : set.zeros)
        out << "<circle cx=\"" << fixed(c.px(z.real())) << "\" cy=\"" << fixed(c.py(z.imag())) << "\" r=\"3\"/>\n";
    out << "</g>\n";
    marker(out, c, a, "a", "#c0392b");
    out << "<text x=\"" << fixed(kMargin) << "\" y=\"" << fixed(kMargin - 16) << "\">N = " << set.zeros.size()
        << ", a = " << format_complex(a) << ", q = " << format_complex(q) << "</text>\n";
    out << "</svg>\n";
}

void write_lattice_svg(std::ostream& out, const std::vector<LatticePoint>& points, Complex a, Complex q,
                       std::size_t M)
{
    std::vector<Complex> zs;
    zs.reserve(points.size());
    for (const auto& p : points)
        zs.push_back(p.point);
    const Canvas c(fit_window(zs, PlotWindow{-1.0, 1.0, -1.0, 1.0}));

    const std::string meta = "kind=lattice a=" + format_complex(a) + " q=" + format_complex(q) +
                             " M=" + std::to_string(M) + " points=" + std::to_string(points.size());
    header(out, c, "Spiral lattice {q^k} and {a q^k}", meta);
    axes(out, c);

    for (Branch branch : {Branch::S1, Branch::S2}) {
        const char* color = branch == Branch::S1 ? "#1f4e9c" : "#d35400";
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"0.8\" points=\"";
        bool first = true;
        for (const auto& p : points) {
            if (p.branch != branch)
                continue;
            out << (first ? "" : " ") << fixed(c.px(p.point.real())) << ',' << fixed(c.py(p.point.imag()));
            first = false;
        }
        out << "\"/>\n<g fill=\"" << color << "\">\n";
        for (const auto& p : points)
            if (p.branch == branch)
                out << "<circle cx=\"" << fixed(c.px(p.point.real())) << "\" cy=\"" << fixed(c.py(p.point.imag()))
                    << "\" r=\"2.5\"/>\n";
        out << "</g>\n";
    }
    marker(out, c, Complex(1.0), "1", "#1f4e9c");
    marker(out, c, a, "a", "#c0392b");
    out << "<text x=\"" << fixed(kMargin) << "\" y=\"" << fixed(kMargin - 16) << "\">S1 = {q^k}, S2 = {a q^k}, a = "
        << format_complex(a) << ", q = " << format_complex(q) << ", M = " << M << "</text>\n";
    out << "</svg>\n";
}

} // namespace ascq
