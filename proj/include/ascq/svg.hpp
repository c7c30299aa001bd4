#pragma once

#include "ascq/core.hpp"
#include "ascq/qlattice.hpp"
#include "ascq/zeros.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace ascq
{

struct PlotWindow
{
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
};

/// Smallest window containing `base` and every point, padded by 5% on the sides that grew.
PlotWindow fit_window(std::span<const Complex> points, PlotWindow base);

/// Self-contained scatter of the zeros with axes, ticks and the point a highlighted.
void write_zeros_svg(std::ostream& out, const ZeroSet& set, Complex a, Complex q, const PlotWindow& window);

/// Both spirals S1 = {q^k} and S2 = {a q^k}, points joined in k order.
void write_lattice_svg(std::ostream& out, const std::vector<LatticePoint>& points, Complex a, Complex q,
                       std::size_t M);

} // namespace ascq
