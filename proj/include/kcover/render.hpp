#pragma once

#include <string>

#include "kcover/io.hpp"

namespace kcover {

// Figure-style drawing of an instance: grid lines at multiples of tau with
// cell id labels, disks stroked, points as dots. With a solution, disk fill
// hue tracks the color id and the stroke dash pattern tracks the color set.
std::string render_svg(const InstanceFile& file, const SolutionFile* solution,
                       double tau);

}  // namespace kcover
