#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lgcpalm/geometry.hpp"

namespace lgcp {

/// Finite planar point pattern observed in a rectangular window.
struct PointPattern {
    std::vector<Point2> points;
    Window window;
    std::optional<std::uint64_t> seed; ///< recorded for simulated patterns

    std::size_t size() const { return points.size(); }

    /// Throws if any point falls outside the window or the window is empty.
    void validate() const;
};

/// CSV serialization: comment header carrying the window (and seed when
/// known), one x,y row per point.
///
///   # window: x0 x1 y0 y1
///   # seed: 42
///   x,y
///   0.25,0.75
std::string pattern_to_csv(const PointPattern& pattern);

/// Parse the CSV format above. A missing window declaration, malformed
/// rows, or points outside the window are errors; a pattern with zero
/// points and a valid window is fine.
PointPattern pattern_from_csv(const std::string& text);

PointPattern load_pattern(const std::string& path);
void save_pattern(const PointPattern& pattern, const std::string& path);

} // namespace lgcp
