#pragma once

#include <string>
#include <utility>
#include <vector>

namespace topkgan::svg {

struct ScatterSeries {
    std::string label;
    std::string color;
    double radius = 1.5;
    std::vector<std::pair<double, double>> points;
};

/// Square scatter plot; axes are fitted to the union of all series.
std::string scatter(const std::string& title, const std::vector<ScatterSeries>& series);

/// One bar chart; NaN values are drawn as empty slots.
struct BarPanel {
    std::string title;
    std::vector<std::string> labels;
    std::vector<double> values;
};

/// Panels side by side sharing one y-range (which always includes 0).
std::string bar_panels(const std::string& title, const std::string& y_label,
                       const std::vector<BarPanel>& panels);

struct LineSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

std::string line_chart(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<LineSeries>& series);

}  // namespace topkgan::svg
