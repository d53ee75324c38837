#pragma once

#include "strathom/sset.hpp"

#include <istream>
#include <string>
#include <vector>

namespace strathom {

struct LabeledPointCloud {
    std::vector<std::vector<double>> points;
    std::vector<int> labels;  // indices into the chain 0 < 1 < ...
};

// CSV with a header row; the last column must be named "label". Blank lines are skipped.
LabeledPointCloud load_points(const std::string& path);
LabeledPointCloud parse_points(std::istream& in, const std::string& source = "<stdin>");

// Flag complex of the Euclidean epsilon-graph (distances <= epsilon), simplices up to max_dim.
// Vertices are ordered by label, then input index; vertex i has id "v<i>". P defaults to the
// chain 0 < 1 (longer if the labels need it).
SSet vietoris_rips(const LabeledPointCloud& cloud, double epsilon, int max_dim, int threads = 1);
SSet vietoris_rips(const LabeledPointCloud& cloud, double epsilon, int max_dim, const Poset& P, int threads = 1);

}  // namespace strathom
