#pragma once

#include <string>
#include <vector>

#include "geikit/silhouette.hpp"

namespace geikit {

struct SilhouetteSequence {
    std::string subject_id;
    std::string condition;  // e.g. "nm-01", "bg-01", "cl-01"
    int view_angle = 0;     // degrees
    std::vector<BinarySilhouette> frames;
};

}  // namespace geikit
