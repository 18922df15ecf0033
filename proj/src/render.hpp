#ifndef GNOMON_RENDER_HPP
#define GNOMON_RENDER_HPP

#include <cstdint>
#include <string>

#include "construction.hpp"

namespace gnomon {

enum class Stage {
    square_sequence, // unit-gnomon buildup of squares 1..y
    gnomon_t,        // square y as generating square + gnomon T
    gnomon_u,        // square z as square x + gnomon U with fillers
};

struct DiagramSpec {
    GnomonDecomposition decomposition;
    // Drawing units per integer unit, as a positive rational.
    std::uint64_t scale_num = 10;
    std::uint64_t scale_den = 1;
    Stage stage = Stage::gnomon_u;
    bool labels = true;
};

// Deterministic SVG document: geometry stays in exact integer units
// inside the viewBox (scale only sizes the canvas), one <rect> per
// region, metadata embedded as an XML comment of key=value lines.
// Throws Error(scale_overflow) when the scaled drawing would exceed
// 10^6 drawing units per side.
std::string render_construction(const DiagramSpec& spec);

} // namespace gnomon

#endif
