#pragma once

#include <cstdint>
#include <string>

#include "rcnn/grid.hpp"
#include "rcnn/network.hpp"

namespace rcnn {

/// Binary 8-bit grayscale PGM ("P5", maxval 255). Header comments are
/// accepted; anything else raises ParseError with the byte offset.
Grid<uint8_t> load_pgm(const std::string& path);
void save_pgm(const Grid<uint8_t>& image, const std::string& path);

/// PGM -> stimulus (g -> max(g/255, 1e-3)) and back (rounded).
StimulusField load_image(const std::string& path);
void save_image(const Grid<double>& field, const std::string& path);

/// 0/1 mask stored as 0/255.
void save_mask(const Grid<uint8_t>& mask, const std::string& path);

}  // namespace rcnn
