#pragma once
// Text forms of points, number lists, sigma functions and segments.
//
//   point     c1,c2 | base | mu | mu1
//   sigma     FAMILY[:d0,dk]        e.g. prescribed-germ:0.5,-1
//   segment   alpha-mu | alpha-mu1 | standard:P:Q | sigma:SIGMA
//             | pulled:SIGMA | chart:SEGMENT

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "teichlab/teichlab.hpp"

namespace teichlab::cli {

std::vector<double> parse_doubles(std::string_view text, std::string_view what);
double parse_double(std::string_view text, std::string_view what);
BlockPoint parse_point(std::string_view text, std::string_view what);

SigmaFunction parse_sigma(std::string_view text, Modulus k, std::uint64_t seed);
GeodesicSegment parse_segment(std::string_view text, Modulus k, std::uint64_t seed);

}  // namespace teichlab::cli
