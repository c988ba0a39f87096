#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace turan::testing {

// Every (t, p) instance exercised by the acceptance suite.
inline const std::vector<std::pair<std::uint64_t, std::uint64_t>> kGrid{
    {2, 3}, {2, 5}, {2, 13}, {2, 29}, {2, 61}, {4, 7}, {4, 13}, {4, 37}, {6, 11}, {6, 31}, {8, 29}};

// Smaller instances for unit tests that do quadratic work per graph.
inline const std::vector<std::pair<std::uint64_t, std::uint64_t>> kSmallGrid{
    {2, 3}, {2, 5}, {2, 7}, {2, 13}, {4, 7}, {4, 13}, {6, 11}, {8, 29}, {10, 19}};

}  // namespace turan::testing
