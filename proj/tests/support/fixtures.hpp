#pragma once

// The worked tree-pair example used across the test suite: the element with
// normal form x0^2 x1 x2 x4 x5 x7 x8 x9^-1 x7^-1 x3^-1 x2^-1 x0^-2 on twelve
// leaves. Serializations derived by hand from the published leaf exponents.

#include <cstdint>
#include <vector>

#include "thompson/metric.hpp"

namespace thompson::testing {

inline constexpr const char* kFig1Text =
    "x0^2 x1 x2 x4 x5 x7 x8 x9^-1 x7^-1 x3^-1 x2^-1 x0^-2";

inline constexpr const char* kFig1Neg = "11100101001010110011000";
inline constexpr const char* kFig1Pos = "11101010010100110100100";

inline const std::vector<std::uint64_t> kFig1NegExponents = {2, 0, 1, 1, 0, 0,
                                                             0, 1, 0, 1, 0, 0};
inline const std::vector<std::uint64_t> kFig1PosExponents = {2, 1, 1, 0, 1, 1,
                                                             0, 1, 1, 0, 0, 0};

inline const std::vector<CaretType> kFig1NegTypes = {
    CaretType::L0, CaretType::LL, CaretType::IR, CaretType::I0,
    CaretType::LL, CaretType::RNI, CaretType::RI, CaretType::I0,
    CaretType::RI, CaretType::I0, CaretType::R0};

inline const std::vector<CaretType> kFig1PosTypes = {
    CaretType::L0, CaretType::IR, CaretType::I0, CaretType::LL,
    CaretType::IR, CaretType::I0, CaretType::LL, CaretType::IR,
    CaretType::I0, CaretType::R0, CaretType::R0};

inline const std::vector<unsigned> kFig1Weights = {0, 2, 4, 2, 2, 1, 1, 4, 3, 1, 0};

inline constexpr std::uint64_t kFig1Length = 20;

}  // namespace thompson::testing
