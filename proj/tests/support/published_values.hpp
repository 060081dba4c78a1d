#pragma once

// Reference numbers for the six-device case study, typed in independently of
// data/case_study_2.json so that tests can check the fixture against them.

#include <array>
#include <cstdint>

namespace iqa::testing {

// Row order DTC, DST, CM, SR, PC, TDA, OT, OS (no CS column was published).
inline constexpr std::array<const char*, 8> kPublishedFactors = {"DTC", "DST", "CM", "SR",
                                                                 "PC",  "TDA", "OT", "OS"};

// Hundredths, one row per device 1..6.
inline constexpr std::array<std::array<std::int64_t, 8>, 6> kPublishedScores = {{
    {56, 62, 34, 48, 77, 55, 84, 26},
    {93, 12, 17, 76, 82, 60, 7, 88},
    {97, 48, 76, 50, 77, 21, 89, 45},
    {91, 16, 60, 98, 19, 44, 80, 64},
    {39, 30, 58, 56, 0, 26, 7, 79},
    {89, 82, 85, 18, 98, 65, 89, 31},
}};

// Published per-device results and aggregates, in hundredths of a percent.
inline constexpr std::array<std::int64_t, 6> kPublishedDeviceIqa = {5437, 5949, 6373,
                                                                    8979, 3819, 6668};
inline constexpr std::int64_t kPublishedIqaI = 6196;
inline constexpr std::int64_t kPublishedIqaII = 5630;
inline constexpr std::int64_t kPublishedIqaIII = 5474;
inline constexpr std::int64_t kPublishedIqaTot = 6204;

}  // namespace iqa::testing
