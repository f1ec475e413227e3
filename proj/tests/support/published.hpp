#pragma once

// Published per-application hallmarks and classes, plus the published
// corpus-level figures. kMany marks the "N" entry.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "oracle.hpp"

namespace published {

struct Row {
  std::int64_t id;
  std::string_view name;
  oracle::Vec hallmark;
  std::string_view cls;
};

inline constexpr int N = oracle::kMany;

inline const std::array<Row, 33> kTable = {{
    {1, "Slot Machine", {0, 1, 1, 0, 0, 0, 0, 2, 0, 0, 1, 0}, "II"},
    {2, "CAAD 3D Modelling System", {0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "II"},
    {3, "Self-Builder Model (Segal Model)", {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1, 0}, "II"},
    {4, "Marble Answering Machine", {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0}, "II"},
    {5, "Head Prop", {1, 0, 1, 1, 0, 0, 0, 2, 0, 0, 0, 0}, "II"},
    {6, "GraspDraw", {0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0}, "III"},
    {7, "MetaDESK", {1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 1, 0}, "II"},
    {8, "Build-IT", {0, 0, 3, 0, 1, 0, 0, 0, 2, 0, 1, 0}, "III"},
    {9, "Pinwheels", {N, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "I"},
    {10, "Voodoo Dolls", {0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "II"},
    {11, "mediaBlocks", {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}, "IV"},
    {12, "musicBottles", {0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1}, "II"},
    {13, "Urp (Urban Planning Workbench)", {2, 0, 2, 2, 2, 0, 0, 2, 2, 0, 1, 0}, "II"},
    {14, "Senseboard", {0, 1, 1, 0, 2, 0, 0, 0, 0, 0, 1, 1}, "II"},
    {15, "Illuminating Clay", {1, 0, 3, 0, 0, 1, 0, 0, 0, 0, 1, 0}, "II"},
    {16, "AudioPad", {0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 0}, "II"},
    {17, "ReacTable", {0, 1, 3, 0, 4, 0, 0, 0, 0, 0, 1, 0}, "II"},
    {18, "IP Network Design Workbench", {0, 0, 2, 0, 2, 4, 0, 0, 2, 0, 1, 0}, "III"},
    {19, "Query Shapes", {0, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "II"},
    {20, "TUISTER", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, "IV"},
    {21, "I/O Brush", {0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0}, "III"},
    {22, "PICO", {0, 1, 1, 0, 0, 0, 0, 0, 0, 3, 2, 0}, "II"},
    {23, "ArcheoTUI", {0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}, "II"},
    {24, "Slurp", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, "IV"},
    {25, "GeoTUI", {0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0}, "III"},
    {26, "Relief", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "I"},
    {27, "Teegi", {2, 0, 1, 1, 1, 2, 0, 0, 0, 0, 1, 0}, "II"},
    {28, "SoundFORMS", {1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}, "II"},
    {29, "reSpire", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "I"},
    {30, "CairnFORM", {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, "I"},
    {31, "Embodied Axes", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, "IV"},
    {32, "CoDa", {1, 0, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0}, "II"},
    {33, "SABLIER", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, "IV"},
}};

// Term record counts in component order.
inline constexpr std::array<std::size_t, 12> kCoverage = {14, 11, 38, 6, 17, 8, 8, 12, 7, 3, 19, 2};
inline constexpr std::array<std::size_t, 4> kRoleCounts = {63, 31, 27, 24};
inline constexpr std::array<unsigned, 4> kRolePercents = {43, 21, 19, 17};
// I, II, III, IV, unclassified.
inline constexpr std::array<std::size_t, 5> kClasses = {4, 19, 5, 5, 0};

inline constexpr std::size_t kDistinctHallmarks = 28;
inline const std::vector<std::vector<std::int64_t>> kHallmarkClusters = {{2, 19}, {20, 24, 31, 33}, {26, 29}};
inline constexpr std::size_t kDistinctBinary = 26;
inline const std::vector<std::vector<std::int64_t>> kBinaryClusters = {
    {2, 10, 19}, {9, 26, 29}, {20, 24, 31, 33}};

}  // namespace published
