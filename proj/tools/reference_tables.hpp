#pragma once

// Published worked examples: inputs and expected outputs, n = 3 unless noted.

#include <array>
#include <string>
#include <vector>

namespace dsmt::reference {

struct Entry {
  const char* expr;
  double mass;
};

struct BreakdownRow {
  const char* expr;
  int phi;
  double s1, s2, s3, m;
};

inline const std::vector<std::string> kNames3 = {"t1", "t2", "t3"};

// Row order of the published tables ("EMPTY" is the empty set).
inline constexpr std::array<const char*, 19> kRows = {
    "EMPTY",
    "t1&t2&t3",
    "t2&t3",
    "t1&t3",
    "(t1|t2)&t3",
    "t3",
    "t1&t2",
    "(t1|t3)&t2",
    "(t2|t3)&t1",
    "((t1&t2)|t3)&(t1|t2)",
    "(t1&t2)|t3",
    "t2",
    "(t1&t3)|t2",
    "t2|t3",
    "t1",
    "(t2&t3)|t1",
    "t1|t3",
    "t1|t2",
    "t1|t2|t3",
};

// Same 19 elements written the way the element table lists them.
inline constexpr std::array<const char*, 19> kElementTable = {
    "EMPTY",
    "t1&t2&t3",
    "t1&t2",
    "t1&t3",
    "t2&t3",
    "(t1|t2)&t3",
    "(t1|t3)&t2",
    "(t2|t3)&t1",
    "((t1&t2)|t3)&(t1|t2)",
    "t1",
    "t2",
    "t3",
    "(t1&t2)|t3",
    "(t1&t3)|t2",
    "(t2&t3)|t1",
    "t1|t2",
    "t1|t3",
    "t2|t3",
    "t1|t2|t3",
};

using Column = std::array<double, 19>;

// ---- sparse sources, hybrid tables for M1..M7 ----

inline constexpr Column kSparseM1 = {0, 0, 0, .10, 0, .30, .10, 0, 0, 0,
                                     0, .20, 0, 0, .10, 0, .10, .10, 0};
inline constexpr Column kSparseM2 = {0, 0, .20, 0, 0, .10, .20, 0, 0, 0,
                                     0, .10, 0, 0, .20, 0, .20, 0, 0};
inline constexpr Column kSparseClassic = {0, .16, .19, .12, .01, .10, .22, .05, 0, 0,
                                          0, .03, 0, 0, .08, .02, .02, 0, 0};

struct ModelSpec {
  const char* id;
  std::vector<const char*> constraints;
};

inline const std::vector<ModelSpec> kModels = {
    {"M1", {"t1&t2&t3"}},
    {"M2", {"t1&t2"}},
    {"M3", {"(t1|t3)&t2"}},
    {"M4", {"((t1&t2)|t3)&(t1|t2)"}},
    {"M5", {"t1"}},
    {"M6", {"t1", "t2"}},
    {"M7", {"(t1&t2)|t3"}},
};

inline const std::vector<BreakdownRow> kBreakdownM1 = {
    {"EMPTY", 0, 0, 0, 0, 0},
    {"t1&t2&t3", 0, .16, 0, 0, 0},
    {"t2&t3", 1, .19, 0, 0, .19},
    {"t1&t3", 1, .12, 0, 0, .12},
    {"(t1|t2)&t3", 1, .01, 0, .02, .03},
    {"t3", 1, .10, 0, 0, .10},
    {"t1&t2", 1, .22, 0, 0, .22},
    {"(t1|t3)&t2", 1, .05, 0, .02, .07},
    {"(t2|t3)&t1", 1, 0, 0, .02, .02},
    {"((t1&t2)|t3)&(t1|t2)", 1, 0, 0, 0, 0},
    {"(t1&t2)|t3", 1, 0, 0, .07, .07},
    {"t2", 1, .03, 0, 0, .03},
    {"(t1&t3)|t2", 1, 0, 0, .01, .01},
    {"t2|t3", 1, 0, 0, 0, 0},
    {"t1", 1, .08, 0, 0, .08},
    {"(t2&t3)|t1", 1, .02, 0, .02, .04},
    {"t1|t3", 1, .02, 0, 0, .02},
    {"t1|t2", 1, 0, 0, 0, 0},
    {"t1|t2|t3", 1, 0, 0, 0, 0},
};

// The published table leaves out the t1&t2 row.
inline const std::vector<BreakdownRow> kBreakdownM2 = {
    {"EMPTY", 0, 0, 0, 0, 0},
    {"t1&t2&t3", 0, .16, 0, 0, 0},
    {"t2&t3", 1, .19, 0, 0, .19},
    {"t1&t3", 1, .12, 0, 0, .12},
    {"(t1|t2)&t3", 1, .01, 0, .02, .03},
    {"t3", 1, .10, 0, 0, .10},
    {"(t1|t3)&t2", 1, .05, 0, .02, .07},
    {"(t2|t3)&t1", 1, 0, 0, .02, .02},
    {"((t1&t2)|t3)&(t1|t2)", 1, 0, 0, 0, 0},
    {"(t1&t2)|t3", 1, 0, 0, .07, .07},
    {"t2", 1, .03, 0, .05, .08},
    {"(t1&t3)|t2", 1, 0, 0, .01, .01},
    {"t2|t3", 1, 0, 0, 0, 0},
    {"t1", 1, .08, 0, .04, .12},
    {"(t2&t3)|t1", 1, .02, 0, .02, .04},
    {"t1|t3", 1, .02, 0, .04, .06},
    {"t1|t2", 1, 0, .02, .07, .09},
    {"t1|t2|t3", 1, 0, 0, 0, 0},
};

inline const std::vector<BreakdownRow> kBreakdownM3 = {
    {"EMPTY", 0, 0, 0, 0, 0},
    {"t1&t2&t3", 0, .16, 0, 0, 0},
    {"t2&t3", 0, .19, 0, 0, 0},
    {"t1&t3", 1, .12, 0, 0, .12},
    {"(t1|t2)&t3", 1, .01, 0, .02, .03},
    {"t3", 1, .10, 0, .06, .16},
    {"t1&t2", 0, .22, 0, .02, 0},
    {"(t1|t3)&t2", 0, .05, 0, .02, 0},
    {"(t2|t3)&t1", 1, 0, 0, .02, .02},
    {"((t1&t2)|t3)&(t1|t2)", 1, 0, 0, 0, 0},
    {"(t1&t2)|t3", 1, 0, 0, .07, .07},
    {"t2", 1, .03, 0, .09, .12},
    {"(t1&t3)|t2", 1, 0, 0, .01, .01},
    {"t2|t3", 1, 0, 0, .05, .05},
    {"t1", 1, .08, 0, .04, .12},
    {"(t2&t3)|t1", 1, .02, 0, .02, .04},
    {"t1|t3", 1, .02, 0, .06, .08},
    {"t1|t2", 1, 0, .02, .09, .11},
    {"t1|t2|t3", 1, 0, .02, .05, .07},
};

inline const std::vector<BreakdownRow> kBreakdownM4 = {
    {"EMPTY", 0, 0, 0, 0, 0},
    {"t1&t2&t3", 0, .16, 0, 0, 0},
    {"t2&t3", 0, .19, 0, 0, 0},
    {"t1&t3", 0, .12, 0, 0, 0},
    {"(t1|t2)&t3", 0, .01, 0, .02, 0},
    {"t3", 1, .10, 0, .07, .17},
    {"t1&t2", 0, .22, 0, .02, 0},
    {"(t1|t3)&t2", 0, .05, 0, .02, 0},
    {"(t2|t3)&t1", 0, 0, 0, .02, 0},
    {"((t1&t2)|t3)&(t1|t2)", 0, 0, 0, 0, 0},
    {"(t1&t2)|t3", 1, 0, 0, .07, .07},
    {"t2", 1, .03, 0, .09, .12},
    {"(t1&t3)|t2", 1, 0, 0, .01, .01},
    {"t2|t3", 1, 0, 0, .05, .05},
    {"t1", 1, .08, 0, .06, .14},
    {"(t2&t3)|t1", 1, .02, 0, .02, .04},
    {"t1|t3", 1, .02, 0, .15, .17},
    {"t1|t2", 1, 0, .02, .09, .11},
    {"t1|t2|t3", 1, 0, .06, .06, .12},
};

// Only the total-ignorance row of the M6 table is legible.
inline const std::vector<BreakdownRow> kBreakdownM6 = {
    {"t1|t2|t3", 1, 0, .36, .08, .44},
};

// Stated S3 column totals.
inline constexpr double kS3SumM1 = .16, kS3SumM2 = .38, kS3SumM3 = .62, kS3SumM4 = .75,
                        kS3SumM5 = .58;

inline const std::vector<Entry> kCompressedM2 = {
    {"t2&t3", .26}, {"t1&t3", .14}, {"(t1|t2)&t3", .03}, {"t3", .17},
    {"t2", .08},    {"(t1&t3)|t2", .01}, {"t2|t3", 0},   {"t1", .12},
    {"(t2&t3)|t1", .04}, {"t1|t3", .06}, {"t1|t2", .09}, {"t1|t2|t3", 0},
};
inline const std::vector<Entry> kCompressedM3 = {
    {"t1&t3", .17}, {"t3", .23},   {"t2", .12},    {"(t1&t3)|t2", .01}, {"t2|t3", .05},
    {"t1", .16},    {"t1|t3", .08}, {"t1|t2", .11}, {"t1|t2|t3", .07},
};
inline const std::vector<Entry> kCompressedM4 = {
    {"t3", .24}, {"t2", .13}, {"t2|t3", .05}, {"t1", .18},
    {"t1|t3", .17}, {"t1|t2", .11}, {"t1|t2|t3", .12},
};
inline const std::vector<Entry> kCompressedM5 = {
    {"t2&t3", .33}, {"t3", .39}, {"t2", .24}, {"t2|t3", .04},
};
inline const std::vector<Entry> kCompressedM6 = {{"t3", 1.0}};
inline const std::vector<Entry> kCompressedM7 = {
    {"t2", .24}, {"t1", .43}, {"t1|t2", .33},
};

// Number of classes (EMPTY included) per model M2..M7.
inline constexpr std::array<std::size_t, 6> kClassCounts = {13, 10, 8, 5, 2, 4};

struct MatrixSpec {
  std::vector<const char*> basis;
  std::size_t rows;
};

inline const std::vector<MatrixSpec> kMatrices = {
    {{"<1>", "<2>", "<3>", "<12>", "<13>", "<23>"}, 18},  // M1
    {{"<1>", "<2>", "<3>", "<13>", "<23>"}, 13},          // M2
    {{"<1>", "<2>", "<3>", "<13>"}, 10},                  // M3
    {{"<1>", "<2>", "<3>"}, 8},                           // M4
    {{"<2>", "<3>", "<23>"}, 5},                          // M5
    {{"<3>"}, 2},                                         // M6
    {{"<1>", "<2>"}, 4},                                  // M7
};

// ---- general sources (every non-empty element focal) ----

inline constexpr Column kGeneralM1 = {0,   .01, .04, .03, .01, .03, .02, .02, .03, .04,
                                      .04, .02, .01, .20, .01, .02, .04, .03, .40};
inline constexpr Column kGeneralM2 = {0,   .40, .03, .04, .02, .04, .20, .01, .04, .03,
                                      .03, .01, .02, .02, .02, .01, .03, .04, .01};
inline constexpr Column kGeneralClassic = {0,     .4389, .0410, .0497, .0257, .0311, .1846,
                                           .0156, .0459, .0384, .0296, .0084, .0221, .0140,
                                           .0109, .0090, .0136, .0175, .0040};

// Uncompressed hybrid results per model, rows as kRows.
inline constexpr std::array<Column, 7> kGeneralHybrid = {{
    {0, 0, .0573, .0621, .0324, .0435, .1946, .0323, .0651, .0607, .0527, .0165, .0274, .0942,
     .0151, .0182, .0299, .0299, .1681},
    {0, 0, .0573, .0621, .0324, .0435, 0, .0365, .0719, .0704, .0613, .0207, .0309, .1346,
     .0175, .0229, .0385, .0412, .2583},
    {0, 0, 0, .0621, .0335, .0460, 0, 0, .0719, .0743, .0658, .0221, .0340, .1471, .0175,
     .0243, .0419, .0452, .3143},
    {0, 0, 0, 0, 0, .0494, 0, 0, 0, 0, .0792, .0221, .0375, .1774, .0195, .0295, .0558, .0544,
     .4752},
    {0, 0, .0573, 0, .0334, .0459, 0, .0365, 0, .0764, .0687, .0207, .0329, .1518, 0, .0271,
     .0489, .0498, .3506},
    {0, 0, 0, 0, 0, .0494, 0, 0, 0, 0, .0792, 0, 0, .1850, 0, 0, .0589, 0, .6275},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, .0221, .0375, .1953, .0195, .0295, .0631, .0544, .5786},
}};

inline const std::array<std::vector<Entry>, 7> kGeneralCompressed = {{
    {},  // M1: identical to the uncompressed column
    {{"t2&t3", .0938}, {"t1&t3", .1340}, {"(t1|t2)&t3", .1028}, {"t3", .1048},
     {"t2", .0207}, {"(t1&t3)|t2", .0309}, {"t2|t3", .1346}, {"t1", .0175},
     {"(t2&t3)|t1", .0229}, {"t1|t3", .0385}, {"t1|t2", .0412}, {"t1|t2|t3", .2583}},
    {{"t1&t3", .2418}, {"t3", .1118}, {"t2", .0221}, {"(t1&t3)|t2", .0340},
     {"t2|t3", .1471}, {"t1", .0418}, {"t1|t3", .0419}, {"t1|t2", .0452},
     {"t1|t2|t3", .3143}},
    {{"t3", .1286}, {"t2", .0596}, {"t2|t3", .1774}, {"t1", .0490}, {"t1|t3", .0558},
     {"t1|t2", .0544}, {"t1|t2|t3", .4752}},
    {{"t2&t3", .2307}, {"t3", .1635}, {"t2", .1034}, {"t2|t3", .5024}},
    {{"t3", 1.0}},
    {{"t2", .2549}, {"t1", .1121}, {"t1|t2", .6330}},
}};

// ---- dynamic examples ----

struct SourceSpec {
  std::vector<std::string> frame;
  std::vector<Entry> masses;
};

inline const SourceSpec kDyn1M1 = {kNames3, {{"t1", .5}, {"t3", .5}}};
inline const SourceSpec kDyn1M2 = {kNames3, {{"t2", .5}, {"t3", .5}}};
inline const std::vector<Entry> kDyn1Classic = {
    {"t1&t2", .25}, {"t1&t3", .25}, {"t2&t3", .25}, {"t3", .25}};
inline const std::vector<Entry> kDyn1Hybrid = {
    {"t1&t2", .25}, {"t2&t3", .25}, {"t3", .25}, {"t1|t3", .25}};

inline const std::vector<std::string> kNames2 = {"t1", "t2"};
inline const std::vector<std::string> kNames4 = {"t1", "t2", "t3", "t4"};

inline const SourceSpec kDyn31M1 = {kNames2, {{"t1", .1}, {"t2", .2}, {"t1|t2", .3}, {"t1&t2", .4}}};
inline const SourceSpec kDyn31M2 = {kNames2, {{"t1", .5}, {"t2", .3}, {"t1|t2", .1}, {"t1&t2", .1}}};
inline const std::vector<Entry> kDyn31M12 = {
    {"t1", .21}, {"t2", .17}, {"t1|t2", .03}, {"t1&t2", .59}};
inline const SourceSpec kDyn31M3 = {kNames3, {{"t3", .4}, {"t1&t3", .3}, {"t2|t3", .3}}};
inline const std::vector<Entry> kDyn31M123 = {
    {"t1&t2&t3", .464}, {"t2&t3", .068},      {"t1&t3", .156}, {"(t1|t2)&t3", .012},
    {"t1&t2", .177},    {"t1&(t2|t3)", .063}, {"t2", .051},    {"(t1&t3)|t2", .009},
};
inline const std::vector<Entry> kDyn32 = {
    {"t1", .147}, {"t2", .179}, {"t1|t2", .021}, {"t1&t2", .653}};

inline const SourceSpec kDyn33M3 = {kNames4,
                                    {{"t3", .5}, {"t4", .3}, {"t3&t4", .1}, {"t3|t4", .1}}};
inline const std::vector<Entry> kDyn33M123 = {
    {"t1&t3", .105},        {"t1&t4", .063},          {"t1&(t3|t4)", .021},
    {"t1&t3&t4", .021},     {"t2&t3", .085},          {"t2&t4", .051},
    {"t2&(t3|t4)", .017},   {"t2&t3&t4", .017},       {"t3&(t1|t2)", .015},
    {"t4&(t1|t2)", .009},   {"(t1|t2)&(t3|t4)", .003}, {"(t1|t2)&(t3&t4)", .003},
    {"t1&t2&t3", .295},     {"t1&t2&t4", .177},       {"(t1&t2)&(t3|t4)", .059},
    {"t1&t2&t3&t4", .059},
};

inline const SourceSpec kDyn34M1 = {kNames2, {{"t1", .6}, {"t2", .4}}};
inline const SourceSpec kDyn34M2 = {kNames2, {{"t1", .7}, {"t2", .3}}};
inline const std::vector<Entry> kDyn34M12 = {{"t1", .42}, {"t2", .12}, {"t1&t2", .46}};
inline const SourceSpec kDyn34M3 = {kNames3, {{"t1", .5}, {"t2", .2}, {"t3", .3}}};
inline const std::vector<Entry> kDyn34M123 = {
    {"t1", .210}, {"t2", .024}, {"t1&t2", .466}, {"t1&t3", .126}, {"t2&t3", .036},
    {"t1&t2&t3", .138},
};
inline const std::vector<Entry> kDyn34 = {
    {"t1", .210},  {"t2", .024},  {"t1&t2", .466}, {"t2&t3", .036}, {"(t1&t2)|t3", .138},
    {"t1|t3", .126},
};
inline const std::vector<Entry> kDyn35 = {{"t1", .336}, {"t2", .060}, {"t1&t2", .604}};

inline const SourceSpec kDyn36M1 = {kNames4, {{"t1", .5}, {"t2", .4}, {"t1&t2", .1}}};
inline const SourceSpec kDyn36M2 = {kNames4, {{"t1", .3}, {"t2", .2}, {"t1&t3", .1}, {"t4", .4}}};
inline const std::vector<Entry> kDyn36M12 = {
    {"t1", .15},    {"t2", .08},    {"t1&t2", .27},    {"t1&t3", .05},
    {"t1&t4", .20}, {"t2&t4", .16}, {"t1&t2&t3", .05}, {"t1&t2&t4", .04},
};
inline const std::vector<Entry> kDyn36 = {
    {"t1", .23},    {"t2", .14},    {"t4", .04},    {"t1&t4", .20},
    {"t2&t4", .16}, {"t1|t2", .22}, {"t1|t2|t3", .01},
};

inline const SourceSpec kDyn37M1 = {
    kNames4, {{"t1", .2}, {"t2", .4}, {"t1&t2", .1}, {"t1&t3", .2}, {"t4", .1}}};
inline const SourceSpec kDyn37M2 = {
    kNames4, {{"t1", .1}, {"t2", .3}, {"t1&t2", .2}, {"t1&t3", .1}, {"t4", .3}}};
inline const std::vector<Entry> kDyn37M12 = {
    {"t1", .02},       {"t2", .12},       {"t1&t2", .28},    {"t1&t3", .06},
    {"t4", .03},       {"t1&t4", .07},    {"t2&t4", .15},    {"t1&t2&t3", .15},
    {"t1&t2&t4", .05}, {"t1&t3&t4", .07},
};
inline const std::vector<Entry> kDyn37 = {
    {"t1", .11},    {"t2", .33},    {"t4", .15},    {"t1&t4", .07},
    {"t2&t4", .15}, {"t1|t2", .12}, {"t1|t3", .02}, {"t1|t2|t3", .05},
};

// Constraint sets of the dynamic examples.
inline const std::vector<std::string> kDyn1Constraints = {"t1&t3"};
inline const std::vector<std::string> kDyn32Constraints = {"t3"};
inline const std::vector<std::string> kDyn33Constraints = {"t3", "t4"};
inline const std::vector<std::string> kDyn34Constraints = {"t1&t3"};
inline const std::vector<std::string> kDyn35Constraints = {"t3"};
inline const std::vector<std::string> kDyn36Constraints = {"t1&t2", "t1&t3"};

}  // namespace dsmt::reference
