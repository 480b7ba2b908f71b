#pragma once

// Published reference values the suites compare against.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace refdata {

using Pair = std::pair<long, long>;
using Trip = std::array<long, 3>;

// Sorted Pell solutions J for each R, first six.
inline const std::vector<std::pair<long, std::vector<long>>> kPellRows = {
    {1, {1, 2, 5, 13, 34, 89}},
    {2, {1, 5, 29, 169, 985, 5741}},
    {5, {1, 2, 13, 29, 194, 433}},
    {13, {1, 5, 34, 194, 1325, 7561}},
    {29, {2, 5, 169, 433, 14701, 37666}},
    {34, {1, 13, 89, 1325, 9077, 135137}},
    {194, {5, 13, 2897, 7561, 1686049, 4400489}},
    {433, {5, 29, 6466, 37666, 8399329, 48928105}},
    {169, {2, 29, 985, 14701, 499393, 7453378}},
    {89, {1, 34, 233, 9077, 62210, 2423525}},
    {1325, {13, 34, 51641, 135137, 205272962, 537169541}},
    {7561, {13, 194, 294685, 4400489, 6684339842, 99816291793}},
};

// Head triplet, left pattern, right pattern (one period each).
struct ParityRow {
  Trip head;
  int type;
  std::array<int, 3> left;
  std::array<int, 3> right;
};
inline const std::vector<ParityRow> kParityPatterns = {
    {{1, 13, 5}, 1, {4, 2, 1}, {4, 3, 1}},
    {{34, 1325, 13}, 2, {2, 1, 4}, {1, 4, 3}},
    {{1, 5, 2}, 3, {1, 4, 2}, {3, 1, 4}},
    {{13, 194, 5}, 4, {3, 3, 3}, {2, 2, 2}},
};

// Region number -> cycle lengths for the last 1, 2, 3, 4 digits.
inline const std::vector<std::pair<long, std::array<std::uint64_t, 4>>> kCycleLengths = {
    {1, {30, 150, 750, 7500}},    {2, {6, 30, 300, 3000}},        {5, {12, 60, 300, 1500}},
    {13, {3, 15, 75, 750}},       {29, {15, 75, 375, 3750}},      {34, {5, 25, 500, 5000}},
    {194, {5, 25, 500, 5000}},    {433, {3, 3, 30, 300}},         {169, {15, 75, 750, 7500}},
    {89, {15, 75, 750, 7500}},    {1325, {12, 12, 60, 300}},      {7561, {30, 150, 750, 7500}},
    {2897, {6, 30, 150, 1500}},   {6466, {10, 50, 500, 5000}},    {37666, {10, 50, 500, 5000}},
    {14701, {30, 150, 750, 3750}}, {985, {12, 60, 300, 1500}},    {233, {3, 3, 30, 300}},
    {9077, {6, 30, 150, 750}},    {135137, {6, 30, 150, 1500}},
};

// R mod 20 -> permitted (1, 2, 3)-digit cycle-length patterns.
inline const std::map<int, std::set<std::array<std::uint64_t, 3>>> kPatternsByResidue = {
    {2, {{6, 6, 12}, {6, 6, 60}, {6, 30, 300}}},
    {18, {{3, 3, 12}, {3, 3, 60}, {3, 15, 300}}},
    {10, {{4, 4, 4}, {4, 4, 20}, {4, 20, 100}}},
    {6, {{10, 50, 500}}},
    {14, {{5, 25, 500}}},
    {13, {{3, 3, 3}, {3, 3, 6}, {3, 3, 15}, {3, 3, 30}, {3, 15, 75}}},
    {17, {{6, 6, 6}, {6, 6, 30}, {6, 30, 150}}},
    {5, {{12, 12, 12}, {12, 12, 60}, {12, 60, 300}}},
    {1, {{30, 150, 750}}},
    {9, {{15, 75, 375}, {15, 75, 750}}},
};

// Three-digit palindromic cycles: head, left {first four}, left {last four}.
// The right cycle is the left one reversed.
struct PalindromeRow {
  Trip head;
  std::array<long, 4> left_start;
  std::array<long, 4> left_end;
};
inline const std::vector<PalindromeRow> kPalindromes = {
    {{1, 5, 2}, {1, 13, 194, 897}, {466, 433, 29, 2}},
    {{1, 13, 5}, {1, 34, 325, 641}, {685, 561, 194, 5}},
    {{5, 29, 2}, {5, 433, 666, 509}, {818, 701, 169, 2}},
    {{1, 34, 13}, {1, 89, 77, 765}, {649, 137, 325, 13}},
    {{13, 194, 5}, {13, 561, 489, 37}, {621, 49, 897, 5}},
    {{5, 433, 29}, {5, 466, 329, 905}, {729, 105, 666, 29}},
    {{29, 169, 2}, {29, 701, 378, 945}, {266, 393, 985, 2}},
    {{1, 89, 34}, {1, 233, 210, 837}, {98, 525, 77, 34}},
    {{34, 1325, 13}, {34, 137, 541, 338}, {309, 962, 641, 13}},
    {{13, 7561, 194}, {13, 685, 842, 401}, {130, 793, 489, 194}},
    {{194, 2897, 5}, {194, 49, 665, 466}, {825, 346, 261, 5}},
    {{5, 6466, 433}, {5, 557, 681, 481}, {253, 509, 329, 433}},
    {{433, 37666, 29}, {433, 105, 357, 181}, {585, 953, 509, 29}},
    {{29, 14701, 169}, {29, 818, 225, 357}, {417, 765, 378, 169}},
};

// Cycle length -> last digits of the final six cycle members.
inline const std::vector<std::pair<std::uint64_t, std::array<std::uint64_t, 6>>> kFibonacciEndpoints = {
    {30, {41, 62, 45, 73, 74, 49}},
    {150, {201, 802, 205, 813, 234, 889}},
    {750, {1001, 4002, 1005, 9013, 6034, 9089}},
    {7500, {10001, 40002, 10005, 90013, 60034, 90089}},
    {75000, {100001, 400002, 100005, 900013, 600034, 900089}},
    {750000, {1000001, 4000002, 1000005, 9000013, 6000034, 9000089}},
    {7500000, {10000001, 40000002, 10000005, 90000013, 60000034, 90000089}},
    {75000000, {100000001, 400000002, 100000005, 900000013, 600000034, 900000089}},
};
inline const std::vector<std::pair<std::uint64_t, std::array<std::uint64_t, 6>>> kPellEndpoints = {
    {6, {41, 85, 69, 29, 5, 1}},
    {30, {701, 905, 729, 469, 85, 41}},
    {300, {7001, 9005, 7029, 3169, 1985, 8741}},
    {3000, {70001, 90005, 70029, 30169, 10985, 35741}},
    {30000, {700001, 900005, 700029, 300169, 100985, 305741}},
    {300000, {7000001, 9000005, 7000029, 3000169, 1000985, 3005741}},
    {3000000, {70000001, 90000005, 70000029, 30000169, 10000985, 30005741}},
    {30000000, {700000001, 900000005, 700000029, 300000169, 100000985, 300005741}},
};

inline const std::vector<std::uint64_t> kEvenFibonacciCycle = {0, 1, 3, 8, 1, 5, 4, 7, 7, 4, 5, 1, 8, 3, 1,
                                                               0, 9, 7, 2, 9, 5, 6, 3, 3, 6, 5, 9, 2, 7, 9};
inline const std::vector<std::uint64_t> kEvenPellCycle = {0, 2, 2, 0, 8, 8};

inline const std::vector<std::uint64_t> kFirstPalindrome14701 = {
    29, 18, 25, 57, 46, 81, 97, 10, 33, 89, 34, 13, 5, 2, 1,
    1,  2,  5,  13, 34, 89, 33, 10, 97, 81, 46, 57, 25, 18, 29};
inline const std::vector<std::uint64_t> kLucasAscending = {1, 3, 4, 7, 1, 8, 9, 7, 6, 3, 9, 2};
inline const std::vector<std::uint64_t> kLucasDescending = {2, 9, 3, 6, 7, 9, 8, 1, 7, 4, 3, 1};

// Farey head (a, b, x, y, c, d) and edge functions (p k + q)/(r k + s).
struct FareyRow {
  long R;
  std::array<long, 6> head;
  std::array<long, 4> left;
  std::array<long, 4> right;
};
inline const std::vector<FareyRow> kFarey = {
    {5, {0, 1, 1, 2, 1, 1}, {1, 0, 2, 1}, {1, 1, 2, 1}},
    {13, {0, 1, 1, 3, 1, 2}, {1, 0, 3, 1}, {1, 1, 3, 2}},
    {29, {1, 2, 2, 3, 1, 1}, {2, 1, 3, 2}, {2, 1, 3, 1}},
    {34, {0, 1, 1, 4, 1, 3}, {1, 0, 4, 1}, {1, 1, 4, 3}},
    {194, {1, 3, 2, 5, 1, 2}, {2, 1, 5, 3}, {2, 1, 5, 2}},
    {433, {1, 2, 3, 5, 2, 3}, {3, 1, 5, 2}, {3, 2, 5, 3}},
    {169, {2, 3, 3, 4, 1, 1}, {3, 2, 4, 3}, {3, 1, 4, 1}},
    {89, {0, 1, 1, 5, 1, 4}, {1, 0, 5, 1}, {1, 1, 5, 4}},
    {1325, {1, 4, 2, 7, 1, 3}, {2, 1, 7, 4}, {2, 1, 7, 3}},
    {7561, {1, 3, 3, 8, 2, 5}, {3, 1, 8, 3}, {3, 2, 8, 5}},
    {2897, {2, 5, 3, 7, 1, 2}, {3, 2, 7, 5}, {3, 1, 7, 2}},
    {6466, {1, 2, 4, 7, 3, 5}, {4, 1, 7, 2}, {4, 3, 7, 5}},
    {37666, {3, 5, 5, 8, 2, 3}, {5, 3, 8, 5}, {5, 2, 8, 3}},
    {14701, {2, 3, 5, 7, 3, 4}, {5, 2, 7, 3}, {5, 3, 7, 4}},
    {985, {3, 4, 4, 5, 1, 1}, {4, 3, 5, 4}, {4, 1, 5, 1}},
    {233, {0, 1, 1, 6, 1, 5}, {1, 0, 6, 1}, {1, 1, 6, 5}},
};

// Triplet, region pair, sibling pair for the first column of Fibonacci-edge regions.
struct DecompositionRow {
  Trip t;
  Pair region;
  long sibling;
  Pair sibling_pair;
};
inline const std::vector<DecompositionRow> kUniqueDecompositions = {
    {{1, 5, 2}, {1, 2}, 1, {0, 1}},
    {{1, 13, 5}, {2, 3}, 2, {1, 1}},
    {{1, 34, 13}, {3, 5}, 5, {1, 2}},
    {{1, 89, 34}, {5, 8}, 13, {2, 3}},
    {{1, 233, 89}, {8, 13}, 34, {3, 5}},
};

// Left and right edge triplets of region 5 with their special squares.
inline const std::vector<std::pair<Trip, Pair>> kRegion5Squares = {
    {{1, 13, 5}, {2, 3}},          {{13, 194, 5}, {5, 13}},     {{194, 2897, 5}, {31, 44}},
    {{2897, 43261, 5}, {75, 194}}, {{43261, 646018, 5}, {463, 657}},
    {{5, 29, 2}, {2, 5}},          {{5, 433, 29}, {12, 17}},    {{5, 6466, 433}, {29, 75}},
    {{5, 96557, 6466}, {179, 254}}, {{5, 1441889, 96557}, {433, 1120}},
};

struct ListsRow {
  Trip head;
  Pair alpha, beta, gamma, delta;
};
inline const std::vector<ListsRow> kLeftLists = {
    {{1, 5, 2}, {2, 3}, {5, 13}, {-1, 1}, {0, 1}},
    {{1, 13, 5}, {3, 5}, {13, 34}, {2, -1}, {0, 1}},
    {{5, 29, 2}, {12, 17}, {75, 179}, {-1, 1}, {1, 2}},
    {{1, 34, 13}, {5, 8}, {34, 89}, {-3, 2}, {0, 1}},
    {{13, 194, 5}, {44, 75}, {1208, 1715}, {2, -1}, {2, 3}},
    {{5, 433, 29}, {29, 75}, {1120, 2673}, {-5, 2}, {1, 2}},
    {{29, 169, 2}, {70, 99}, {1043, 2523}, {-1, 1}, {2, 5}},
};
inline const std::vector<ListsRow> kRightLists = {
    {{1, 5, 2}, {2, 5}, {12, 17}, {1, 0}, {1, 1}},
    {{1, 13, 5}, {5, 13}, {44, 75}, {1, 0}, {1, 2}},
    {{5, 29, 2}, {5, 12}, {70, 99}, {-2, 1}, {1, 1}},
    {{1, 34, 13}, {13, 34}, {196, 311}, {1, 0}, {2, 3}},
    {{13, 194, 5}, {31, 44}, {657, 1120}, {3, -2}, {1, 2}},
    {{5, 433, 29}, {75, 179}, {2523, 6524}, {-2, 1}, {2, 5}},
    {{29, 169, 2}, {12, 29}, {408, 577}, {5, -2}, {1, 1}},
};

// Region 5 sequence-function outputs: n, left(+n), right(+n), left(-n), right(-n).
struct KsfRow {
  long n;
  Pair left_pos, right_pos, left_neg, right_neg;
};
inline const std::vector<KsfRow> kRegion5Ksf = {
    {1, {2, 3}, {2, 5}, {-17, 12}, {13, -5}},
    {3, {31, 44}, {29, 75}, {-254, 179}, {194, -75}},
    {5, {463, 657}, {433, 1120}, {-3793, 2673}, {2897, -1120}},
    {2, {5, 13}, {12, 17}, {-5, 2}, {3, -2}},
    {4, {75, 194}, {179, 254}, {-75, 29}, {44, -31}},
    {6, {1120, 2897}, {2673, 3793}, {-1120, 433}, {657, -463}},
};

// Two-digit special-square cycles: left start (m = 0..4), right end (m = -5..-1).
struct SquarePalindromeRow {
  Trip head;
  std::array<Pair, 5> left_start;
  std::array<Pair, 5> right_end;
};
inline const std::vector<SquarePalindromeRow> kSquarePalindromes = {
    {{1, 5, 2}, {{{0, 1}, {2, 3}, {5, 13}, {31, 44}, {75, 94}}}, {{{94, 25}, {44, 69}, {13, 95}, {3, 98}, {1, 0}}}},
    {{1, 13, 5}, {{{0, 1}, {3, 5}, {13, 34}, {15, 96}, {7, 25}}}, {{{25, 93}, {4, 15}, {34, 87}, {95, 3}, {1, 0}}}},
    {{5, 29, 2}, {{{1, 2}, {12, 17}, {75, 79}, {45, 78}, {24, 71}}}, {{{29, 24}, {78, 55}, {21, 75}, {17, 88}, {98, 1}}}},
    {{1, 34, 13}, {{{0, 1}, {5, 8}, {34, 89}, {13, 14}, {68, 77}}}, {{{77, 32}, {14, 87}, {89, 66}, {8, 95}, {1, 0}}}},
    {{13, 194, 5}, {{{2, 3}, {44, 75}, {8, 15}, {6, 51}, {54, 27}}}, {{{27, 46}, {49, 6}, {15, 92}, {25, 44}, {3, 98}}}},
    {{5, 433, 29}, {{{1, 2}, {29, 75}, {20, 73}, {76, 23}, {79, 25}}}, {{{75, 79}, {23, 24}, {27, 20}, {75, 71}, {98, 1}}}},
    {{29, 169, 2}, {{{2, 5}, {70, 99}, {43, 23}, {91, 92}, {99, 56}}}, {{{56, 1}, {92, 9}, {23, 57}, {99, 30}, {5, 98}}}},
    {{1, 89, 34}, {{{0, 1}, {8, 13}, {89, 33}, {31, 74}, {63, 10}}}, {{{10, 37}, {26, 31}, {33, 11}, {87, 8}, {1, 0}}}},
    {{34, 1325, 13}, {{{3, 5}, {96, 11}, {29, 90}, {3, 23}, {72, 45}}}, {{{55, 72}, {23, 97}, {10, 29}, {11, 4}, {95, 3}}}},
    {{13, 7561, 194}, {{{2, 3}, {94, 7}, {81, 41}, {15, 76}, {21, 0}}}, {{{0, 79}, {76, 85}, {41, 19}, {7, 6}, {3, 98}}}},
};

}  // namespace refdata
