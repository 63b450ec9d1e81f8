#ifndef CYCPERM_TESTS_FIXTURES_HPP
#define CYCPERM_TESTS_FIXTURES_HPP

// Reference values for the statistic triangles and polynomial families,
// frozen from the published tables these sequences come from.

#include <string>
#include <vector>

namespace fixtures {

// Cyclic peaks over all permutations: rows 1..7, column k = coefficient of q^k.
inline const std::vector<std::vector<long long>> kMRows = {
    {1}, {2}, {5, 1}, {15, 9}, {52, 63, 5}, {203, 416, 101}, {877, 2741, 1361, 61}};

// Cyclic valleys over all permutations.
inline const std::vector<std::vector<long long>> kMbarRows = {
    {1}, {2}, {6}, {22, 2}, {94, 26}, {460, 244, 16}, {2532, 2124, 384}};

// Cyclic peaks over derangements.
inline const std::vector<std::vector<long long>> kDRows = {
    {0}, {1}, {1, 1}, {4, 5}, {11, 28, 5}, {41, 153, 71}, {162, 872, 759, 61}};

// Cyclic valleys over derangements.
inline const std::vector<std::vector<long long>> kDbarRows = {
    {0}, {1}, {2}, {7, 2}, {28, 16}, {131, 118, 16}, {690, 892, 272}};

// Combined rows 1..6.
inline const std::vector<std::vector<long long>> kCombinedRRows = {
    {1}, {2, 1}, {5, 6, 1}, {15, 22, 9, 2}, {52, 94, 63, 26, 5}, {203, 460, 416, 244, 101, 16}};

inline const std::vector<std::vector<long long>> kCombinedIRows = {
    {1}, {1, 1}, {1, 2, 1}, {4, 7, 5, 2}, {11, 28, 28, 16, 5}, {41, 131, 153, 118, 71, 16}};

// Alternating-runs polynomials R_2..R_5, coefficients of q^1..q^{n-1}.
inline const std::vector<std::vector<long long>> kRunsRows2to5 = {
    {2}, {2, 4}, {2, 12, 10}, {2, 28, 58, 32}};

// Canonical text of the first full peak/valley polynomials.
inline const std::vector<std::string> kPeakPolys = {
    "xy", "x + x^2y^2", "(1+q)x + 3x^2y + x^3y^3",
    "(1+5q)x + (3+4y+4qy)x^2 + 6x^3y^2 + x^4y^4"};

inline const std::vector<std::string> kValleyPolys = {
    "xy", "x + x^2y^2", "2x + 3x^2y + x^3y^3", "(4+2q)x + (3+8y)x^2 + 6x^3y^2 + x^4y^4",
    "(8+16q)x + (20+20y+10qy)x^2 + (15y+20y^2)x^3 + 10x^4y^3 + x^5y^5"};

// Zigzag (Euler) numbers E_0..E_7.
inline const std::vector<long long> kEuler = {1, 1, 1, 2, 5, 16, 61, 272};

// Pell numbers P_0..P_11.
inline const std::vector<long long> kPell = {0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741};

// Bell numbers B_0..B_10.
inline const std::vector<long long> kBell = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};

// Derangement counts d_0..d_10.
inline const std::vector<long long> kDerangement = {1,    0,     1,     2,      9,      44,
                                                   265,  1854,  14833, 133496, 1334961};

} // namespace fixtures

#endif
