#pragma once
// Frozen reference data for the test suite: point counts of the depth-k
// degree-one loci at every tabulated depth, reduced pfaffians, and
// nullity values.
// DO NOT EDIT - regenerate with:
//   python3 tools/regen_golden.py --bin <build-dir>/tools/pdres

#include <cstdint>
#include <vector>

namespace golden {

/// |R^1_k| over GF(p) at the tabulated depths of one catalog entry,
/// k ascending.
struct SweepRow {
    const char* id;
    std::uint32_t p;
    std::vector<std::uint64_t> counts;
};

inline const std::vector<SweepRow>& sweep_rows() {
    static const std::vector<SweepRow> rows = {
        {"I", 3, {0, 0, 0}},
        {"II", 3, {1, 1, 1}},
        {"III", 3, {81, 81, 1}},
        {"IV", 3, {729, 27, 27, 1}},
        {"V_a", 3, {729, 53, 53, 1}},
        {"V_b", 3, {729, 1, 1, 1}},
        {"I", 5, {0, 0, 0}},
        {"II", 5, {1, 1, 1}},
        {"III", 5, {625, 625, 1}},
        {"IV", 5, {15625, 125, 125, 1}},
        {"V_a", 5, {15625, 249, 249, 1}},
        {"V_b", 5, {15625, 249, 249, 1}},
        {"VI", 5, {15625, 15625, 15625, 15625, 1}},
        {"VII", 5, {15625, 15625, 125, 125, 1}},
        {"VIII_a", 5, {28125, 28125, 245, 245, 1}},
        {"VIII_b", 5, {28125, 28125, 245, 245, 1}},
        {"IX_a", 5, {18125, 18125, 25, 25, 1}},
        {"IX_b", 5, {18125, 18125, 25, 25, 1}},
        {"X_a", 5, {15625, 15625, 1, 1, 1}},
        {"X_b", 5, {15625, 15625, 1, 1, 1}},
        {"XI", 5, {390625, 78125, 78125, 725, 725, 1}},
        {"XII", 5, {390625, 15625, 15625, 125, 125, 1}},
        {"XIII", 5, {390625, 30625, 30625, 145, 145, 1}},
        {"XIV", 5, {390625, 18125, 18125, 25, 25, 1}},
        {"XV", 5, {390625, 3125, 3125, 5, 5, 1}},
        {"XVI", 5, {390625, 80625, 80625, 749, 749, 1}},
        {"XVII", 5, {390625, 20625, 20625, 49, 49, 1}},
        {"XVIII", 5, {390625, 6125, 6125, 9, 9, 1}},
        {"XIX", 5, {390625, 23125, 23125, 73, 73, 1}},
        {"XX", 5, {390625, 9125, 9125, 13, 13, 1}},
        {"XXI", 5, {390625, 6225, 6225, 5, 5, 1}},
        {"XXII", 5, {390625, 3225, 3225, 1, 1, 1}},
        {"XXIII", 5, {390625, 3845, 3845, 1, 1, 1}},
        {"I", 7, {0, 0, 0}},
        {"II", 7, {1, 1, 1}},
        {"III", 7, {2401, 2401, 1}},
        {"IV", 7, {117649, 343, 343, 1}},
        {"V_a", 7, {117649, 685, 685, 1}},
        {"V_b", 7, {117649, 1, 1, 1}},
        {"VI", 7, {117649, 117649, 117649, 117649, 1}},
        {"VII", 7, {117649, 117649, 343, 343, 1}},
        {"VIII_a", 7, {218491, 218491, 679, 679, 1}},
        {"VIII_b", 7, {16807, 16807, 7, 7, 1}},
        {"IX_a", 7, {132055, 132055, 49, 49, 1}},
        {"IX_b", 7, {132055, 132055, 49, 49, 1}},
        {"X_a", 7, {117649, 117649, 1, 1, 1}},
        {"X_b", 7, {117649, 117649, 1, 1, 1}},
        {"XI", 7, {5764801, 823543, 823543, 2695, 2695, 1}},
        {"XII", 7, {5764801, 117649, 117649, 343, 343, 1}},
        {"XIII", 7, {5764801, 232897, 232897, 385, 385, 1}},
        {"XIV", 7, {5764801, 132055, 132055, 49, 49, 1}},
        {"XV", 7, {5764801, 16807, 16807, 7, 7, 1}},
        {"XVI", 7, {5764801, 837949, 837949, 2743, 2743, 1}},
        {"XVII", 7, {5764801, 146461, 146461, 97, 97, 1}},
        {"XVIII", 7, {5764801, 33271, 33271, 13, 13, 1}},
        {"XIX", 7, {5764801, 160867, 160867, 145, 145, 1}},
        {"XX", 7, {5764801, 49735, 49735, 19, 19, 1}},
        {"XXI", 7, {5764801, 33565, 33565, 7, 7, 1}},
        {"XXII", 7, {5764801, 17101, 17101, 1, 1, 1}},
        {"XXIII", 7, {5764801, 19495, 19495, 1, 1, 1}},
    };
    return rows;
}

/// Reduced pfaffian over the rationals.  `pf` is null for even n, where the
/// reduced determinant must vanish identically; for odd n the reduced
/// determinant is pf squared.  `expr` is used when `id` is null.
struct TuraevRow {
    const char* id;
    const char* expr;
    std::uint32_t n;
    const char* pf;
};

inline const std::vector<TuraevRow>& turaev_rows() {
    static const std::vector<TuraevRow> rows = {
        {"II", nullptr, 3, "1"},
        {"III", nullptr, 5, "x5"},
        {"IV", nullptr, 6, nullptr},
        {"V_a", nullptr, 6, nullptr},
        {"V_b", nullptr, 6, nullptr},
        {"VI", nullptr, 7, "x1^2"},
        {"VII", nullptr, 7, "-x1^2"},
        {"VIII_a", nullptr, 7, "x1*x2"},
        {"VIII_b", nullptr, 7, "x1^2 + x2^2"},
        {"IX_a", nullptr, 7, "x1*x3 + x2*x4"},
        {"IX_b", nullptr, 7, "x1^2 + x2^2 + x3^2 + x4^2"},
        {"X_a", nullptr, 7, "x1*x4 + x2*x5 + x3*x6 - x7^2"},
        {"X_b", nullptr, 7, "x1^2 + x2^2 + x3^2 + x4^2 + x5^2 + x6^2 + x7^2"},
        {"XI", nullptr, 8, nullptr},
        {nullptr, "125+345", 5, "x5"},
        {nullptr, "127+347+567", 7, "x7^2"},
    };
    return rows;
}

/// Nullity (maximal dimension of a 2-singular subspace) over GF(p).
struct NullityRow {
    const char* id;
    std::uint32_t p;
    std::uint32_t nu;
};

inline const std::vector<NullityRow>& nullity_rows() {
    static const std::vector<NullityRow> rows = {
        {"II", 3, 1},
        {"III", 3, 2},
        {"IV", 3, 3},
        {"V_a", 3, 2},
        {"V_b", 3, 2},
        {"VI", 3, 3},
        {"VII", 3, 3},
        {"VIII_a", 3, 3},
        {"VIII_b", 3, 3},
        {"IX_a", 3, 3},
        {"IX_b", 3, 3},
        {"X_a", 3, 2},
        {"X_b", 3, 2},
    };
    return rows;
}

}  // namespace golden
