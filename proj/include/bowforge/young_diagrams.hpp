#pragma once

#include "bowforge/affine_weights.hpp"

#include <vector>

namespace bowforge {

/*
 * Generalized Young diagram [a_1..a_r] with a_1 >= ... >= a_r >= a_1 - L.
 *
 * Row i is cut into blocks of L cells indexed by N in Z + 1/2; the cell in
 * column x of block N is gray iff L(N - 1/2) + x <= a_i.  The transpose has
 * rank L and level r.
 */
struct GYDiagram {
    int rank = 1;
    int level = 0;
    std::vector<Int> entries{0};

    GYDiagram() = default;
    GYDiagram(int rank, int level, std::vector<Int> entries);

    bool operator==(const GYDiagram&) const = default;
};

bool satisfies_level_constraint(int level, const std::vector<Int>& entries);

/* block is N - 1/2, so block 0 is N = 1/2; row and column are 1-based. */
bool cell_is_gray(const GYDiagram& d, int row, int column, Int block);

GYDiagram gyd_transpose(const GYDiagram& d);

/* [a_2, .., a_r, a_1 - L]. */
GYDiagram gyd_rotate(const GYDiagram& d);

GYDiagram gyd_from_weight(const AffineWeight& lambda);
AffineWeight gyd_to_weight(const GYDiagram& d, Rational delta = Rational(0));

} // namespace bowforge
