#pragma once

#include "bowforge/affine_weights.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bowforge {

/*
 * n rows of cells.  In each row the cell in column x (1..l) of block
 * N = k + 1/2 has flat position p = l*k + x; the vacuum is gray exactly at
 * p <= 0.  A row is stored as the sorted positions where it differs from
 * the vacuum: p >= 1 means gray, p <= 0 means white.
 *
 * Row r + 1 carries the summand of x_r, so row 1 matches mu_n and row
 * r + 1 matches mu_r for r >= 1.  Column x matches h_x.
 */
struct MayaDiagram {
    int n = 1;
    int l = 1;
    std::vector<std::vector<Int>> rows;

    MayaDiagram() : rows(1) {}
    MayaDiagram(int n, int l, std::vector<std::vector<Int>> rows);

    bool gray(int row, Int p) const; // row is 0-based here
    bool operator==(const MayaDiagram&) const = default;
    auto operator<=>(const MayaDiagram&) const = default;
};

MayaDiagram maya_vacuum(int n, int l);

/*
 * Reading of the column statistic.
 * Aggregate: every block counts, at in-block column sigma.
 * FundamentalLift: only the blocks N = +-1/2 count.
 */
enum class ColumnConvention { Aggregate, FundamentalLift };

struct MayaStats {
    std::vector<Int> row_charge;
    std::vector<Int> column_stat;
    Int v0 = 0;

    bool operator==(const MayaStats&) const = default;
};

/*
 * v0 weighs a white cell in block -(2j-1)/2 by j and a gray cell in block
 * (2j-1)/2 by j - 1.
 */
MayaStats maya_stats(const MayaDiagram& m, ColumnConvention conv = ColumnConvention::Aggregate);

/* Cost of one flipped cell towards v0. */
Int maya_cell_energy(int l, Int p);

struct FixedPointQuery {
    AffineWeight lambda;
    AffineWeight mu;
    std::vector<Int> row_targets;
    std::vector<Int> column_targets;
    Int v0 = 0;
    bool empty = false; // lambda - mu has a negative or fractional coefficient
};

FixedPointQuery make_query(const AffineWeight& lambda, const AffineWeight& mu);

struct EnumerationResult {
    std::vector<MayaDiagram> diagrams;
    Int window_lo = 0;
    Int window_hi = 0;
    bool touches_bound = false;
};

/*
 * Every diagram whose statistics equal the query targets.  A flipped cell
 * at p costs at least 1 + floor(-p/l) (white) or floor((p-1)/l) (gray), so
 * all of them lie in [window_lo, window_hi] = [1 - l*v0, l*(v0 + 1)].
 */
EnumerationResult enumerate_fixed_points(const FixedPointQuery& q, Int energy_bound,
                                         ColumnConvention conv = ColumnConvention::Aggregate);

bool t_fixed_point_exists(const AffineWeight& lambda, const AffineWeight& mu);

/* Finite type A: lambda >= (sorted mu). */
bool t_fixed_point_exists_linear(const std::vector<Int>& lambda, const std::vector<Int>& mu);

struct DeformedFixedPoint {
    AffineWeight mu1;
    AffineWeight mu2;
    RootVector v1;
    RootVector v2;
};

std::vector<DeformedFixedPoint> deformed_fixed_points(const AffineWeight& lambda1,
                                                      const AffineWeight& lambda2,
                                                      const AffineWeight& mu);

struct Sl2Stratum {
    Int w = 0;
    Int v = 0;
    Int tau1 = 0;
    Int tau2 = 0;
};

struct Sl2RestrictionData {
    Int lambda_prime = 0;
    Int mu_prime = 0;
    std::vector<Sl2Stratum> strata;
};

Sl2RestrictionData sl2_restriction(const AffineWeight& lambda, const AffineWeight& mu, int i,
                                   int depth);

/* Keys are (m, i) with 0 <= i < n; the result maps mn + i to its coefficient. */
struct AInfinityWeight {
    std::map<Int, Int> root_coeffs; // Lambda_0 - sum coeff * alpha_index

    bool operator==(const AInfinityWeight&) const = default;
};

AInfinityWeight unwind_to_a_infinity(int n, const std::map<std::pair<Int, int>, Int>& table);

Int attracting_dim_a1(Int w, Int v);
Int module_dim_a1(Int w);

} // namespace bowforge
