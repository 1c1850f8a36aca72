#pragma once

#include "bowforge/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bowforge {

/*
 * A weight of the affine gl(n) algebra at a fixed level.
 *
 * profile is [mu_1..mu_n]; the sl(n) Dynkin labels are mu_i - mu_{i+1}
 * (i >= 1) and level + mu_n - mu_1 (i = 0).  delta is the coefficient of
 * the null root, which equals the pairing with d.  Lambda_i has profile
 * (1^i, 0^(n-i)) at level 1 and delta 0.
 *
 * Equality is exact on the gl profile; use sl_equivalent() to ignore a
 * simultaneous shift of all entries.
 */
struct AffineWeight {
    int n = 1;
    int level = 0;
    std::vector<Int> profile{0};
    Rational delta{0};

    AffineWeight() = default;
    AffineWeight(int n, int level, std::vector<Int> profile, Rational delta = Rational(0));

    Int charge() const;

    bool operator==(const AffineWeight& other) const
    {
        return n == other.n && level == other.level && profile == other.profile
            && delta == other.delta;
    }
};

AffineWeight operator+(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator-(const AffineWeight& a, const AffineWeight& b);
AffineWeight operator*(Int k, const AffineWeight& a);

AffineWeight fundamental_weight(int n, int i);
AffineWeight simple_root(int n, int i);
AffineWeight null_root(int n);
AffineWeight zero_weight(int n, int level);

/* Shifts the profile so that mu_n = 0. */
AffineWeight sl_canonical(const AffineWeight& mu);
bool sl_equivalent(const AffineWeight& a, const AffineWeight& b);

/* Coefficients c_0..c_{n-1} of a combination of simple roots. */
struct RootVector {
    std::vector<Int> c;

    bool nonnegative() const;
    Int height() const;
    bool operator==(const RootVector&) const = default;
};

/* sum_i c_i alpha_i as a level-0 weight. */
AffineWeight root_combination(int n, const RootVector& v);

/*
 * lambda has level sum(w) and profile lambda_i = w_i + ... + w_{n-1};
 * mu = lambda - sum v_i alpha_i, delta(mu) = -v_0.
 */
std::pair<AffineWeight, AffineWeight>
weight_pair_from_dims(int n, int level, const std::vector<Int>& w, const std::vector<Int>& v);

Int coroot_pairing(const AffineWeight& mu, int i);

/* s_i(mu) = mu - <mu, h_i> alpha_i. */
AffineWeight reflect(const AffineWeight& mu, int i);

/* lambda_1 >= ... >= lambda_n >= lambda_1 - level. */
bool in_fundamental_alcove(const AffineWeight& mu);

/* The alcove representative of the affine Weyl orbit (requires level >= 1). */
AffineWeight to_dominant(const AffineWeight& mu);

/*
 * lambda - mu as a combination of simple roots.  Throws
 * DomainError("non_integral") when the difference is not in the root
 * lattice, and level/rank mismatches as DomainError too.
 */
RootVector root_difference(const AffineWeight& lambda, const AffineWeight& mu);

struct DominanceResult {
    bool holds = false;
    RootVector witness;
};

/* mu <= lambda; the witness is lambda - mu whether or not it is nonnegative. */
DominanceResult dominance_leq(const AffineWeight& mu, const AffineWeight& lambda);

/* <m, alpha> != 0 for every root alpha of affine sl(n). */
bool generic_cocharacter(const std::vector<Rational>& m);

/* Finite type A_{n-1}, used by line-shaped diagrams. */
std::vector<Int> finite_dominant(std::vector<Int> profile);

/* c_1..c_{n-1} with lambda - mu = sum c_i alpha_i; nullopt if the charges differ. */
std::optional<std::vector<Int>> finite_root_difference(const std::vector<Int>& lambda,
                                                       const std::vector<Int>& mu);

} // namespace bowforge
