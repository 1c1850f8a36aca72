#pragma once

#include "bowforge/affine_weights.hpp"
#include "bowforge/maya.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bowforge {

/* Partitions of k, each weakly decreasing, in reverse lexicographic order. */
std::vector<std::vector<Int>> partitions(Int k);
Int partition_count(Int k);

/*
 * Weight multiplicities of the integrable module V(lambda) via the
 * Freudenthal recursion.  Weights are addressed by the coefficients c of
 * lambda - mu = sum c_i alpha_i; entries are filled lazily and memoized.
 * depth bounds the height sum c_i.
 */
class MultTable {
public:
    MultTable(AffineWeight lambda, Int depth);

    const AffineWeight& highest_weight() const { return lambda_; }
    Int depth() const { return depth_; }

    /* 0 when lambda - mu is fractional or leaves the positive cone. */
    Int mult(const AffineWeight& mu);
    Int mult_at(const std::vector<Int>& c);

    const std::map<std::vector<Int>, Int>& entries() const { return memo_; }

private:
    struct Root {
        std::vector<Int> a;
        Int multiplicity;
        Int norm; // (alpha|alpha)
    };

    Int compute(const std::vector<Int>& c);
    Int pair_lambda(const std::vector<Int>& a) const;
    Int form(const std::vector<Int>& a, const std::vector<Int>& b) const;
    const std::vector<Root>& roots_up_to(Int m);

    AffineWeight lambda_;
    Int depth_;
    std::vector<Int> lambda_pairing_;
    std::vector<Root> roots_;
    Int roots_m_ = -1;
    std::map<std::vector<Int>, Int> memo_;
};

Int freudenthal_mult(const AffineWeight& lambda, const AffineWeight& mu, Int depth);

/* The affine Cartan matrix entry a_ij of sl(n)^. */
Int cartan_entry(int n, int i, int j);

/*
 * mu' + 2 k where k is the largest step with mult(lambda, mu + k alpha_i) > 0.
 * Throws "no_fixed_point" when mu itself is not a weight and
 * "depth_exhausted" when the string is still alive at the depth cap.
 */
Int string_top(const AffineWeight& lambda, const AffineWeight& mu, int i, Int depth);

/*
 * Level-one fermionic Fock space.  A state is a subset of Z differing from
 * the vacuum {j <= 0} in finitely many places; flips lists those places.
 * Flat position j = n*k + a with a in 1..n is the cell of row a in block
 * k + 1/2, so row a carries the profile entry mu_a.
 */
struct FockState {
    std::vector<Int> flips;

    bool occupied(Int j) const;
    bool operator==(const FockState&) const = default;
    auto operator<=>(const FockState&) const = default;
};

FockState fock_state(std::vector<Int> flips);
FockState fock_vacuum();
/* The state occupied exactly at j <= charge. */
FockState fock_charged_vacuum(Int charge);
/* Occupied positions C + part_k - k + 1 for k >= 1. */
FockState fock_from_partition(Int charge, const std::vector<Int>& part);

AffineWeight fock_weight(int n, const FockState& s);
MayaDiagram fock_to_maya(int n, const FockState& s);
FockState maya_to_fock(const MayaDiagram& m);

struct FockVector {
    int n = 2;
    std::map<FockState, Rational> terms;

    static FockVector basis(int n, const FockState& s);
    void add(const FockState& s, const Rational& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    FockVector scaled(const Rational& c) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const FockVector&) const = default;
};

enum class Chevalley { E, F, H };

FockVector chevalley_apply(Chevalley op, int i, const FockVector& v);

enum class CrystalOp { E, F };

std::optional<FockState> crystal_apply(CrystalOp op, int n, int i, const FockState& s);
Int crystal_epsilon(int n, int i, const FockState& s);
Int crystal_phi(int n, int i, const FockState& s);

/* Number of Fock basis states of weight mu (level one, any charge). */
Int fock_weight_count(const AffineWeight& mu);

/* Charge-0 basis states whose weight lies within height depth of Lambda_0. */
std::vector<FockState> fock_basis(int n, Int depth);

/* Weights Lambda_0 - sum c_i alpha_i with c >= 0 and sum c_i <= depth. */
std::vector<std::vector<Int>> cone_coefficients(int n, Int depth);

struct CharRow {
    AffineWeight mu;
    Int fock = 0;
    Int convolution = 0;
    bool ok = false;
};

struct CharReport {
    std::vector<CharRow> rows;
    bool pass = true;
};

/* fock_weight_count(mu) against sum_j p(j) mult(Lambda_0, mu + j delta). */
CharReport char_factorization_check(int n, Int depth);

struct RelationReport {
    std::size_t checked = 0;
    std::vector<std::string> failures;
    bool pass = true;
};

/* [e_i, f_j] = delta_ij h_i, [h_i, e_j] = a_ij e_j, [h_i, f_j] = -a_ij f_j and both Serre relations. */
RelationReport serre_and_commutator_check(int n, Int depth);

struct CrystalRow {
    AffineWeight mu;
    Int crystal = 0;
    Int mult = 0;
};

struct CrystalReport {
    std::vector<CrystalRow> rows;
    std::size_t elements = 0;
    bool inverse_ok = true;
    bool pass = true;
};

/* Per-weight sizes of the crystal component of the vacuum against mult(Lambda_0, .). */
CrystalReport crystal_completeness_check(int n, Int depth);

/*
 * Along every i-string from an extremal vector b with <wt b, h_i> = m >= 0,
 * f_i^k b = k! (f~_i)^k b for k <= m.  Extremal vectors are reached from the
 * vacuum by at most max_length string reversals.
 */
RelationReport divided_power_check(int n, int max_length);

} // namespace bowforge
