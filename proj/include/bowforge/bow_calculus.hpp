#pragma once

#include "bowforge/affine_weights.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bowforge {

enum class NodeKind { X, O };
enum class Shape { Circle, Line };

/* Formal parameter of a circle node: a symbol plus a multiple of nu_*. */
struct OParam {
    int sym = 0;
    Int nu_star = 0;

    bool operator==(const OParam&) const = default;
    auto operator<=>(const OParam&) const = default;
};

struct BowNode {
    NodeKind kind = NodeKind::X;
    OParam param; // meaningful for O only

    bool operator==(const BowNode&) const = default;
};

/*
 * Nodes are listed in anticlockwise order (left to right on a line).
 *
 * Circle: dims[k] is the segment following nodes[k], so node k sits between
 * dims[k-1] ("out") and dims[k] ("in").
 * Line: dims has one more entry; node k sits between dims[k] and dims[k+1],
 * and both ends are 0.
 *
 * On a circle the X nodes read anticlockwise from nodes[base] are
 * x_0, x_1, ..., x_{n-1}.  O nodes are identified by their symbols; h_1 is
 * the O with the smallest symbol and h_2, h_3, ... follow clockwise.
 * On a line the X nodes are x_1..x_n from the left and the O nodes
 * h_1..h_l from the right.
 */
struct BowDiagram {
    Shape shape = Shape::Circle;
    std::vector<BowNode> nodes;
    std::vector<Int> dims;
    int base = 0;

    void validate() const;

    int num_x() const;
    int num_o() const;
    Int out_dim(int k) const;
    Int in_dim(int k) const;

    bool operator==(const BowDiagram&) const = default;
};

struct InvariantRecord {
    std::vector<int> h_syms;    // symbols of h_1..h_l
    std::vector<Int> n_h;       // N_{h_sigma}
    std::vector<Int> n_x;       // N_{x_i}
    std::vector<Int> n_pair_h;  // N(h_sigma, h_{sigma+1})
    std::vector<Int> n_pair_x;  // N(x_i, x_{i+1})
    Int quad_h = 0;
    Int quad_x = 0;

    bool operator==(const InvariantRecord&) const = default;
};

InvariantRecord invariants(const BowDiagram& d);

/* Node positions of x_0..x_{n-1} (circle) or x_1..x_n (line). */
std::vector<int> x_positions(const BowDiagram& d);
/* Node positions of h_1..h_l. */
std::vector<int> h_positions(const BowDiagram& d);

/* New middle dimension V_1 + V_3 + 1 - V_2 for the pair at (pos, pos+1). */
Int hw_new_dimension(const BowDiagram& d, int pos);

/* Swap the O/X pair at nodes (pos, pos+1), cyclically on a circle. */
BowDiagram hw_transition(const BowDiagram& d, int pos);

/* True iff every O has equal dimensions on both sides. */
bool is_balanced(const BowDiagram& d);

/*
 * Data read off a separated circle: tlambda_sigma = N_{h_sigma},
 * mu_i = N_{x_i} with mu_n = N_{x_0}, and v0 the dimension between x_0
 * and the first O after it.  Here h_1 is the first O clockwise from x_0.
 */
struct SeparatedRecord {
    int n = 1;
    std::vector<Int> tlambda;
    std::vector<Int> mu;
    Int v0 = 0;
    std::vector<OParam> params; // labels of h_1..h_l

    bool operator==(const SeparatedRecord&) const = default;
};

struct SeparationResult {
    SeparatedRecord record;
    BowDiagram diagram;
    int transitions = 0;
};

/* O nodes all lie on the arc from x_0 anticlockwise to x_1. */
bool is_separated(const BowDiagram& d);

/*
 * Moves O nodes clockwise past x_{n-1}, ..., x_1 (never past x_0) until the
 * diagram is separated.  Throws DomainError("no_admissible_sequence") when
 * every available move would create a negative dimension.
 */
SeparationResult separated_form(const BowDiagram& d);

/* The separated circle with the given data, starting at x_0. */
BowDiagram realize(const SeparatedRecord& r);

std::pair<AffineWeight, AffineWeight> weights_of(const BowDiagram& d);

/* w_i O nodes on the arc x_i -> x_{i+1}, all with dimension v_i. */
BowDiagram balanced_form(const AffineWeight& lambda, const AffineWeight& mu);
BowDiagram balanced_from_dims(const std::vector<Int>& w, const std::vector<Int>& v);

/* h_1 travels anticlockwise around all X nodes and becomes the new h_l. */
SeparatedRecord rotate_base(const SeparatedRecord& r);

/* Same move carried out with individual transitions on the realized diagram. */
SeparationResult rotate_base_by_transitions(const SeparatedRecord& r);

/*
 * Breadth-first search over transitions keeping every dimension in
 * [0, dim_bound].  Returns the distinct balanced diagrams met, each rotated
 * to start at x_0, sorted by serialized form.
 */
struct SearchResult {
    std::vector<BowDiagram> balanced;
    std::size_t states = 0;
};
SearchResult hw_reachable_balanced(const BowDiagram& d, Int dim_bound);

/* Rotation of a circle diagram so that x_0 is nodes[0]; lines are returned as is. */
BowDiagram rotate_to_base(const BowDiagram& d);

/* Canonical integer encoding used for ordering and deduplication. */
std::vector<Int> serialize_key(const BowDiagram& d);

/* (N_{x_1}, ..., N_{x_n}) of a line diagram. */
std::vector<Int> line_x_charges(const BowDiagram& d);

} // namespace bowforge
