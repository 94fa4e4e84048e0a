#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "supersplit/supermodule.hpp"

namespace supersplit {

/// (+)O(a_i) (+) Pi(+)O(b_j) given by its twist lists.
struct SplitBundle {
    SuperSpaceSig space;
    FreeSupermodule module;
};

/// Supervector bundle presented by a cocycle on the standard affine cover
/// D(x_0),...,D(x_n). Transitions are stored for i<j in the trivialized
/// (affine) picture: v_i = g_ij v_j on local section vectors, every entry
/// homogeneous of total degree 0 and regular on D(x_i x_j). The frame
/// records the trivialization twists and generator parities; for the split
/// model the twists reappear as the exponents of the diagonal transitions.
struct TransitionBundle {
    SuperSpaceSig space;
    FreeSupermodule frame;
    std::map<std::pair<int, int>, SuperMatrix> transitions;

    const SuperMatrix& g(int i, int j) const { return transitions.at({i, j}); }
    SuperDim rank() const { return {frame.rank_even(), frame.rank_odd()}; }
    /// Largest |exponent| appearing in any transition entry.
    int max_exponent() const;
};

using Bundle = std::variant<SplitBundle, TransitionBundle>;

SuperSpaceSig bundle_space(const Bundle& b);
SuperDim bundle_rank(const Bundle& b);

struct CocycleReport {
    bool ok = true;
    std::string reason;
    int i = -1, j = -1, k = -1;              // failing triple, when any
    std::optional<SuperMatrix> residual;     // g_ij g_jk - g_ik
};

/// Exact verification of the cocycle identities on all triple overlaps,
/// the degree-0/parity homogeneity of every entry, chart regularity, and
/// local invertibility of each transition.
CocycleReport cocycle_check(const TransitionBundle& E);

TransitionBundle make_split(SuperSpaceSig space, const std::vector<int>& even_twists,
                            const std::vector<int>& odd_twists);
TransitionBundle make_split(const SplitBundle& b);

/// Tangent bundle via the Euler presentation. Supported: m = 0 (any n >= 1,
/// the classical Jacobian cocycle) and (n,m) = (1,1).
TransitionBundle euler_tangent(SuperSpaceSig space);
TransitionBundle euler_cotangent(SuperSpaceSig space);

/// theta -> 0 on every transition; the result lives on P^{n|0}.
TransitionBundle reduce_bundle(const TransitionBundle& E);

TransitionBundle dual_bundle(const TransitionBundle& E);
TransitionBundle tensor_bundle(const TransitionBundle& E, const TransitionBundle& F);
TransitionBundle sum_bundle(const TransitionBundle& E, const TransitionBundle& F);
TransitionBundle twist_bundle(const TransitionBundle& E, int t);
TransitionBundle pi_bundle(const TransitionBundle& E);

Bundle dual_bundle(const Bundle& E);
Bundle twist_bundle(const Bundle& E, int t);
Bundle pi_bundle(const Bundle& E);

/// Exact structural test: every transition is diagonal with single-term
/// entries c * (x_j/x_i)^a. Returns the twist lists read off the diagonal,
/// i.e. the split type the bundle visibly equals (up to constant gauge).
std::optional<FreeSupermodule> detect_diagonal_split(const TransitionBundle& E);

struct GrPiece {
    int shift = 0;       // tensor by O(shift)
    long multiplicity = 1;
    Parity parity = Parity::Even;
};

/// p_*(E) of a pulled-back/split-model bundle as the list of pieces
/// (E_red (x) O(-k))^{C(m,k)} with parity k mod 2, plus the reduced bundle.
struct GrDecomposition {
    std::vector<GrPiece> pieces;
    Bundle reduced;
};

GrDecomposition gr_pushforward(const Bundle& E);

long binomial(long n, long k);

}  // namespace supersplit
