#pragma once

#include <map>

#include "supersplit/cohomology.hpp"

namespace supersplit {

struct HorrocksEntry {
    int i = 0;
    RaoTable table;
    bool vanishes = true;
};

struct HorrocksReport {
    bool vacuous = false;  // n < 2: the range 1 <= i <= n-1 is empty
    int t_min = 0, t_max = -1;
    std::vector<HorrocksEntry> entries;

    bool all_vanish() const {
        for (const auto& e : entries)
            if (!e.vanishes) return false;
        return true;
    }
    /// first nonzero entry (i, t, dim), if any
    std::optional<std::tuple<int, int, SuperDim>> witness() const;
};

std::pair<int, int> horrocks_window(const Bundle& E);

/// Rao tables of E itself over the window for every intermediate degree
/// 1 <= i <= n-1.
HorrocksReport horrocks_check(const Bundle& E,
                              std::optional<std::pair<int, int>> window = {});

enum class PeelStatus { Ok, NegativeResidual };

struct PeelResult {
    PeelStatus status = PeelStatus::Ok;
    std::vector<int> even, odd;  // sorted descending
    int bad_t = 0;               // first inconsistent twist on failure
};

/// Recover the twist multisets of a sum of line bundles from its h^0 table:
/// repeatedly extract h(t0) copies of O(-t0) at the smallest t0 with
/// h(t0) > 0 and subtract their binomial contribution.
PeelResult peel_splitting_type(const std::map<int, SuperDim>& h0, int n);

struct ObstructionReport {
    SuperDim hom_dims;          // dim H^0(Hom(F, E))
    SuperDim reduced_hom_dims;  // dim Hom(F_red, E_red)
    int attempts = 0;
    std::string note;
};

struct LiftOptions {
    uint64_t seed = 20240801;
    int max_attempts = 32;
    std::optional<int> window;
};

struct LiftResult {
    bool precondition_failed = false;  // reduced types differ
    std::string precondition_detail;
    std::map<int, SuperMatrix> iso;  // chart -> phi_i on success
    std::optional<ObstructionReport> obstruction;

    bool success() const { return !precondition_failed && !iso.empty(); }
};

/// Search H^0(Hom(F, E)) for an even global morphism whose bosonic
/// reduction is an isomorphism; the returned chart maps satisfy
/// phi_i g^F_ij = g^E_ij phi_j and are invertible on every chart, both
/// verified exactly.
LiftResult lift_isomorphism(const TransitionBundle& E, const SplitBundle& F,
                            const LiftOptions& opt = {});

enum class Verdict { Splits, NotSplit, Inconclusive };

std::string verdict_name(Verdict v);

struct RaoWitness {
    int i = 0, t = 0;
    SuperDim dim;
    bool reduced = false;  // witness found on E_red rather than E
};

struct SplitCertificate {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<int> even, odd;      // splitting type when Splits
    std::map<int, SuperMatrix> iso;  // chart -> phi_i when Splits
    std::optional<RaoWitness> rao_witness;
    std::optional<ObstructionReport> obstruction;
    // dim End(E) vs dim End(split model), when they differ
    std::optional<std::pair<SuperDim, SuperDim>> end_dims_mismatch;
    std::string detail;
};

struct CertifyOptions {
    uint64_t seed = 20240801;
    int max_attempts = 32;
};

/// Splitting certification pipeline: intermediate-cohomology scan of the
/// reduced bundle, splitting-type recovery by peeling, constructive lift of
/// the reduced isomorphism, and witness search on failure.
SplitCertificate split_certify(const TransitionBundle& E,
                               const CertifyOptions& opt = {});

/// Exact soundness check of a SPLITS certificate against E.
bool verify_certificate(const TransitionBundle& E, const SplitCertificate& cert);

}  // namespace supersplit
