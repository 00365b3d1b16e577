#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mbs/core.hpp"

namespace mbs {

MultibranchedSurface remove_sector(const MultibranchedSurface& surface, const SectorId& sector);

/// Collapses an annulus with degree-one ends on two distinct branches onto its core.
/// The two branches merge into one (named after the first end's branch), oriented
/// along the core; degrees transfer as k * od(first end) and -k * od(second end).
MultibranchedSurface contract_annulus(const MultibranchedSurface& surface, const SectorId& sector);

/// True when `contract_annulus` accepts the sector.
bool is_contractible_annulus(const MultibranchedSurface& surface, std::size_t sector);

MultibranchedSurface reduce_degree(const MultibranchedSurface& surface, const BranchId& branch);

MultibranchedSurface torus_sum(const MultibranchedSurface& surface, const SectorId& sector);

struct StandardDecomposition {
    MultibranchedSurface disks;
    std::vector<int> closed_genera;  // one per original sector
};

StandardDecomposition standard_decomposition(const MultibranchedSurface& surface);

/// Relabeling-invariant encoding. Two surfaces with orientable sectors have equal
/// forms exactly when they are isomorphic: branches and sectors correspond,
/// genus and orientability match, and oriented degrees agree after reversing
/// some branches and some sectors. Nonorientable sectors are compared through
/// |od| only, and the form is then flagged approximate.
class CanonicalForm {
public:
    CanonicalForm() = default;
    CanonicalForm(std::vector<std::int64_t> code, bool approximate)
        : code_(std::move(code)), approximate_(approximate) {}

    const std::vector<std::int64_t>& code() const { return code_; }
    bool approximate() const { return approximate_; }

    std::size_t sector_count() const;
    /// Representative with generated identifiers b1.., e1...
    MultibranchedSurface to_surface(const std::string& name = {}) const;
    std::string to_string() const;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.code_ == b.code_; }
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.code_ <=> b.code_; }

private:
    std::vector<std::int64_t> code_;
    bool approximate_ = false;
};

CanonicalForm canonical_form(const MultibranchedSurface& surface);
bool are_isomorphic(const MultibranchedSurface& a, const MultibranchedSurface& b);

inline constexpr std::size_t kDefaultMinorCap = 100000;

/// Closure under sector removal and annulus contraction, including the surface itself.
std::set<CanonicalForm> all_minors(const MultibranchedSurface& surface,
                                   std::size_t max_results = kDefaultMinorCap);

bool is_minor(const MultibranchedSurface& minor, const MultibranchedSurface& host,
              std::size_t max_results = kDefaultMinorCap);

struct MinorStep {
    enum class Kind { RemoveSector, ContractAnnulus, ReduceDegree, TorusSum };
    Kind kind = Kind::RemoveSector;
    std::string target;  // sector or branch id in the surface the step applies to
    MultibranchedSurface result;
};

std::string_view step_kind_name(MinorStep::Kind kind);
std::optional<MinorStep::Kind> parse_step_kind(std::string_view name);

struct MinorCertificate {
    MultibranchedSurface source;
    std::vector<MinorStep> steps;
};

MultibranchedSurface apply_step(const MultibranchedSurface& surface, MinorStep::Kind kind,
                                const std::string& target);

/// Re-applies every step from the source; true when each recorded intermediate
/// is reproduced up to isomorphism and the last one is isomorphic to `target`.
bool replay_certificate(const MinorCertificate& certificate, const MultibranchedSurface& target);

inline constexpr std::size_t kDefaultCertificateBudget = 200000;

/// Breadth-first search from `host` over annulus contractions, degree reductions
/// and torus sums (each keeps the result a neighborhood minor), up to `depth`
/// steps. An empty result does not refute the relation.
std::optional<MinorCertificate> neighborhood_minor_certificate(
    const MultibranchedSurface& minor, const MultibranchedSurface& host, std::size_t depth,
    std::size_t budget = kDefaultCertificateBudget);

enum class ObstructionVerdict { Candidate, NotCandidate, Unknown };

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::Unknown;
    std::size_t proper_minors = 0;
    std::optional<CanonicalForm> obstructed_minor;
    std::string note;
};

/// Candidate for the obstruction set of S^3-embeddable surfaces: H1 has torsion
/// while no proper minor does. Torsion-freeness does not certify embeddability,
/// so Candidate is evidence, not proof.
ObstructionReport obstruction_candidate_s3(const MultibranchedSurface& surface,
                                           std::size_t max_results = kDefaultMinorCap);

}  // namespace mbs
