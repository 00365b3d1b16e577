#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "mbs/core.hpp"

namespace mbs {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> entries_;
};

/// Diagonal d1 | d2 | ... of length min(rows, cols), all non-negative, zeros last.
std::vector<BigInt> smith_normal_form(IntegerMatrix matrix);

/// Finitely generated abelian group Z/f1 + ... + Z/fk + Z^r with f1 | f2 | ... and fi >= 2.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default;
    /// Normalizes arbitrary cyclic orders (0 and 1 entries are dropped) into invariant factors.
    FgAbelianGroup(const std::vector<BigInt>& torsion_orders, std::size_t free_rank);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const { return free_rank_; }
    bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
    bool has_torsion() const { return !factors_.empty(); }

    FgAbelianGroup direct_sum(const FgAbelianGroup& other) const;

    /// "Z/3 + Z^5", "Z", "0".
    std::string to_string() const;
    std::string torsion_string() const;

    friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;

private:
    std::vector<BigInt> factors_;
    std::size_t free_rank_ = 0;
};

/// Rows are sectors, columns branches; entry = signed sum of oriented degrees
/// of the sector's prebranches on that branch.
IntegerMatrix relation_matrix(const MultibranchedSurface& surface);

/// Graph onto which X minus one open disk per sector deformation retracts:
/// one vertex per branch, a loop per branch, b-1 arcs per sector chaining its
/// prebranches' branches, and 2g loops at the first prebranch's branch.
struct SpineGraph {
    enum class EdgeKind { BranchLoop, SectorArc, HandleLoop };
    struct Edge {
        std::size_t from = 0;
        std::size_t to = 0;
        EdgeKind kind = EdgeKind::BranchLoop;
        std::string tag;
    };

    std::vector<BranchId> vertices;
    std::vector<Edge> edges;

    std::size_t component_count() const;
    std::size_t first_betti_number() const;
};

SpineGraph spine_graph(const MultibranchedSurface& surface);

/// Rank of H1 of X minus one open disk per sector, computed from the spine graph
/// and cross-checked against 1 + #sectors - chi(X).
std::size_t punctured_spine_rank(const MultibranchedSurface& surface);

struct HomologyOptions {
    /// Restrict to regular surfaces; the presentation itself does not need regularity.
    bool require_regular = false;
};

/// First integral homology. Components are computed separately and summed.
/// Nonorientable sectors contribute one generator per crosscap.
FgAbelianGroup h1(const MultibranchedSurface& surface, HomologyOptions options = {});

enum class S3Verdict { Obstructed, Inconclusive };

struct S3Report {
    S3Verdict verdict = S3Verdict::Inconclusive;
    FgAbelianGroup homology;
};

/// Torsion in H1 rules out an embedding into the 3-sphere. A torsion-free H1 proves nothing.
S3Report s3_obstruction(const MultibranchedSurface& surface);

}  // namespace mbs
