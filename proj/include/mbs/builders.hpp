#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mbs/core.hpp"

namespace mbs {

/// Branches l1..ln, a disk D1 on l1 with od p1, and annuli A1..A(n-1) with
/// od -p(i) on l(i) and +p(i+1) on l(i+1).
MultibranchedSurface seifert_example(const std::vector<std::int64_t>& p);

/// One orientable sector of genus g with one prebranch per degree on its own branch.
/// `signs` is empty or has one +1/-1 per degree.
MultibranchedSurface one_sector(int genus, const std::vector<std::int64_t>& degrees,
                                const std::vector<int>& signs = {});

/// Four pairs of pants e1..e4; e(i) meets every branch except l(i).
MultibranchedSurface pants_example();

/// Rose with 2n petals times a circle, capped by a disk.
MultibranchedSurface rose_times_circle(int n);

struct Multigraph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // loops allowed
};

/// Punctured sphere per vertex, one hole per edge end; an annulus per edge.
MultibranchedSurface graph_to_mbs(const Multigraph& graph);

/// One branch, one annulus whose two ends both wrap twice around it.
MultibranchedSurface obstruction_example();

}  // namespace mbs
