#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "framekit/latin.hpp"
#include "framekit/report.hpp"

namespace framekit::designs {

/// Pairwise balanced design / group-divisible design. Blocks hold point
/// indices, sorted ascending. Without groups the design is read as a PBD
/// (all groups singletons). With lambda > 1 repeated blocks are allowed.
struct BlockDesign {
    std::vector<std::string> points;
    std::vector<std::vector<int>> blocks;
    int lambda = 1;
    std::optional<std::vector<std::vector<int>>> groups;
    std::optional<std::set<int>> block_sizes;  // K constraint when declared

    int index_of(const std::string& token) const;
};

/// Class tag for a parallel class covering every point.
inline constexpr int kFullClass = -1;

/// Block design whose blocks are partitioned into (holey) parallel
/// classes. `holes` is a partition of the points; a fully resolvable
/// design carries a single empty hole and tags every class kFullClass.
struct ResolvedBlockDesign {
    BlockDesign design;
    std::vector<std::vector<int>> holes;
    std::vector<std::pair<int, std::vector<int>>> classes;  // (hole index or kFullClass, block indices)
    int block_size = 3;

    bool fully_resolvable() const { return holes.size() == 1 && holes[0].empty(); }
};

ValidityReport verify_gdd(const BlockDesign& design);

/// Deletes a point from a PBD: the blocks through it become the groups of
/// a GDD, the remaining blocks are kept unchanged.
BlockDesign gdd_from_bibd(const BlockDesign& design, const std::string& point);

/// (k,lambda)-frame verification: block sizes, exact cross-hole pair
/// multiplicity, class partition conditions, and the per-hole class count
/// lambda*t/(k-1). A fully resolvable design (single empty hole) instead
/// needs lambda*(v-1)/(k-1) full classes.
ValidityReport verify_k_frame(const ResolvedBlockDesign& frame, int k, int lambda);

/// Deletes a point from a resolvable (v,k,1)-BIBD: blocks through the
/// point turn into holes of size k-1 and each full class becomes the holey
/// class of its deleted block's hole.
ResolvedBlockDesign rbibd_to_kframe(const ResolvedBlockDesign& design, const std::string& point);

/// Inverse of rbibd_to_kframe: adjoins `point` to every hole.
ResolvedBlockDesign kframe_to_rbibd(const ResolvedBlockDesign& frame, const std::string& point);

/// KTS(v) minus a point = Kirkman frame of type 2^((v-1)/2).
ResolvedBlockDesign kts_to_frame(const ResolvedBlockDesign& kts, const std::string& point);

/// Kirkman frame of type 2^r plus a new point = KTS(2r+1).
ResolvedBlockDesign frame_to_kts(const ResolvedBlockDesign& frame, const std::string& infinity);

/// Completion: adds one new point per parallel class to its blocks plus
/// the block of all new points, giving a (v+r, {4, r})-PBD.
BlockDesign kts_to_completed(const ResolvedBlockDesign& kts,
                             const std::vector<std::string>& new_points = {});

/// Inverse of kts_to_completed given the added points.
ResolvedBlockDesign completed_to_kts(const BlockDesign& design, const std::vector<std::string>& new_points);

/// Weighting: a GDD with lambda = 1, an even weight w, and a template
/// Kirkman frame of type w^k for each block size k yield a Kirkman frame
/// of type (gw)^u on points X x {1..w} (tokens "<x>.<j>"). Template holes
/// are matched to block points in ascending point order; the template's
/// classes at a hole, in listed order, give the class index j.
ResolvedBlockDesign gdd_weight_construction(const BlockDesign& design, int w,
                                            const std::map<int, ResolvedBlockDesign>& templates);

/// The incomplete-OLS route to a Kirkman frame of type 4^4: one block of
/// size 4 per filled cell of a valid IncompleteOLSPair(6;2), then deletion
/// of the two hole symbols of each grid and the hole rows and columns.
ResolvedBlockDesign kirkman_4_4_from_iols(const latin::IncompleteOLSPair& pair);

// Bundled verifier-checked ingredient designs.

/// (13,4,1)-BIBD developed from the difference set {0,1,3,9} mod 13.
BlockDesign bibd_13_4();

/// KTS(9): the lines of AG(2,3) in their four parallel classes.
ResolvedBlockDesign kts9();

/// Near-resolvable (7,3,2)-BIBD from base blocks {1,2,4},{3,5,6} mod 7,
/// resolved as a (3,2)-frame of type 1^7.
ResolvedBlockDesign near_resolvable_7_3_2();

/// Round-robin schedule on n teams (n even): a resolvable (n,2,1)-BIBD.
ResolvedBlockDesign round_robin(int n);

}  // namespace framekit::designs
