#pragma once

#include <cstdint>

#include "bimatch/matching.hpp"

namespace bimatch {

struct Verdict {
    enum class Kind { Linear, Circular, CutAdmitting };
    Kind kind;
    // Linear: the sorted sequence; Circular: the canonical cycle starting at
    // segment 0. Empty for CutAdmitting.
    std::vector<std::size_t> order;
    // CutAdmitting: an incomparable pair.
    std::pair<std::size_t, std::size_t> witness{0, 0};
};

struct ReferenceDirection {
    Pt direction;
};

struct TSetPartition {
    // Maximal twin classes, each contiguous along the cycle, in cycle order.
    std::vector<std::vector<std::size_t>> blocks;
    // Per segment: the unique cycle-adjacent pair separated by its
    // supporting line.
    std::vector<std::pair<std::size_t, std::size_t>> antipodal;
};

struct SortOutcome {
    std::vector<std::size_t> order;
    std::optional<std::pair<std::size_t, std::size_t>> incomparable;
    // All consecutive pairs of `order` satisfy the relation. Always true
    // when the relation is a linear order; may fail on cyclic relations
    // that happen to evade the sort's comparisons.
    bool consecutive_ok = false;
};

// Merge sort under the sidedness relation; stops at the first incomparable
// comparison.
SortOutcome sort_by_sidedness(const BRMatching& m);

struct DrumResult {
    bool ok;
    std::size_t fail_index = 0;  // position in `sorted` where the check broke
};

// Checks that every prefix hull of the sorted sequence has exactly the first
// and the newest segment on its boundary, and symmetrically for suffixes.
// Requires consecutive pairs of `sorted` to be related in order.
DrumResult drum_property_check(const BRMatching& m, const std::vector<std::size_t>& sorted);

struct UniqueResult {
    bool unique;
    Verdict verdict;
    BRMatching matching;
};

// Builds a matching for F and decides whether it is the only one.
UniqueResult is_unique(const PointSet& f);
UniqueResult is_unique(std::shared_ptr<const PointSet> f);

Verdict classify(const BRMatching& m);

struct CircularResult {
    enum class Status { Circular, Incomparable, WrongHullColors };
    Status status;
    std::vector<std::size_t> cycle;  // Circular
    std::pair<std::size_t, std::size_t> witness{0, 0};  // Incomparable
};

// Divide-and-conquer circular-type test. Requires hull monochromaticity
// (reported as WrongHullColors otherwise; the caller dispatches).
CircularResult is_circular(const BRMatching& m);

// A direction every segment points along (positive projection), with all
// supporting-line crossings projecting outside the segments' shadows.
// Requires a Linear matching.
ReferenceDirection reference_direction(const BRMatching& m, const Verdict& v);

// Requires a Circular verdict with its cycle.
TSetPartition tset_partition(const BRMatching& m, const std::vector<std::size_t>& cycle);

// Ternary cyclic-order relation [x, y, z] on a circular matching: at least
// two of x<y, y<z, z<x under sidedness. Cross-checked against the position
// of y between x and z along the cycle.
bool circular_triple(const BRMatching& m, const std::vector<std::size_t>& cycle, std::size_t x,
                     std::size_t y, std::size_t z);

// Number of distinct non-linear sidedness relations over the 2^(n-1) radial
// matchings on n fixed lines through a common point. Equals 2^(n-1) - n.
std::uint64_t census_sidedness_relations(int n);

}  // namespace bimatch
