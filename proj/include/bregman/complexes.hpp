#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bregman/circumball.hpp"
#include "bregman/config.hpp"
#include "bregman/generator.hpp"
#include "bregman/simplex.hpp"

namespace bregman {

// Position of a simplex inside its value interval [lower, upper].
enum class IntervalRole : std::uint8_t { LowerBound, Interior, UpperBound, Singleton };

// Instrumentation counters; exact and deterministic for fixed input and config.
struct BuildStats {
    long num_simplices = 0;
    long num_edges = 0;
    long num_circumball_calls = 0;
    long num_function_evals = 0;
};

// Radius values of a simplex set, with the witness ball and the interval
// bookkeeping of the build. Immutable after construction.
//
// For Cech builds the witness of a simplex is its smallest including dual
// ball and contains all of its vertices. Rips values above dimension 1 are
// maxima over pairs; there the witness is the critical pair's ball and no
// interval structure exists.
class RadiusFiltration {
public:
    struct Entry {
        double radius = 0.0;
        std::uint32_t pool_id = 0;
        IntervalRole role = IntervalRole::Singleton;
    };
    // One entry per distinct witness ball. `lower` is the simplex whose
    // circumball the ball is; `upper` is lower plus every cloud point the
    // ball strictly contains.
    struct PoolEntry {
        DualBall ball;
        Simplex lower;
        Simplex upper;
        std::vector<int> contained;
    };

    using EntryMap = std::unordered_map<Simplex, Entry, SimplexHash>;

    bool contains(const Simplex& s) const { return entries_.count(s) > 0; }
    std::size_t size() const { return entries_.size(); }
    double radius(const Simplex& s) const;
    const DualBall& witness(const Simplex& s) const;
    IntervalRole role(const Simplex& s) const;
    const Simplex& parent_lower(const Simplex& s) const;

    const EntryMap& entries() const { return entries_; }
    const std::vector<PoolEntry>& pool() const { return pool_; }
    bool has_interval_structure() const { return has_interval_structure_; }

    // Simplices sorted by (dimension, lexicographic vertices).
    std::vector<Simplex> sorted_simplices() const;

private:
    friend class CechBuilder;
    friend class RipsBuilder;
    const Entry& entry(const Simplex& s) const;

    EntryMap entries_;
    std::vector<PoolEntry> pool_;
    bool has_interval_structure_ = false;
};

// Cech radius function on the max_dim-skeleton under a radius cutoff, by
// increasing-dimension traversal with interval marking: a circumball is
// solved only for unmarked simplices, and each solved ball (p, r) marks
// every P + {a} with D_F(a, p) < r.
std::pair<RadiusFiltration, BuildStats> cech_radius_function(const Generator& gen,
                                                             const PointCloud& cloud,
                                                             const BuildConfig& cfg);

// Vietoris-Rips radius function: vertices at zero, edges at their pair
// circumball radius, higher simplices by clique expansion carrying the
// maximum edge value.
std::pair<RadiusFiltration, BuildStats> rips_radius_function(const Generator& gen,
                                                             const PointCloud& cloud,
                                                             const BuildConfig& cfg);

// Partition of a Cech filtration into intervals [lower, upper]; the upper
// bound is reported in full even when the skeleton or cutoff truncates the
// interval. Throws PartitionFailure on inconsistent assignments.
std::vector<std::pair<Simplex, Simplex>> extract_intervals(const RadiusFiltration& f);

// Sublevel set {P : radius(P) <= r}, sorted by (dimension, lexicographic).
std::vector<Simplex> complex_at(const RadiusFiltration& f, double r);

// Overlap radii of dual Kullback-Leibler balls around three points placed
// near the edge midpoints of the probability simplex, with the competition
// restricted to the simplex slice. Pairwise overlap stays below ln 3 while
// the triple overlap radius grows without bound as the points approach the
// boundary.
struct NoInterleavingResult {
    double pairwise_radius = 0.0;
    double triple_radius = 0.0;
};
NoInterleavingResult no_interleaving_demo(double epsilon, double margin = 1e-12);

} // namespace bregman
