#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Breadth-first closure of {0, 1} under all intersection operators of U_n.
/// Points are deduplicated on their canonical exact form; each non-seed point
/// keeps the first-discovered parent tuple as a checkable witness.
class ClosureSet {
public:
    struct Witness {
        Angle u;
        Angle v;
        std::size_t p_index;
        std::size_t q_index;
    };
    struct Entry {
        CycNum value;
        unsigned depth;
        std::optional<Witness> witness;  // absent for the seeds 0 and 1
    };

    /// The depth-0 set {0, 1}; requires n >= 3.
    static ClosureSet seeds(unsigned n);

    /// Iterated expansion to the requested depth. On reaching `budget`
    /// stored points the result is returned partially expanded and flagged
    /// incomplete rather than silently truncated.
    static ClosureSet generate(unsigned n, unsigned depth, std::size_t budget = 200000);

    /// One BFS round: inserts intersect(u, v, p, q) for every ordered pair of
    /// distinct angles and every ordered point pair not already exhausted in
    /// earlier rounds. Set semantics make the result independent of the
    /// iteration order; the fixed order makes witnesses reproducible.
    void expand(std::size_t budget = 200000);

    unsigned order() const { return order_; }
    const FieldPtr& field() const { return field_; }
    unsigned rounds() const { return rounds_; }
    bool budget_exhausted() const { return budget_exhausted_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Entry>& entries() const { return points_; }
    /// Newly discovered points per completed round (index 0 = the seeds).
    const std::vector<std::size_t>& per_depth_counts() const { return per_depth_counts_; }

    /// First-discovery depth, absent if the point was not generated.
    std::optional<unsigned> contains_point(const CycNum& target) const;

    /// Line-oriented export: a '#' header, then one sorted point per line as
    /// `exact-literal<TAB>x y` with 12 significant digits.
    void write_points(std::ostream& os) const;

private:
    explicit ClosureSet(unsigned n);
    std::size_t insert(CycNum value, unsigned depth, std::optional<Witness> witness);

    unsigned order_;
    FieldPtr field_;
    std::vector<Entry> points_;
    std::unordered_map<CycNum, std::size_t, CycNumHash> index_;
    unsigned rounds_ = 0;
    bool budget_exhausted_ = false;
    std::vector<std::size_t> per_depth_counts_;
    std::vector<std::size_t> frontier_;
};

/// Parsed point-set export.
struct PointSetFile {
    unsigned n = 0;
    unsigned rounds = 0;
    bool complete = true;
    std::vector<CycNum> points;
};

PointSetFile read_points(std::istream& is);

/// A nonzero ring element of modulus < 1 witnessing density: 1/(1+zeta_n)
/// for prime n >= 5, 1/n for composite n. Rejects n = 3 (discrete ring).
struct DensityProbe {
    CycNum value;
    double modulus;
};

DensityProbe density_probe(unsigned n);

}  // namespace origami
