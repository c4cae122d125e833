#pragma once

#include "angle_persist/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace angp {

struct ValidationError : std::runtime_error {
    ValidationError(const std::string& kind, const std::string& cell)
        : std::runtime_error(kind + " at " + cell), kind(kind), cell(cell) {}
    std::string kind;
    std::string cell;
};

using Simplex = std::vector<long>;  // vertex ids, ascending

std::string simplex_name(const Simplex& s);

// A finite simplicial complex with a simplexwise-affine angle valued map:
// vertex turn values in [0,1) plus an integer winding per oriented edge.
// delta(u,v) = turn(v) - turn(u) + winding(u,v) is the lifted level
// increment along the edge u -> v.
class ComplexWithMap {
public:
    ComplexWithMap(std::vector<long> vertex_ids, std::map<long, Rational> turns,
                   std::vector<Simplex> simplices, std::map<std::pair<long, long>, long> windings);

    long dim() const { return static_cast<long>(by_dim_.size()) - 1; }
    const std::vector<long>& vertex_ids() const { return vertex_ids_; }
    // simplices of dimension d in deterministic (lexicographic) order
    const std::vector<Simplex>& simplices(long d) const;
    long count(long d) const { return d >= 0 && d <= dim() ? static_cast<long>(simplices(d).size()) : 0; }

    const Rational& turn(long v) const;
    long winding(long u, long v) const;  // 0 when the pair is not an edge? throws instead
    Rational delta(long u, long v) const;
    bool has_edge(long u, long v) const;

    // anchor vertex of a simplex: its lowest id (deterministic lifting)
    static long anchor(const Simplex& s) { return s.front(); }

    // lifted levels of a simplex's vertices relative to the anchor's turn
    std::vector<Rational> lifted_levels(const Simplex& s) const;

    long simplex_index(long d, const Simplex& s) const;

    // throws ValidationError naming the offending cell
    void validate() const;

private:
    std::vector<long> vertex_ids_;
    std::map<long, Rational> turns_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<std::pair<long, long>, long> windings_;  // keyed by (min,max) pair
    std::vector<std::map<Simplex, long>> index_;
};

struct CriticalTurns {
    std::vector<Rational> values;  // sorted, deduplicated, in [0,1)
    Rational min_gap;              // minimum cyclic gap; 1 for a single value
};

ComplexWithMap load_complex(const std::string& json_text);
ComplexWithMap load_complex_file(const std::string& path);
std::string complex_to_json(const ComplexWithMap& c);

CriticalTurns critical_turns(const ComplexWithMap& c);

// Evaluates the degree cocycle on a closed 1-cycle given as oriented edges.
long cohomology_degree(const ComplexWithMap& c, const std::vector<std::pair<long, long>>& cycle);

// One global barycentric subdivision; turns interpolated at barycenters,
// windings recomputed from the lifted levels. Never invoked implicitly.
ComplexWithMap barycentric_subdivide(const ComplexWithMap& c);

}  // namespace angp
