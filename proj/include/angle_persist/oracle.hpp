#pragma once

#include "angle_persist/complex_io.hpp"

#include <map>
#include <string>

namespace angp {

// Brute-force reference results; shares only field arithmetic and the
// complex encoding with the main engine.
struct OracleReport {
    std::string quantity;
    std::vector<long> window_sizes;
    // per window: support multiset (a, b) -> multiplicity
    std::vector<std::map<std::pair<Rational, Rational>, long>> supports;
    std::vector<long> dims;  // for the slope report
    bool stabilized;
    std::map<std::pair<Rational, Rational>, long> stable_support;
    long slope = 0;
};

// Direct-definition delta over growing windows; stabilized when three
// successive window sizes give the same support multiset.
OracleReport oracle_delta(const ComplexWithMap& c, long r, const std::vector<long>& windows,
                          const FieldDesc& f);

// dim H_r over windows of N-2, N-1, N periods; slope = common difference.
OracleReport oracle_betti_slope(const ComplexWithMap& c, long r, long n, const FieldDesc& f);

}  // namespace angp
