#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bqg {

// All counting and variance results are exact; arbitrary precision avoids
// silent overflow (family constants alone need ~2^(p-1) denominators).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow2(int e) {
    Int one = 1;
    return one << e;
}

// 2^e for possibly negative e.
inline Rat pow2_rat(int e) {
    if (e >= 0) return Rat(pow2(e));
    return Rat(Int(1), pow2(-e));
}

inline std::string rat_to_string(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace bqg
