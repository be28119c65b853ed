/*
  Parameters for the quotient of the Boolean algebra B_{lm} by the
  wreath product S_l wr S_m (or by the Young product S_l x ... x S_l).
*/

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qc {

struct Params {
    int l = 1;           // row length
    int m = 1;           // number of rows
    bool symmetrize = true;  // true: quotient by S_l wr S_m; false: by S_l x ... x S_l

    int n() const { return l * m; }

    void validate() const {
        if (l < 1 || m < 1)
            throw std::invalid_argument("params: l and m must be positive");
    }
};

// Enumeration refuses to run above this ambient size unless overridden
// (QC_MAX_N in the environment, or an explicit limit from the caller).
inline int max_ambient_size() {
    if (const char* s = std::getenv("QC_MAX_N")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 16;
}

inline void check_resource_guard(const Params& p) {
    p.validate();
    if (p.n() > max_ambient_size())
        throw std::runtime_error("resource guard: lm = " + std::to_string(p.n()) +
                                 " exceeds limit " + std::to_string(max_ambient_size()) +
                                 " (set QC_MAX_N to override)");
}

}  // namespace qc
