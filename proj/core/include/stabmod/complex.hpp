#pragma once

#include "stabmod/rep.hpp"

namespace stabmod::homalg {

using exactla::HomologyReport;
using exactla::Matrix;
using exactla::RingSpec;
using rep::ModuleHom;
using rep::RepModule;

/// Written left to right: maps[i] sends modules[i] into modules[i+1], and
/// consecutive composites vanish (validated). The zero maps into and out of
/// the complex are implicit, so "exact" includes injectivity of the first map
/// and surjectivity of the last.
class ChainComplex {
public:
    ChainComplex(std::vector<RepModule> modules, std::vector<ModuleHom> maps);

    long length() const { return static_cast<long>(modules_.size()); }
    const RepModule& module(long i) const { return modules_[static_cast<size_t>(i)]; }
    const ModuleHom& map(long i) const { return maps_[static_cast<size_t>(i)]; }
    long map_count() const { return static_cast<long>(maps_.size()); }
    const RingSpec& ring() const { return modules_.front().ring(); }

    /// Incoming differential matrix at position i (zero-width at the left end).
    Matrix d_in(long i) const;
    /// Outgoing differential matrix at position i (zero-height at the right end).
    Matrix d_out(long i) const;

private:
    std::vector<RepModule> modules_;
    std::vector<ModuleHom> maps_;
};

struct ExactnessCertificate {
    std::vector<HomologyReport> reports;  // one per position
    bool exact = false;
    long first_failure = -1;  // leftmost non-exact position, -1 when exact

    std::string describe() const;
};

/// Per-position homology over exact p-local coefficients.
ExactnessCertificate check_exact(const ChainComplex& c);

}  // namespace stabmod::homalg
