#include "stabmod/complex.hpp"

#include <sstream>

namespace stabmod::homalg {

ChainComplex::ChainComplex(std::vector<RepModule> modules, std::vector<ModuleHom> maps)
    : modules_(std::move(modules)), maps_(std::move(maps)) {
    if (modules_.empty()) throw std::invalid_argument("ChainComplex: no modules");
    if (maps_.size() + 1 != modules_.size())
        throw std::invalid_argument("ChainComplex: need one map between consecutive modules");
    for (size_t i = 0; i < modules_.size(); ++i) {
        if (modules_[i].group()->order() != modules_[0].group()->order() ||
            !(modules_[i].ring() == modules_[0].ring()))
            throw std::invalid_argument("ChainComplex: mixed groups or rings");
    }
    for (size_t i = 0; i < maps_.size(); ++i) {
        if (maps_[i].src.rank() != modules_[i].rank() ||
            maps_[i].dst.rank() != modules_[i + 1].rank())
            throw std::invalid_argument("ChainComplex: map ends do not match modules");
    }
    for (size_t i = 0; i + 1 < maps_.size(); ++i)
        if (!(maps_[i + 1].mat * maps_[i].mat).is_zero())
            throw std::invalid_argument("ChainComplex: composite of maps " + std::to_string(i) +
                                        " and " + std::to_string(i + 1) + " is nonzero");
}

Matrix ChainComplex::d_in(long i) const {
    if (i == 0) return Matrix(ring(), module(0).rank(), 0);
    return maps_[static_cast<size_t>(i - 1)].mat;
}

Matrix ChainComplex::d_out(long i) const {
    if (i == length() - 1) return Matrix(ring(), 0, module(i).rank());
    return maps_[static_cast<size_t>(i)].mat;
}

std::string ExactnessCertificate::describe() const {
    std::ostringstream os;
    os << (exact ? "exact" : "non-exact at position " + std::to_string(first_failure));
    for (size_t i = 0; i < reports.size(); ++i)
        os << "; H[" << i << "]: " << reports[i].describe();
    return os.str();
}

ExactnessCertificate check_exact(const ChainComplex& c) {
    if (c.ring().mode != exactla::RingMode::PLocal)
        throw std::invalid_argument("check_exact: requires PLocal coefficients");
    ExactnessCertificate cert;
    cert.exact = true;
    for (long i = 0; i < c.length(); ++i) {
        HomologyReport r = exactla::homology(c.d_in(i), c.d_out(i));
        if (!r.exact() && cert.exact) {
            cert.exact = false;
            cert.first_failure = i;
        }
        cert.reports.push_back(std::move(r));
    }
    return cert;
}

}  // namespace stabmod::homalg
