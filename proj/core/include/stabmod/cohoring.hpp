#pragma once

#include <map>

#include "stabmod/covers.hpp"

namespace stabmod::cohoring {

using exactla::Matrix;
using exactla::RingSpec;
using rep::RepModule;

/// Monomial y^e x^b a^c in one of the two components of the product algebra
/// F_3[y_1] (x) E(x_1, a_1)  x  F_3[y_2] (x) E(x_2, a_2),
/// with deg y = 2 and deg x = deg a = 1.
struct Monomial {
    int comp = 1;  // 1 or 2
    int y = 0;
    int x = 0;  // 0 or 1
    int a = 0;  // 0 or 1

    int degree() const { return 2 * y + x + a; }
    auto operator<=>(const Monomial&) const = default;
};

/// Homogeneous F_3 combination of monomials of one degree.
class GradedElement {
public:
    GradedElement() = default;
    explicit GradedElement(int degree) : degree_(degree) {}
    static GradedElement monomial(Monomial m, int coeff = 1);
    /// The unit of the product algebra: 1 in both components.
    static GradedElement unit();

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    int coeff(const Monomial& m) const;
    const std::map<Monomial, int>& terms() const { return terms_; }

    GradedElement operator+(const GradedElement& rhs) const;
    GradedElement operator-(const GradedElement& rhs) const;
    GradedElement scaled(int c) const;
    bool operator==(const GradedElement&) const = default;

    void add_term(Monomial m, int coeff);

private:
    int degree_ = 0;
    std::map<Monomial, int> terms_;
};

/// Graded-commutative product: componentwise with Koszul signs from the
/// exterior generators; cross-component products vanish.
GradedElement multiply(const GradedElement& u, const GradedElement& v);

/// The action of sd16 on the ambient algebra: omega and phi swap the two
/// components with the sign rules
///   omega(x_i) = -(-1)^i x_{i+1},  phi(x_i) = -x_{i+1}
/// (same signs on y_i and a_i, subscripts mod 2), extended as algebra
/// automorphisms. Elements are given by their index in the catalog sd16.
GradedElement sd16_action(int g, const GradedElement& u);

/// Cohomology ledger up to a degree bound: the ambient product algebra, the
/// seven-generator image subalgebra, the restriction map rho that kills the
/// a_i, and the degreewise kernel/cokernel SD16-decompositions.
struct DegreeLedgerRow {
    int degree = 0;
    long dim_subalgebra = 0;
    long dim_target = 0;
    long dim_image = 0;
    long dim_kernel = 0;
    long dim_cokernel = 0;
    std::vector<long> kernel_isotypic;    // against simples_sd16() order
    std::vector<long> cokernel_isotypic;
    bool normative = true;  // degrees 0..3 carry externally pinned values
};

class CohomologyLedger {
public:
    explicit CohomologyLedger(int max_degree);

    int max_degree() const { return max_degree_; }

    /// Basis of the degree-d part of the subalgebra generated by
    /// x_1, x_2, y_1, y_2, x_1 a_1 - x_2 a_2, y_1 a_1, y_2 a_2 and the unit.
    const std::vector<GradedElement>& subalgebra_basis(int d) const;

    /// Basis of the degree-d part of the full ambient algebra.
    const std::vector<GradedElement>& ambient_basis(int d) const;

    /// Basis of the degree-d part of the target (monomials without a_i).
    const std::vector<GradedElement>& target_basis(int d) const;

    const std::vector<DegreeLedgerRow>& rows() const { return rows_; }
    const std::vector<rep::SimpleInfo>& simples() const { return simples_; }

private:
    int max_degree_;
    std::vector<std::vector<GradedElement>> sub_, ambient_, target_;
    std::vector<DegreeLedgerRow> rows_;
    std::vector<rep::SimpleInfo> simples_;
};

/// rho: kill the a_i (restriction of each centralizer factor to its cyclic
/// subgroup); an algebra map, surjective in positive degrees.
GradedElement rho(const GradedElement& u);

/// Multiplicity table of the start of the minimal resolution of the module
/// presented by the augmentation sequence, read off the ledger:
/// multiplicity of P_S in degree r = mult of S* in coker(r) plus mult of S*
/// in ker(r+1). Rows r >= 3 have no externally pinned values and are flagged
/// non-normative by the ledger rows they draw on.
homalg::MultiplicityTable n1_multiplicity_table(const CohomologyLedger& ledger, int r_max);

}  // namespace stabmod::cohoring
