#pragma once

#include "stabmod/group.hpp"
#include "stabmod/matrix.hpp"
#include "stabmod/normal_form.hpp"

namespace stabmod::rep {

using exactla::Matrix;
using exactla::RingSpec;
using grp::GroupHom;
using grp::GroupPtr;

/// Invertible square matrix stored either densely or as a monomial matrix
/// (one nonzero per row and column). Permutation-module actions stay in
/// monomial form end to end, which keeps the per-element action store small
/// and makes the exhaustive action audit linear per pair.
class ActionMatrix {
public:
    ActionMatrix() = default;
    static ActionMatrix from_dense(Matrix m);
    static ActionMatrix monomial(RingSpec ring, std::vector<long> row_of,
                                 std::vector<mpq_class> coef);
    static ActionMatrix identity(RingSpec ring, long n);

    bool is_monomial() const { return monomial_; }
    long size() const { return n_; }
    const RingSpec& ring() const { return ring_; }

    Matrix dense() const;
    /// row index and coefficient of the unique entry in column j (monomial form).
    long row_of(long j) const { return row_of_[static_cast<size_t>(j)]; }
    const mpq_class& coef(long j) const { return coef_[static_cast<size_t>(j)]; }

    friend ActionMatrix compose(const ActionMatrix& a, const ActionMatrix& b);  // a*b
    friend bool equal(const ActionMatrix& a, const ActionMatrix& b);
    friend Matrix mul(const ActionMatrix& a, const Matrix& m);  // a * m
    friend Matrix mul(const Matrix& m, const ActionMatrix& a);  // m * a
    ActionMatrix transposed() const;
    ActionMatrix scaled(const mpq_class& c) const;
    friend ActionMatrix kron(const ActionMatrix& a, const ActionMatrix& b);
    ActionMatrix with_ring(RingSpec ring) const;

private:
    bool monomial_ = false;
    long n_ = 0;
    RingSpec ring_;
    std::vector<long> row_of_;     // monomial form
    std::vector<mpq_class> coef_;  // monomial form
    Matrix dense_;                 // dense form
};

// namespace-scope declarations for the ActionMatrix friends
ActionMatrix compose(const ActionMatrix& a, const ActionMatrix& b);
bool equal(const ActionMatrix& a, const ActionMatrix& b);
Matrix mul(const ActionMatrix& a, const Matrix& m);
Matrix mul(const Matrix& m, const ActionMatrix& a);
ActionMatrix kron(const ActionMatrix& a, const ActionMatrix& b);

/// Raised when the element-indexed action fails the homomorphism audit.
struct ActionAuditError : std::runtime_error {
    int g, h;
    ActionAuditError(int g_, int h_)
        : std::runtime_error("action audit failed at pair (" + std::to_string(g_) + ", " +
                             std::to_string(h_) + ")"),
          g(g_),
          h(h_) {}
};

/// Finite-rank module over a group algebra: one invertible matrix per group
/// element. The constructor audits the homomorphism property — exhaustively
/// over all pairs when affordable (always, for monomial actions), and by the
/// generator-complete argument otherwise. Cheap to copy (shared immutable
/// state).
class RepModule {
public:
    RepModule() = default;
    RepModule(GroupPtr group, RingSpec ring, long rank, std::vector<ActionMatrix> act);

    const GroupPtr& group() const { return impl_->group; }
    const RingSpec& ring() const { return impl_->ring; }
    long rank() const { return impl_->rank; }
    const ActionMatrix& act(int g) const { return impl_->act[static_cast<size_t>(g)]; }
    Matrix act_dense(int g) const { return act(g).dense(); }
    bool all_monomial() const { return impl_->all_monomial; }
    bool valid() const { return impl_ != nullptr; }

private:
    struct Impl {
        GroupPtr group;
        RingSpec ring;
        long rank;
        std::vector<ActionMatrix> act;
        bool all_monomial;
    };
    std::shared_ptr<const Impl> impl_;
};

/// +-1 values on named generators, extending to a character of the group.
struct CharacterData {
    GroupPtr group;
    std::vector<std::pair<std::string, int>> values;
};

/// A character with its per-element value table.
struct Character {
    GroupPtr group;
    std::vector<int> values;

    int operator()(int g) const { return values[static_cast<size_t>(g)]; }
};

/// Extends generator values to the whole group; throws when the assignment
/// does not define a homomorphism to {+-1}.
Character extend_character(const CharacterData& data);

RepModule character_module(const CharacterData& data, RingSpec ring);
RepModule character_module(const Character& chi, RingSpec ring);

CharacterData chi_sd16();   // chi(omega) = chi(phi) = -1
CharacterData theta_q8();   // theta(i) = +1, theta(j) = -1
CharacterData theta_g24();  // theta inflated through G24 -> Q8

RepModule trivial_module(const GroupPtr& g, RingSpec ring);
RepModule regular_module(const GroupPtr& g, RingSpec ring);

/// Induction along an embedding, basis ordered transversal-major:
/// index = coset * rank(M) + source index.
RepModule induce(const RepModule& m, const GroupHom& embedding);

/// Matrix of the induced map Ind(f) in the same basis order.
Matrix induce_hom_matrix(const Matrix& f, const GroupHom& embedding);

/// Pullback along an arbitrary homomorphism (restriction for embeddings,
/// inflation for quotient maps).
RepModule restrict_along(const RepModule& m, const GroupHom& hom);

RepModule twist(const RepModule& m, const Character& chi);
RepModule tensor(const RepModule& a, const RepModule& b);
RepModule dual(const RepModule& m);
RepModule direct_sum(const RepModule& a, const RepModule& b);

/// Basis of the space of intertwiners M -> N (matrices F with
/// F act_M(g) = act_N(g) F). PrimeField or PLocal mode only.
std::vector<Matrix> hom_space(const RepModule& m, const RepModule& n);

long hom_dim(const RepModule& m, const RepModule& n);

/// Module map with its intertwining property audited on all elements.
struct ModuleHom {
    RepModule src, dst;
    Matrix mat;

    ModuleHom(RepModule src_, RepModule dst_, Matrix mat_);
};

struct MultiplicityResult {
    long hom_dim = 0;     // raw dim Hom_G(S, V)
    long end_dim = 1;     // dim End_G(S)
    long normalized = 0;  // hom_dim / end_dim
};

/// Multiplicity of the simple S inside V over F_p with p not dividing |G|,
/// computed through the averaging idempotent.
MultiplicityResult multiplicity(const RepModule& simple, const RepModule& v);

/// Decomposition table of an F_p module (p coprime to |G|) against a list
/// of simples: normalized multiplicities in list order.
std::vector<long> isotypic_multiplicities(const std::vector<RepModule>& simples,
                                          const RepModule& v);

}  // namespace stabmod::rep
