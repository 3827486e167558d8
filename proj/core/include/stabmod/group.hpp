#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace stabmod::grp {

/// Finite group given by its full composition table. Closure, identity,
/// inverses and associativity are validated at construction: exhaustively
/// for order <= 1000, and by the generator-complete argument above that
/// (checking (g,x,y) for g in a generating set proves all triples).
class FiniteGroup {
public:
    FiniteGroup(std::vector<int> mult_table, std::vector<std::pair<std::string, int>> gens);

    int order() const { return order_; }
    int op(int x, int y) const { return mult_[static_cast<size_t>(x) * order_ + y]; }
    int inverse(int x) const { return inv_[static_cast<size_t>(x)]; }
    int identity() const { return 0; }

    const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
    int generator(const std::string& name) const;
    bool has_generator(const std::string& name) const;

    int order_of(int x) const;
    int conjugate(int g, int x) const;  // g x g^-1
    std::vector<int> center() const;
    bool is_abelian() const;
    /// Indices generated by the given elements (sorted).
    std::vector<int> closure(const std::vector<int>& elts) const;
    /// Generating set used for audits: named generators, extended if needed.
    std::vector<int> generating_set() const;

    int power(int x, long e) const;

private:
    void validate() const;

    int order_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::pair<std::string, int>> gens_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Homomorphism between two tabulated groups, validated on all pairs.
struct GroupHom {
    GroupPtr src;
    GroupPtr dst;
    std::vector<int> map;

    GroupHom(GroupPtr s, GroupPtr d, std::vector<int> m);

    int operator()(int x) const { return map[static_cast<size_t>(x)]; }
    bool is_injective() const;
    bool is_surjective() const;
    std::vector<int> image() const;   // sorted element indices in dst
    std::vector<int> kernel() const;  // sorted element indices in src
};

GroupHom compose(const GroupHom& second, const GroupHom& first);  // second o first

/// Subgroup generated by elements of g, relabelled 0..k-1 in increasing
/// order of their indices in g (identity first).
struct SubgroupResult {
    GroupPtr subgroup;
    GroupHom embedding;
};

SubgroupResult subgroup_generated(const GroupPtr& g, const std::vector<int>& gens,
                                  const std::vector<std::string>& names);

/// Quotient by a normal subgroup given via an embedding; elements are
/// labelled by their least coset representative, in increasing order.
struct QuotientResult {
    GroupPtr quotient;
    GroupHom projection;
};

QuotientResult quotient(const GroupPtr& g, const GroupHom& normal_embedding);

/// Left transversal of the embedded subgroup: lexicographically least
/// representative per coset, identity first.
std::vector<int> cosets(const GroupPtr& g, const GroupHom& embedding);

bool is_normal(const GroupPtr& g, const GroupHom& embedding);

/// True when g is dihedral over a cyclic group of order n: generated by an
/// element r of order n and an involution s with s r s = r^-1.
bool is_dihedral_of(const GroupPtr& g, int n);

}  // namespace stabmod::grp
