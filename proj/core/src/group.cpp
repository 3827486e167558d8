#include "stabmod/group.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace stabmod::grp {

FiniteGroup::FiniteGroup(std::vector<int> mult_table,
                         std::vector<std::pair<std::string, int>> gens)
    : mult_(std::move(mult_table)), gens_(std::move(gens)) {
    double n = std::sqrt(static_cast<double>(mult_.size()));
    order_ = static_cast<int>(std::lround(n));
    if (static_cast<size_t>(order_) * order_ != mult_.size() || order_ < 1)
        throw std::invalid_argument("FiniteGroup: table is not square");
    inv_.assign(order_, -1);
    validate();
}

void FiniteGroup::validate() const {
    const int n = order_;
    for (int v : mult_)
        if (v < 0 || v >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
    // identity must be index 0
    for (int x = 0; x < n; ++x)
        if (op(0, x) != x || op(x, 0) != x)
            throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
    auto* self = const_cast<FiniteGroup*>(this);
    for (int x = 0; x < n; ++x) {
        int found = -1;
        for (int y = 0; y < n; ++y)
            if (op(x, y) == 0 && op(y, x) == 0) {
                found = y;
                break;
            }
        if (found < 0) throw std::invalid_argument("FiniteGroup: element without inverse");
        self->inv_[static_cast<size_t>(x)] = found;
    }
    for (const auto& [name, idx] : gens_)
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("FiniteGroup: generator index out of range");

    if (n <= 1000) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = op(x, y);
                for (int z = 0; z < n; ++z)
                    if (op(xy, z) != op(x, op(y, z)))
                        throw std::invalid_argument("FiniteGroup: associativity fails at (" +
                                                    std::to_string(x) + "," + std::to_string(y) +
                                                    "," + std::to_string(z) + ")");
            }
    } else {
        // (g,x,y) over a generating set plus closure implies all triples.
        std::vector<int> gen_set = generating_set();
        for (int g : gen_set)
            for (int x = 0; x < n; ++x) {
                int gx = op(g, x);
                for (int y = 0; y < n; ++y)
                    if (op(gx, y) != op(g, op(x, y)))
                        throw std::invalid_argument("FiniteGroup: associativity fails at (" +
                                                    std::to_string(g) + "," + std::to_string(x) +
                                                    "," + std::to_string(y) + ")");
            }
    }
}

int FiniteGroup::generator(const std::string& name) const {
    for (const auto& [n, idx] : gens_)
        if (n == name) return idx;
    throw std::invalid_argument("FiniteGroup: no generator named '" + name + "'");
}

bool FiniteGroup::has_generator(const std::string& name) const {
    for (const auto& [n, idx] : gens_)
        if (n == name) return true;
    return false;
}

int FiniteGroup::order_of(int x) const {
    int e = x, k = 1;
    while (e != 0) {
        e = op(e, x);
        ++k;
        if (k > order_) throw std::logic_error("FiniteGroup: order_of runaway");
    }
    return k;
}

int FiniteGroup::conjugate(int g, int x) const { return op(op(g, x), inverse(g)); }

std::vector<int> FiniteGroup::center() const {
    std::vector<int> out;
    for (int x = 0; x < order_; ++x) {
        bool central = true;
        for (int y = 0; y < order_ && central; ++y) central = op(x, y) == op(y, x);
        if (central) out.push_back(x);
    }
    return out;
}

bool FiniteGroup::is_abelian() const { return static_cast<int>(center().size()) == order_; }

std::vector<int> FiniteGroup::closure(const std::vector<int>& elts) const {
    std::vector<char> seen(order_, 0);
    std::vector<int> frontier{0};
    seen[0] = 1;
    for (int e : elts)
        if (!seen[e]) {
            seen[e] = 1;
            frontier.push_back(e);
        }
    for (size_t i = 0; i < frontier.size(); ++i)
        for (int e : elts) {
            int a = op(frontier[i], e);
            if (!seen[a]) {
                seen[a] = 1;
                frontier.push_back(a);
            }
            int b = op(e, frontier[i]);
            if (!seen[b]) {
                seen[b] = 1;
                frontier.push_back(b);
            }
        }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

std::vector<int> FiniteGroup::generating_set() const {
    std::vector<int> gens;
    for (const auto& [name, idx] : gens_) gens.push_back(idx);
    std::vector<int> cl = closure(gens);
    while (static_cast<int>(cl.size()) < order_) {
        for (int x = 0; x < order_; ++x)
            if (!std::binary_search(cl.begin(), cl.end(), x)) {
                gens.push_back(x);
                break;
            }
        cl = closure(gens);
    }
    return gens;
}

int FiniteGroup::power(int x, long e) const {
    long n = order_of(x);
    e %= n;
    if (e < 0) e += n;
    int r = 0;
    for (long i = 0; i < e; ++i) r = op(r, x);
    return r;
}

GroupHom::GroupHom(GroupPtr s, GroupPtr d, std::vector<int> m)
    : src(std::move(s)), dst(std::move(d)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != src->order())
        throw std::invalid_argument("GroupHom: map size mismatch");
    for (int v : map)
        if (v < 0 || v >= dst->order()) throw std::invalid_argument("GroupHom: value out of range");
    if (map[0] != 0) throw std::invalid_argument("GroupHom: identity not preserved");
    for (int x = 0; x < src->order(); ++x)
        for (int y = 0; y < src->order(); ++y)
            if (map[static_cast<size_t>(src->op(x, y))] != dst->op(map[x], map[y]))
                throw std::invalid_argument("GroupHom: not a homomorphism at (" +
                                            std::to_string(x) + "," + std::to_string(y) + ")");
}

bool GroupHom::is_injective() const {
    std::set<int> vals(map.begin(), map.end());
    return static_cast<int>(vals.size()) == src->order();
}

bool GroupHom::is_surjective() const {
    std::set<int> vals(map.begin(), map.end());
    return static_cast<int>(vals.size()) == dst->order();
}

std::vector<int> GroupHom::image() const {
    std::set<int> vals(map.begin(), map.end());
    return {vals.begin(), vals.end()};
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> out;
    for (int x = 0; x < src->order(); ++x)
        if (map[static_cast<size_t>(x)] == 0) out.push_back(x);
    return out;
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    if (first.dst->order() != second.src->order())
        throw std::invalid_argument("compose: middle groups differ");
    std::vector<int> m(first.src->order());
    for (int x = 0; x < first.src->order(); ++x) m[static_cast<size_t>(x)] = second(first(x));
    return GroupHom(first.src, second.dst, std::move(m));
}

SubgroupResult subgroup_generated(const GroupPtr& g, const std::vector<int>& gens,
                                  const std::vector<std::string>& names) {
    if (names.size() != gens.size())
        throw std::invalid_argument("subgroup_generated: names/gens size mismatch");
    std::vector<int> elems = g->closure(gens);
    int k = static_cast<int>(elems.size());
    std::vector<int> pos(g->order(), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<size_t>(elems[i])] = i;
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int prod = g->op(elems[i], elems[j]);
            if (pos[static_cast<size_t>(prod)] < 0)
                throw std::logic_error("subgroup_generated: closure not closed");
            table[static_cast<size_t>(i) * k + j] = pos[static_cast<size_t>(prod)];
        }
    std::vector<std::pair<std::string, int>> named;
    for (size_t t = 0; t < gens.size(); ++t)
        named.push_back({names[t], pos[static_cast<size_t>(gens[t])]});
    auto sub = std::make_shared<const FiniteGroup>(std::move(table), std::move(named));
    std::vector<int> emb(elems.begin(), elems.end());
    return SubgroupResult{sub, GroupHom(sub, g, std::move(emb))};
}

std::vector<int> cosets(const GroupPtr& g, const GroupHom& embedding) {
    if (embedding.dst->order() != g->order())
        throw std::invalid_argument("cosets: embedding does not target the group");
    if (!embedding.is_injective()) throw std::invalid_argument("cosets: embedding not injective");
    std::vector<char> covered(g->order(), 0);
    std::vector<int> reps;
    for (int x = 0; x < g->order(); ++x) {
        if (covered[x]) continue;
        reps.push_back(x);
        for (int h = 0; h < embedding.src->order(); ++h)
            covered[static_cast<size_t>(g->op(x, embedding(h)))] = 1;
    }
    return reps;
}

bool is_normal(const GroupPtr& g, const GroupHom& embedding) {
    std::vector<int> img = embedding.image();
    std::vector<char> in_img(g->order(), 0);
    for (int x : img) in_img[static_cast<size_t>(x)] = 1;
    for (int x = 0; x < g->order(); ++x)
        for (int h : img)
            if (!in_img[static_cast<size_t>(g->conjugate(x, h))]) return false;
    return true;
}

QuotientResult quotient(const GroupPtr& g, const GroupHom& normal_embedding) {
    if (!is_normal(g, normal_embedding))
        throw std::invalid_argument("quotient: subgroup is not normal");
    std::vector<int> img = normal_embedding.image();
    std::vector<int> coset_of(g->order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < g->order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int label = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int h : img) coset_of[static_cast<size_t>(g->op(x, h))] = label;
    }
    int k = static_cast<int>(reps.size());
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<size_t>(i) * k + j] =
                coset_of[static_cast<size_t>(g->op(reps[i], reps[j]))];
    auto q = std::make_shared<const FiniteGroup>(std::move(table),
                                                 std::vector<std::pair<std::string, int>>{});
    return QuotientResult{q, GroupHom(g, q, std::move(coset_of))};
}

bool is_dihedral_of(const GroupPtr& g, int n) {
    if (g->order() != 2 * n) return false;
    for (int r = 0; r < g->order(); ++r) {
        if (g->order_of(r) != n) continue;
        for (int s = 0; s < g->order(); ++s) {
            if (g->order_of(s) != 2) continue;
            if (g->conjugate(s, r) != g->inverse(r)) continue;
            if (static_cast<int>(g->closure({r, s}).size()) == g->order()) return true;
        }
    }
    return false;
}

}  // namespace stabmod::grp
