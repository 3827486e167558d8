#include "stabmod/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace stabmod::grp {

namespace {

long pow3(int k) {
    long r = 1;
    for (int t = 0; t < k; ++t) r *= 3;
    return r;
}

}  // namespace

GroupPtr cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    std::vector<std::pair<std::string, int>> gens;
    if (n > 1) gens.push_back({"t", 1});
    return std::make_shared<const FiniteGroup>(std::move(table), std::move(gens));
}

const Sd16& sd16() {
    static const Sd16 instance = [] {
        // omega^a phi^b with phi omega = omega^3 phi, so
        // (a1,b1)*(a2,b2) = (a1 + a2*3^b1 mod 8, b1+b2 mod 2)
        const int n = 16;
        auto idx = [](int a, int b) { return a + 8 * b; };
        std::vector<int> table(n * n);
        for (int a1 = 0; a1 < 8; ++a1)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int a2 = 0; a2 < 8; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2) {
                        int a = (a1 + a2 * (b1 ? 3 : 1)) % 8;
                        int b = (b1 + b2) % 2;
                        table[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] = idx(a, b);
                    }
        auto g = std::make_shared<const FiniteGroup>(
            std::move(table),
            std::vector<std::pair<std::string, int>>{{"omega", idx(1, 0)}, {"phi", idx(0, 1)}});
        return Sd16{g, idx(1, 0), idx(0, 1)};
    }();
    return instance;
}

const Q8Data& q8_in_sd16() {
    static const Q8Data instance = [] {
        const Sd16& s = sd16();
        int i_elt = s.group->op(s.omega, s.phi);         // omega*phi
        int j_elt = s.group->op(s.omega, s.omega);       // omega^2
        SubgroupResult sub = subgroup_generated(s.group, {i_elt, j_elt}, {"i", "j"});
        if (sub.subgroup->order() != 8) throw std::logic_error("q8_in_sd16: wrong order");
        // theta: +1 on i, -1 on j, extended multiplicatively by search over
        // the i^a j^b (-1)^c normal form
        const GroupPtr& q = sub.subgroup;
        int qi = q->generator("i"), qj = q->generator("j");
        std::vector<int> theta(8, 0);
        theta[0] = 1;
        // breadth-first extension
        std::vector<int> frontier{0};
        while (true) {
            bool changed = false;
            for (int x = 0; x < 8; ++x) {
                if (theta[x] == 0) continue;
                int xi = q->op(x, qi), xj = q->op(x, qj);
                int vi = theta[x], vj = -theta[x];
                for (auto [y, v] : {std::pair{xi, vi}, std::pair{xj, vj}}) {
                    if (theta[y] == 0) {
                        theta[y] = v;
                        changed = true;
                    } else if (theta[y] != v) {
                        throw std::logic_error("q8_in_sd16: theta not a character");
                    }
                }
            }
            if (!changed) break;
        }
        return Q8Data{q, std::move(sub.embedding), std::move(theta)};
    }();
    return instance;
}

const G24Data& g24() {
    static const G24Data instance = [] {
        const Q8Data& q8 = q8_in_sd16();
        const GroupPtr& q = q8.group;
        const int n = 24;
        auto idx = [](int c, int qe) { return c * 8 + qe; };
        std::vector<int> table(n * n);
        for (int c1 = 0; c1 < 3; ++c1)
            for (int q1 = 0; q1 < 8; ++q1)
                for (int c2 = 0; c2 < 3; ++c2)
                    for (int q2 = 0; q2 < 8; ++q2) {
                        int c = ((c1 + q8.theta[q1] * c2) % 3 + 3) % 3;
                        int qe = q->op(q1, q2);
                        table[static_cast<size_t>(idx(c1, q1)) * n + idx(c2, q2)] = idx(c, qe);
                    }
        int ci = q->generator("i"), cj = q->generator("j");
        auto g = std::make_shared<const FiniteGroup>(
            std::move(table), std::vector<std::pair<std::string, int>>{
                                  {"c", idx(1, 0)}, {"i", idx(0, ci)}, {"j", idx(0, cj)}});
        GroupPtr c3 = cyclic(3);
        std::vector<int> c3map(3);
        for (int t = 0; t < 3; ++t) c3map[static_cast<size_t>(t)] = idx(t, 0);
        GroupHom c3_in(c3, g, std::move(c3map));
        std::vector<int> q8map(8);
        for (int t = 0; t < 8; ++t) q8map[static_cast<size_t>(t)] = idx(0, t);
        GroupHom q8_in(q, g, std::move(q8map));
        std::vector<int> proj(24);
        for (int c = 0; c < 3; ++c)
            for (int qe = 0; qe < 8; ++qe) proj[static_cast<size_t>(idx(c, qe))] = qe;
        GroupHom to_q8(g, q, std::move(proj));
        return G24Data{g,     c3,    c3_in,       GroupHom(q8_in), GroupHom(c3_in),
                       q8_in, to_q8, idx(1, 0),   idx(0, ci),      idx(0, cj)};
    }();
    return instance;
}

namespace {

NLevelData build_n_level(int k) {
    const Q8Data& q8 = q8_in_sd16();
    const G24Data& g24d = g24();
    const GroupPtr& q = q8.group;
    const long zk = pow3(k);
    const long n = 24 * zk;
    auto idx = [zk](long a, long b, int qe) { return static_cast<int>((a * zk + b) * 8 + qe); };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (long a1 = 0; a1 < 3; ++a1)
        for (long b1 = 0; b1 < zk; ++b1)
            for (int q1 = 0; q1 < 8; ++q1) {
                int s = q8.theta[q1];
                int row = idx(a1, b1, q1);
                for (long a2 = 0; a2 < 3; ++a2)
                    for (long b2 = 0; b2 < zk; ++b2)
                        for (int q2 = 0; q2 < 8; ++q2) {
                            long a = ((a1 + s * a2) % 3 + 3) % 3;
                            long b = ((b1 + s * b2) % zk + zk) % zk;
                            table[static_cast<size_t>(row) * n + idx(a2, b2, q2)] =
                                idx(a, b, q->op(q1, q2));
                        }
            }
    int ci = q->generator("i"), cj = q->generator("j");
    auto g = std::make_shared<const FiniteGroup>(
        std::move(table),
        std::vector<std::pair<std::string, int>>{{"c", idx(1, 0, 0)},
                                                 {"g", idx(0, 1, 0)},
                                                 {"i", idx(0, 0, ci)},
                                                 {"j", idx(0, 0, cj)}});
    std::vector<int> g24map(24);
    for (int c = 0; c < 3; ++c)
        for (int qe = 0; qe < 8; ++qe) g24map[static_cast<size_t>(c * 8 + qe)] = idx(c, 0, qe);
    GroupHom g24_in(g24d.group, g, std::move(g24map));
    std::vector<int> q8map(8);
    for (int t = 0; t < 8; ++t) q8map[static_cast<size_t>(t)] = idx(0, 0, t);
    GroupHom q8_in(q, g, std::move(q8map));
    GroupPtr c3 = g24d.c3;
    std::vector<int> c3map(3);
    for (int t = 0; t < 3; ++t) c3map[static_cast<size_t>(t)] = idx(t, 0, 0);
    GroupHom c3_in(c3, g, std::move(c3map));
    GroupPtr zgrp = cyclic(static_cast<int>(zk));
    std::vector<int> zmap(zk);
    for (long t = 0; t < zk; ++t) zmap[static_cast<size_t>(t)] = idx(0, t, 0);
    GroupHom z_in(zgrp, g, std::move(zmap));
    SubgroupResult dsub = subgroup_generated(g, {idx(1, 0, 0), idx(0, 0, ci)}, {"c", "i"});
    if (dsub.subgroup->order() != 12) throw std::logic_error("n_level: |D| != 12");
    SubgroupResult sylow = subgroup_generated(g, {idx(1, 0, 0), idx(0, 1, 0)}, {"c", "g"});
    if (sylow.subgroup->order() != 3 * zk) throw std::logic_error("n_level: bad Sylow subgroup");
    return NLevelData{k,
                      g,
                      std::move(g24_in),
                      GroupHom(q8_in),
                      std::move(c3_in),
                      std::move(z_in),
                      std::move(dsub.embedding),
                      std::move(sylow.embedding),
                      std::move(q8_in),
                      idx(1, 0, 0),
                      idx(0, 1, 0),
                      idx(0, 0, ci),
                      idx(0, 0, cj)};
}

}  // namespace

NLevelData n_level(int k) {
    if (k < 1) throw std::invalid_argument("n_level: k must be >= 1");
    if (k > 4) throw std::invalid_argument("n_level: k > 4 exceeds desk scale");
    static std::map<int, NLevelData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_n_level(k)).first;
    return it->second;
}

Tower tower(int k_max) {
    if (k_max < 2) throw std::invalid_argument("tower: k_max must be >= 2");
    Tower t;
    for (int k = 1; k <= k_max; ++k) t.levels.push_back(n_level(k));
    for (int k = 1; k < k_max; ++k) {
        const NLevelData& hi = t.levels[static_cast<size_t>(k)];      // N_{k+1}
        const NLevelData& lo = t.levels[static_cast<size_t>(k - 1)];  // N_k
        long zhi = pow3(k + 1), zlo = pow3(k);
        std::vector<int> map(static_cast<size_t>(hi.group->order()));
        for (long a = 0; a < 3; ++a)
            for (long b = 0; b < zhi; ++b)
                for (int qe = 0; qe < 8; ++qe) {
                    int src = static_cast<int>((a * zhi + b) * 8 + qe);
                    int dst = static_cast<int>((a * zlo + (b % zlo)) * 8 + qe);
                    map[static_cast<size_t>(src)] = dst;
                }
        t.down.emplace_back(hi.group, lo.group, std::move(map));
    }
    return t;
}

}  // namespace stabmod::grp
