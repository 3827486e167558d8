#include "stabmod/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "stabmod/catalog.hpp"
#include "stabmod/simples.hpp"

namespace stabmod::io {

using exactla::Matrix;
using exactla::RingMode;
using exactla::RingSpec;
using grp::GroupPtr;
using rep::RepModule;

json ring_to_json(const RingSpec& r) {
    json j;
    switch (r.mode) {
        case RingMode::PrimeField: j["mode"] = "prime_field"; break;
        case RingMode::Truncation: j["mode"] = "truncation"; break;
        case RingMode::PLocal: j["mode"] = "p_local"; break;
    }
    j["p"] = r.p;
    if (r.mode == RingMode::Truncation) j["m"] = r.m;
    return j;
}

RingSpec ring_from_json(const json& j) {
    std::string mode = j.at("mode").get<std::string>();
    unsigned p = j.at("p").get<unsigned>();
    if (mode == "prime_field") return RingSpec::prime_field(p);
    if (mode == "truncation") return RingSpec::truncation(p, j.at("m").get<unsigned>());
    if (mode == "p_local") return RingSpec::p_local(p);
    throw std::invalid_argument("ring_from_json: unknown mode '" + mode + "'");
}

namespace {

bool same_table(const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return false;
    for (int x = 0; x < a->order(); ++x)
        for (int y = 0; y < a->order(); ++y)
            if (a->op(x, y) != b->op(x, y)) return false;
    return true;
}

}  // namespace

json group_to_json(const GroupPtr& g) {
    json j;
    if (same_table(g, grp::sd16().group)) {
        j["kind"] = "builtin";
        j["name"] = "sd16";
        return j;
    }
    if (same_table(g, grp::q8_in_sd16().group)) {
        j["kind"] = "builtin";
        j["name"] = "q8";
        return j;
    }
    if (same_table(g, grp::g24().group)) {
        j["kind"] = "builtin";
        j["name"] = "g24";
        return j;
    }
    for (int k = 1; k <= 4; ++k) {
        long zk = 1;
        for (int t = 0; t < k; ++t) zk *= 3;
        if (g->order() != 24 * zk) continue;
        if (same_table(g, grp::n_level(k).group)) {
            j["kind"] = "builtin";
            j["name"] = "n_level";
            j["k"] = k;
            return j;
        }
    }
    if (g->order() >= 1 && same_table(g, grp::cyclic(g->order()))) {
        j["kind"] = "builtin";
        j["name"] = "cyclic";
        j["n"] = g->order();
        return j;
    }
    j["kind"] = "table";
    json mult = json::array();
    for (int x = 0; x < g->order(); ++x) {
        json row = json::array();
        for (int y = 0; y < g->order(); ++y) row.push_back(g->op(x, y));
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    json gens;
    for (const auto& [name, idx] : g->generators()) gens[name] = idx;
    j["gens"] = std::move(gens);
    return j;
}

GroupPtr group_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "builtin") {
        std::string name = j.at("name").get<std::string>();
        if (name == "sd16") return grp::sd16().group;
        if (name == "q8") return grp::q8_in_sd16().group;
        if (name == "g24") return grp::g24().group;
        if (name == "n_level") return grp::n_level(j.at("k").get<int>()).group;
        if (name == "cyclic") return grp::cyclic(j.at("n").get<int>());
        throw std::invalid_argument("group_from_json: unknown builtin '" + name + "'");
    }
    if (kind == "table") {
        const json& mult = j.at("mult");
        int n = static_cast<int>(mult.size());
        std::vector<int> table;
        table.reserve(static_cast<size_t>(n) * n);
        for (const auto& row : mult)
            for (const auto& v : row) table.push_back(v.get<int>());
        std::vector<std::pair<std::string, int>> gens;
        if (j.contains("gens"))
            for (auto it = j.at("gens").begin(); it != j.at("gens").end(); ++it)
                gens.push_back({it.key(), it.value().get<int>()});
        return std::make_shared<const grp::FiniteGroup>(std::move(table), std::move(gens));
    }
    throw std::invalid_argument("group_from_json: unknown kind '" + kind + "'");
}

json matrix_to_json(const Matrix& m) {
    json j;
    j["ring"] = ring_to_json(m.ring());
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    json entries = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long jcol = 0; jcol < m.cols(); ++jcol) row.push_back(m.at(i, jcol).get_str());
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const json& j) {
    RingSpec ring = ring_from_json(j.at("ring"));
    long rows = j.at("rows").get<long>();
    long cols = j.at("cols").get<long>();
    Matrix m(ring, rows, cols);
    const json& entries = j.at("entries");
    if (static_cast<long>(entries.size()) != rows)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    for (long i = 0; i < rows; ++i) {
        const json& row = entries[static_cast<size_t>(i)];
        if (static_cast<long>(row.size()) != cols)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (long c = 0; c < cols; ++c) {
            mpq_class v(row[static_cast<size_t>(c)].get<std::string>());
            v.canonicalize();
            m.set(i, c, v);
        }
    }
    return m;
}

json module_to_json(const RepModule& m) {
    json j;
    j["group"] = group_to_json(m.group());
    j["ring"] = ring_to_json(m.ring());
    j["rank"] = m.rank();
    json gens = json::array();
    for (const auto& [name, idx] : m.group()->generators()) {
        json one;
        one["name"] = name;
        one["matrix"] = matrix_to_json(m.act_dense(idx));
        gens.push_back(std::move(one));
    }
    j["generator_actions"] = std::move(gens);
    return j;
}

RepModule module_from_json(const json& j) {
    GroupPtr g = group_from_json(j.at("group"));
    RingSpec ring = ring_from_json(j.at("ring"));
    long rank = j.at("rank").get<long>();
    std::vector<std::pair<std::string, Matrix>> gen_acts;
    for (const auto& one : j.at("generator_actions"))
        gen_acts.push_back({one.at("name").get<std::string>(),
                            matrix_from_json(one.at("matrix")).with_ring(ring)});
    return rep::module_from_generator_actions(g, ring, rank, gen_acts);
}

json complex_to_json(const homalg::ChainComplex& c) {
    json j;
    json modules = json::array();
    for (long i = 0; i < c.length(); ++i) modules.push_back(module_to_json(c.module(i)));
    j["modules"] = std::move(modules);
    json maps = json::array();
    for (long i = 0; i < c.map_count(); ++i) maps.push_back(matrix_to_json(c.map(i).mat));
    j["maps"] = std::move(maps);
    return j;
}

homalg::ChainComplex complex_from_json(const json& j) {
    std::vector<RepModule> modules;
    for (const auto& m : j.at("modules")) modules.push_back(module_from_json(m));
    std::vector<rep::ModuleHom> maps;
    const json& jm = j.at("maps");
    for (size_t i = 0; i < jm.size(); ++i) {
        if (i + 1 >= modules.size())
            throw std::invalid_argument("complex_from_json: too many maps");
        maps.emplace_back(modules[i], modules[i + 1], matrix_from_json(jm[i]));
    }
    return homalg::ChainComplex(std::move(modules), std::move(maps));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_text_file: cannot open " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_text_file: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace stabmod::io
