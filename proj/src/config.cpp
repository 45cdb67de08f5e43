#include "symq/config.hpp"

#include <fstream>

namespace symq {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

long long require_int(const nlohmann::json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    return j.get<long long>();
}

RElem entry_from_json(const Ring& ring, const nlohmann::json& e) {
    if (e.is_number_integer()) return ring.from_int(e.get<long long>());
    if (e.is_array()) {
        std::vector<long long> cs;
        for (const auto& c : e) cs.push_back(require_int(c, "coefficient"));
        try {
            return ring.from_coeffs(cs);
        } catch (const std::invalid_argument& ex) {
            fail(std::string("bad coefficient array: ") + ex.what());
        }
    }
    fail("gram entry must be an integer or a coefficient array");
}

}  // namespace

RingDescriptor ring_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) fail("ring config must have a \"kind\"");
    RingDescriptor d;
    std::string kind = j.at("kind").get<std::string>();
    d.n = require_int(j.value("n", nlohmann::json()), "ring modulus \"n\"");
    if (kind == "zmod") {
        d.kind = RingKind::zmod;
        if (j.contains("poly")) fail("zmod ring does not take a \"poly\"");
    } else if (kind == "quotient") {
        d.kind = RingKind::quotient;
        if (!j.contains("poly") || !j.at("poly").is_array())
            fail("quotient ring requires a \"poly\" array");
        for (const auto& c : j.at("poly")) d.poly.push_back(require_int(c, "poly coefficient"));
    } else {
        fail("unknown ring kind \"" + kind + "\"");
    }
    return d;
}

nlohmann::json ring_to_json(const RingDescriptor& d) {
    nlohmann::json j;
    j["kind"] = d.kind == RingKind::zmod ? "zmod" : "quotient";
    j["n"] = d.n;
    if (d.kind == RingKind::quotient) j["poly"] = d.poly;
    return j;
}

GramForm form_from_json(const Ring& ring, int rank, const nlohmann::json& config) {
    if (config.contains("gram")) {
        const auto& g = config.at("gram");
        if (!g.is_array() || static_cast<int>(g.size()) != rank)
            fail("gram matrix must be a " + std::to_string(rank) + "x" + std::to_string(rank) +
                 " array");
        std::vector<std::vector<RElem>> entries(rank, std::vector<RElem>(rank));
        for (int i = 0; i < rank; ++i) {
            if (!g[i].is_array() || static_cast<int>(g[i].size()) != rank)
                fail("gram row " + std::to_string(i) + " has wrong length");
            for (int j = 0; j < rank; ++j) entries[i][j] = entry_from_json(ring, g[i][j]);
        }
        try {
            return GramForm(ring, std::move(entries));
        } catch (const FormNotAlternating& e) {
            fail(std::string("gram matrix rejected: ") + e.what());
        }
    }
    if (config.contains("form")) {
        const auto& f = config.at("form");
        std::string name;
        RElem c = ring.one();
        if (f.is_string()) {
            name = f.get<std::string>();
        } else if (f.is_object()) {
            name = f.value("form", "");
            if (f.contains("c")) c = entry_from_json(ring, f.at("c"));
        } else {
            fail("\"form\" must be a string or an object");
        }
        if (name == "scaled" && config.contains("c")) c = entry_from_json(ring, config.at("c"));
        if (name != "standard" && name != "scaled") fail("unknown form shortcut \"" + name + "\"");
        if (rank % 2 != 0)
            fail("form shortcut \"" + name + "\" requires even rank, got " + std::to_string(rank));
        return GramForm::scaled(ring, rank, name == "standard" ? ring.one() : c);
    }
    fail("config must provide either \"gram\" or \"form\"");
}

LoadedInstance load_instance(const nlohmann::json& config, long long size_cap) {
    if (!config.is_object()) fail("config must be a JSON object");

    if (config.contains("op")) {
        // ad-hoc quandle table {"size":N,"op":[[...]]}
        const auto& op = config.at("op");
        if (!op.is_array()) fail("\"op\" must be an array of rows");
        std::vector<std::vector<int>> table;
        for (const auto& row : op) {
            std::vector<int> r;
            for (const auto& v : row) r.push_back(static_cast<int>(require_int(v, "op entry")));
            table.push_back(std::move(r));
        }
        if (config.contains("size") &&
            require_int(config.at("size"), "size") != static_cast<long long>(table.size()))
            fail("\"size\" does not match the op table");
        try {
            return LoadedInstance{std::nullopt, FiniteQuandle::check(table)};
        } catch (const std::domain_error& e) {
            fail(std::string("op table is not a quandle: ") + e.what());
        } catch (const std::invalid_argument& e) {
            fail(std::string("bad op table: ") + e.what());
        }
    }

    if (!config.contains("ring")) fail("config must provide \"ring\" or \"op\"");
    Ring ring = [&] {
        try {
            return Ring(ring_from_json(config.at("ring")));
        } catch (const std::invalid_argument& e) {
            fail(std::string("bad ring: ") + e.what());
        }
    }();
    int rank = static_cast<int>(require_int(config.value("rank", nlohmann::json()), "\"rank\""));
    if (rank < 1) fail("\"rank\" must be >= 1");
    GramForm form = form_from_json(ring, rank, config);
    try {
        SymplecticQuandle sq = build_symplectic_quandle(ring, rank, form, size_cap);
        FiniteQuandle q = sq.quandle;
        return LoadedInstance{std::move(sq), std::move(q)};
    } catch (const SizeCapExceeded& e) {
        fail(e.what());
    } catch (const DimensionMismatch& e) {
        fail(e.what());
    }
}

LoadedInstance load_instance_file(const std::string& path, long long size_cap) {
    std::ifstream in(path);
    if (!in) fail("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("config is not valid JSON: " + std::string(e.what()));
    }
    return load_instance(j, size_cap);
}

}  // namespace symq
