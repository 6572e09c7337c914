#include "io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ifsx {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json audit_to_json(const AuditReport& audit) {
    json out = json::array();
    for (const auto& e : audit.entries) {
        json entry{{"condition", e.condition}, {"pass", e.pass}, {"margin", e.margin}};
        if (!e.note.empty()) entry["note"] = e.note;
        out.push_back(std::move(entry));
    }
    return out;
}

json rationals_to_json(const std::vector<Rational>& rs) {
    json out = json::array();
    for (const auto& r : rs) out.push_back(rational_to_string(r));
    return out;
}

json map_to_json(const ContractiveMap& m);

json map_to_json(const ContractiveMap& m) {
    json out;
    out["kind"] = m.declared_kind() == MapKind::contraction ? "contraction" : "weak";
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AffineMap>) {
                out["type"] = "affine";
                out["a"] = v.a;
                out["b"] = v.b;
            } else if constexpr (std::is_same_v<T, ConstantMap>) {
                out["type"] = "constant";
                out["c"] = v.c.coords;
            } else if constexpr (std::is_same_v<T, PiecewiseLinearMap>) {
                out["type"] = "pwl";
                json nodes = json::array();
                for (const auto& [x, y] : v.nodes) nodes.push_back(json::array({x, y}));
                out["nodes"] = std::move(nodes);
            } else if constexpr (std::is_same_v<T, LogisticMap>) {
                out["type"] = "logistic";
            } else {
                out["type"] = "embedded";
                out["inner"] = map_to_json(*v.inner);
                out["dim"] = v.target_dim;
            }
        },
        m.variant());
    return out;
}

ContractiveMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        fail(ErrorCode::parse_error, "map config: missing \"type\"");
    std::string type = j.at("type").get<std::string>();
    std::optional<MapKind> kind;
    if (j.contains("kind")) {
        std::string k = j.at("kind").get<std::string>();
        if (k == "contraction")
            kind = MapKind::contraction;
        else if (k == "weak")
            kind = MapKind::weak;
        else
            fail(ErrorCode::parse_error, "map config: unknown kind '" + k + "'");
    }
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "type" && key != "kind" && key != "a" && key != "b" && key != "c" &&
            key != "nodes" && key != "inner" && key != "dim")
            fail(ErrorCode::parse_error, "map config: unknown key '" + key + "'");
    }
    if (type == "affine") {
        if (!j.contains("a") || !j.contains("b"))
            fail(ErrorCode::parse_error, "affine map config: needs \"a\" and \"b\"");
        return ContractiveMap::affine(j.at("a").get<double>(), j.at("b").get<double>());
    }
    if (type == "constant") {
        if (!j.contains("c") || !j.at("c").is_array())
            fail(ErrorCode::parse_error, "constant map config: needs coordinate array \"c\"");
        Point c;
        for (const auto& v : j.at("c")) c.coords.push_back(v.get<double>());
        return ContractiveMap::constant(std::move(c));
    }
    if (type == "pwl") {
        if (!j.contains("nodes") || !j.at("nodes").is_array())
            fail(ErrorCode::parse_error, "pwl map config: needs \"nodes\" array");
        std::vector<std::pair<double, double>> nodes;
        for (const auto& node : j.at("nodes")) {
            if (!node.is_array() || node.size() != 2)
                fail(ErrorCode::parse_error, "pwl map config: node must be [x, y]");
            nodes.emplace_back(node[0].get<double>(), node[1].get<double>());
        }
        return ContractiveMap::piecewise_linear(std::move(nodes), kind);
    }
    if (type == "logistic") return ContractiveMap::logistic();
    if (type == "embedded") {
        if (!j.contains("inner") || !j.contains("dim"))
            fail(ErrorCode::parse_error, "embedded map config: needs \"inner\" and \"dim\"");
        return embed(map_from_json(j.at("inner")), j.at("dim").get<std::size_t>());
    }
    fail(ErrorCode::parse_error, "map config: unknown type '" + type + "'");
}

json system_to_json(const FunctionSystem& sys) {
    json maps = json::array();
    for (const auto& m : sys.maps()) maps.push_back(map_to_json(m));
    return json{{"dim", sys.dim()}, {"maps", std::move(maps)}};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON document");
    return j;
}

}  // namespace

std::string cloud_to_csv(const CompactSet& a) {
    std::string out;
    for (const auto& p : a.points()) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (i) out += ',';
            out += fmt17(p.coords[i]);
        }
        out += '\n';
    }
    return out;
}

CompactSet cloud_from_csv(const std::string& text) {
    std::vector<Point> pts;
    std::size_t dim = 0;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed.front() == '#') continue;
        Point p;
        std::istringstream fields(trimmed);
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(field, &used);
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used])))
                    ++used;
                if (used != field.size()) throw std::invalid_argument(field);
                p.coords.push_back(v);
            } catch (const std::exception&) {
                fail(ErrorCode::parse_error,
                     "CSV line " + std::to_string(lineno) + ": bad field '" + field + "'");
            }
        }
        if (p.dim() == 0)
            fail(ErrorCode::parse_error, "CSV line " + std::to_string(lineno) + ": no fields");
        if (dim == 0) dim = p.dim();
        if (p.dim() != dim)
            fail(ErrorCode::parse_error,
                 "CSV line " + std::to_string(lineno) + ": inconsistent dimension");
        pts.push_back(std::move(p));
    }
    if (pts.empty()) fail(ErrorCode::parse_error, "CSV: no points");
    return CompactSet(std::move(pts), dim);
}

CompactSet load_cloud(const std::string& path) { return cloud_from_csv(load_text(path)); }

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io_error, "cannot open for writing: " + path);
    out << text;
    if (!out) fail(ErrorCode::io_error, "write failed: " + path);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string map_to_json_text(const ContractiveMap& m) { return map_to_json(m).dump(2) + "\n"; }

ContractiveMap map_from_json_text(const std::string& text) {
    try {
        return map_from_json(parse_json(text));
    } catch (const json::exception& e) {
        fail(ErrorCode::parse_error, std::string("map config: ") + e.what());
    }
}

std::string system_to_json_text(const FunctionSystem& sys) {
    return system_to_json(sys).dump(2) + "\n";
}

FunctionSystem system_from_json_text(const std::string& text) {
    try {
        json j = parse_json(text);
        if (!j.is_object() || !j.contains("maps") || !j.at("maps").is_array())
            fail(ErrorCode::parse_error, "system config: needs \"maps\" array");
        for (const auto& [key, value] : j.items()) {
            (void)value;
            if (key != "dim" && key != "maps")
                fail(ErrorCode::parse_error, "system config: unknown key '" + key + "'");
        }
        std::vector<ContractiveMap> maps;
        for (const auto& m : j.at("maps")) maps.push_back(map_from_json(m));
        std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>()
                                            : (maps.empty() ? 1 : maps.front().dim());
        return FunctionSystem(std::move(maps), dim);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse_error, std::string("system config: ") + e.what());
    }
}

std::string witness_to_json_text(const PropPWitness& w) {
    json out{{"kind", "prop_p"},
             {"depth", w.depth},
             {"interval_tops", rationals_to_json(w.interval_tops)},
             {"counts", w.counts},
             {"x_points", rationals_to_json(w.x_points)},
             {"system", system_to_json(w.system)},
             {"audit", audit_to_json(w.audit)},
             {"metadata",
              {{"sentinel",
                "the last point is mapped to but has no prescribed image; invariance is "
                "audited on the truncation minus the sentinel"}}}};
    return out.dump(2) + "\n";
}

std::string witness_to_json_text(const LadderWitness& w) {
    json out{{"kind", "ladder"},
             {"n", w.n},
             {"k", w.k},
             {"a", rationals_to_json(w.a)},
             {"b", rationals_to_json(w.b)},
             {"delta", rational_to_string(w.delta)},
             {"points", rationals_to_json(w.f_points)},
             {"system", system_to_json(w.system)},
             {"audit", audit_to_json(w.audit)}};
    return out.dump(2) + "\n";
}

std::string witness_to_json_text(const IntervalWitness& w) {
    json ivs = json::array();
    for (const auto& iv : w.intervals) {
        ivs.push_back(json{{"group", iv.group},
                           {"index", iv.index},
                           {"lo", rational_to_string(iv.lo)},
                           {"hi", rational_to_string(iv.hi)}});
    }
    json out{{"kind", "intervals"},
             {"depth", w.depth},
             {"k_seq", w.k_seq},
             {"lengths", rationals_to_json(w.lengths)},
             {"anchor", rational_to_string(w.anchor)},
             {"beta", rational_to_string(w.beta)},
             {"intervals", std::move(ivs)},
             {"audit", audit_to_json(w.audit)}};
    return out.dump(2) + "\n";
}

std::string witness_to_json_text(const EpsilonSystem& s) {
    json out{{"kind", "epsilon_system"},
             {"epsilon", s.epsilon},
             {"n_swallow", s.n_swallow},
             {"alpha", s.alpha},
             {"i0", s.i0},
             {"y_head", std::vector<double>(s.y_seq.begin(),
                                            s.y_seq.begin() +
                                                std::min<std::size_t>(s.y_seq.size(), 16))},
             {"system", system_to_json(s.system)},
             {"iterations", s.attractor.iterations},
             {"residual", s.attractor.residual},
             {"audit", audit_to_json(s.audit)}};
    return out.dump(2) + "\n";
}

LadderSummary ladder_summary_from_json_text(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || j.value("kind", "") != "ladder")
        fail(ErrorCode::parse_error, "expected a ladder witness document");
    try {
        std::vector<double> pts;
        for (const auto& p : j.at("points"))
            pts.push_back(to_double(rational_from_string(p.get<std::string>())));
        return LadderSummary{CompactSet::from_reals(std::move(pts)),
                             to_double(rational_from_string(j.at("delta").get<std::string>())),
                             j.at("n").get<std::size_t>()};
    } catch (const json::exception& e) {
        fail(ErrorCode::parse_error, std::string("ladder witness document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        fail(ErrorCode::parse_error, std::string("ladder witness document: ") + e.what());
    }
}

std::string search_report_to_json_text(const SearchReport& r) {
    json out{{"trials", r.trials},
             {"skipped", r.skipped},
             {"seed", r.seed},
             {"threshold", r.threshold},
             {"violated", r.violated}};
    if (r.trials > 0 && r.best_system) {
        out["best_distance"] = r.best_distance;
        out["best_trial"] = r.best_trial;
        out["best_system"] = system_to_json(*r.best_system);
    }
    if (!r.trace.empty()) {
        json trace = json::array();
        for (const auto& [t, d] : r.trace) trace.push_back(json::array({t, d}));
        out["trace"] = std::move(trace);
    }
    return out.dump(2) + "\n";
}

}  // namespace ifsx
