#pragma once

#include <fstream>

#include "json.hpp"

#include "barhom/verify.hpp"

namespace barhom {

using json = nlohmann::json;

/// Group from a JSON spec: {"kind": "...", "params": {...}} for builtins and
/// products, or an explicit table {"mul": [[...]], "label": ..., "names": [...]}.
inline Group group_from_json(const json& spec) {
    if (spec.is_string()) return build_group(spec.get<std::string>());
    if (!spec.is_object()) throw SpecError("group", "group spec must be a string or object");
    if (spec.contains("mul")) {
        auto mul = spec.at("mul").get<std::vector<std::vector<Elem>>>();
        std::string label = spec.value("label", std::string("explicit"));
        std::vector<std::string> names;
        if (spec.contains("names")) names = spec.at("names").get<std::vector<std::string>>();
        return Group(std::move(mul), std::move(label), std::move(names));
    }
    const std::string kind = spec.value("kind", std::string());
    const json params = spec.value("params", json::object());
    if (kind == "cyclic") return cyclic_group(params.at("n").get<int>());
    if (kind == "dihedral") return dihedral_group(params.at("n").get<int>());
    if (kind == "symmetric") return symmetric_group(params.at("n").get<int>());
    if (kind == "product") {
        const auto& factors = params.at("factors");
        if (!factors.is_array() || factors.empty())
            throw SpecError("group.params.factors", "product needs a nonempty factor list");
        Group g = group_from_json(factors[0]);
        for (size_t i = 1; i < factors.size(); ++i)
            g = product_group(g, group_from_json(factors[i]));
        return g;
    }
    throw SpecError("group.kind", "unknown group kind '" + kind + "'");
}

/// Module from a JSON spec: builtin kinds, or explicit
/// {"moduli": [...], "action": [per-element k x k matrices], "label": ...}.
inline GModule module_from_json(const json& spec, const Group& g) {
    if (spec.is_string()) return build_gmodule(spec.get<std::string>(), g);
    if (!spec.is_object()) throw SpecError("module", "module spec must be a string or object");
    if (spec.contains("moduli")) {
        auto moduli = spec.at("moduli").get<std::vector<i64>>();
        auto mats = spec.at("action").get<std::vector<std::vector<std::vector<i64>>>>();
        std::vector<std::vector<i64>> flat;
        flat.reserve(mats.size());
        const size_t k = moduli.size();
        for (const auto& m : mats) {
            std::vector<i64> row;
            if (m.size() != k) throw SpecError("module.action", "action matrix has wrong shape");
            for (const auto& r : m) {
                if (r.size() != k)
                    throw SpecError("module.action", "action matrix has wrong shape");
                row.insert(row.end(), r.begin(), r.end());
            }
            flat.push_back(std::move(row));
        }
        return GModule(g, std::move(moduli), std::move(flat),
                       spec.value("label", std::string("explicit")));
    }
    const std::string kind = spec.value("kind", std::string());
    const json params = spec.value("params", json::object());
    if (kind == "trivial-int") return trivial_int_module(g);
    if (kind == "trivial-mod") return trivial_mod_module(g, params.at("m").get<i64>());
    if (kind == "regular") return regular_module(g);
    if (kind == "sign") {
        if (params.contains("kernel"))
            return sign_module(g, params.at("kernel").get<std::vector<Elem>>());
        return sign_module(g, builtin_sign_kernel(g));
    }
    throw SpecError("module.kind", "unknown module kind '" + kind + "'");
}

/// Cochain file: {"degree": n, "module": <spec>, "entries":
/// [{"args": [element indices], "value": [coords]}]}; omitted entries are 0.
inline Cochain cochain_from_json(const json& file, const Group& g, const GModule& m) {
    if (!file.is_object()) throw SpecError("cochain", "cochain file must be a JSON object");
    if (!file.contains("degree")) throw SpecError("cochain.degree", "missing degree");
    const int degree = file.at("degree").get<int>();
    if (degree < 0) throw SpecError("cochain.degree", "degree must be >= 0");
    if (file.contains("module")) {
        const GModule declared = module_from_json(file.at("module"), g);
        if (!declared.same_structure(m))
            throw SpecError("cochain.module",
                            "cochain file module does not match the requested module");
    }
    Cochain a(g, m, degree);
    for (const auto& entry : file.value("entries", json::array())) {
        if (!entry.contains("args") || !entry.contains("value"))
            throw SpecError("cochain.entries", "entry needs args and value");
        const auto args = entry.at("args").get<std::vector<Elem>>();
        if (static_cast<int>(args.size()) != degree)
            throw SpecError("cochain.entries.args", "argument arity mismatch");
        for (Elem x : args)
            if (x < 0 || x >= g.order())
                throw SpecError("cochain.entries.args", "element index out of range");
        const auto value = entry.at("value").get<std::vector<i64>>();
        a.set(a.encode(args), ModuleElement::from_coords(m, value));
    }
    return a;
}

inline json cochain_to_json(const Cochain& a, const json& module_spec) {
    json entries = json::array();
    for (i64 code = 0; code < a.codes(); ++code) {
        const ModuleElement v = a.value_at(code);
        if (v.is_zero()) continue;
        entries.push_back({{"args", a.decode(code)}, {"value", v.coords}});
    }
    return json{{"degree", a.degree()}, {"module", module_spec}, {"entries", entries}};
}

/// Debug serialization of chains: a list of {coefficient, tuple} records.
inline json chain_to_json(const Chain& c) {
    json out = json::array();
    for (const auto& [t, coef] : c.terms()) {
        std::vector<int> tuple;
        for (int i = 0; i < t.size(); ++i) tuple.push_back(t[i]);
        out.push_back({{"coefficient", coef}, {"tuple", tuple}});
    }
    return out;
}

inline json tensor_chain_to_json(const TensorChain& c) {
    json out = json::array();
    for (const auto& [k, coef] : c.terms()) {
        std::vector<int> left, right;
        for (int i = 0; i < k.first.size(); ++i) left.push_back(k.first[i]);
        for (int i = 0; i < k.second.size(); ++i) right.push_back(k.second[i]);
        out.push_back({{"coefficient", coef}, {"left", left}, {"right", right}});
    }
    return out;
}

inline constexpr const char* kReportSchema = "barhom-report/1";

inline json report_to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& w : r.failures)
        failures.push_back({{"context", w.context},
                            {"basis", w.basis},
                            {"input", w.input},
                            {"lhs", w.lhs},
                            {"rhs", w.rhs}});
    return json{{"identity", r.identity}, {"group", r.group},       {"modules", r.modules},
                {"params", r.params},     {"max_degree", r.max_degree},
                {"attempted", r.attempted}, {"passed", r.passed},   {"pass", r.pass()},
                {"failures", failures}};
}

inline json reports_to_json(const std::vector<VerificationReport>& reports) {
    bool all = true;
    json list = json::array();
    for (const auto& r : reports) {
        all = all && r.pass();
        list.push_back(report_to_json(r));
    }
    return json{{"schema", kReportSchema}, {"pass", all}, {"reports", list}};
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw SpecError("out", "cannot open output file '" + path + "'");
    out << j.dump(2) << "\n";
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("file", "cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw SpecError("file", "malformed JSON in '" + path + "': " + e.what());
    }
}

} // namespace barhom
