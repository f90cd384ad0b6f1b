#include "slopelab/io.hpp"

#include <fstream>
#include <regex>

namespace slopelab {

using nlohmann::json;

json rat_json(const Rat& r) { return r.fraction_str(); }

Rat rat_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
        if (j.is_string()) return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected an integer or a rational string");
}

namespace {

std::int64_t int_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        Rat r = rat_from_json(j, where);
        if (r.den() == 1) return r.num();
    }
    throw InputError(where + ": expected an integer");
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

const json& array_field(const json& j, const char* key, const std::string& where) {
    const auto& a = field(j, key, where);
    if (!a.is_array()) throw InputError(where + "." + key + ": expected an array");
    return a;
}

std::vector<std::int64_t> ints(const json& a, const std::string& where) {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(int_from_json(a[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::size_t dim_of(const json& j) {
    auto d = int_from_json(field(j, "dim", "file"), "dim");
    if (d < 1) throw InputError("dim must be >= 1");
    return static_cast<std::size_t>(d);
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

GoodModel model_from_json(const json& j) {
    std::size_t n = dim_of(j);
    std::vector<MonomialFactor> fs;
    const auto& factors = array_field(j, "factors", "model");
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        std::string where = "factors[" + std::to_string(k) + "]";
        MonomialFactor m;
        auto pole = ints(array_field(f, "pole", where), where + ".pole");
        for (auto x : pole)
            if (x < 0) throw InputError(where + ".pole: entries must be >= 0");
        m.pole = MultiIndex(pole);
        if (f.contains("twist")) {
            const auto& t = array_field(f, "twist", where);
            for (std::size_t i = 0; i < t.size(); ++i) m.twist.push_back(rat_from_json(t[i], where + ".twist"));
        } else {
            m.twist.assign(n, Rat(0));
        }
        m.rank = f.contains("rank") ? int_from_json(f.at("rank"), where + ".rank") : 1;
        fs.push_back(std::move(m));
    }
    try {
        return GoodModel(n, std::move(fs));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("model: ") + e.what());
    }
}

GoodModel load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

BlowupScript script_from_json(const json& j) {
    BlowupScript sc;
    sc.init.dim = dim_of(j);
    auto a = ints(array_field(field(j, "Z", "script"), "a", "Z"), "Z.a");
    for (auto x : a)
        if (x < 0) throw InputError("Z.a: entries must be >= 0");
    sc.init.a = MultiIndex(a);
    const auto& r = array_field(field(j, "S", "script"), "r", "S");
    for (std::size_t i = 0; i < r.size(); ++i) sc.init.r.push_back(rat_from_json(r[i], "S.r"));
    std::string mode = j.value("mode", "toric");
    if (mode == "toric")
        sc.mode = BlowupMode::toric;
    else if (mode == "abstract")
        sc.mode = BlowupMode::abstract;
    else
        throw InputError("mode must be \"toric\" or \"abstract\"");
    if (j.contains("steps")) {
        const auto& steps = array_field(j, "steps", "script");
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto& s = steps[k];
            std::string where = "steps[" + std::to_string(k) + "]";
            if (s.contains("center")) {
                ToricCenter c;
                for (const auto& id : array_field(s, "center", where)) {
                    if (!id.is_string()) throw InputError(where + ".center: expected component ids");
                    c.ids.push_back(id.get<std::string>());
                }
                sc.steps.emplace_back(std::move(c));
            } else {
                AbstractCenter c;
                c.alpha = ints(array_field(s, "alpha", where), where + ".alpha");
                c.epsS = s.contains("epsS") ? ints(array_field(s, "epsS", where), where + ".epsS")
                                            : std::vector<std::int64_t>(sc.init.dim, 0);
                c.epsE = s.contains("epsE") ? ints(array_field(s, "epsE", where), where + ".epsE")
                                            : std::vector<std::int64_t>(k, 0);
                sc.steps.emplace_back(std::move(c));
            }
        }
    }
    return sc;
}

BlowupScript load_script(const std::string& path) { return script_from_json(read_json_file(path)); }

MonomialFunction parse_monomial(const std::string& text, std::size_t dim) {
    static const std::regex factor(R"(\s*x(\d+)\s*(?:\^\s*(\d+))?\s*)");
    std::vector<std::int64_t> a(dim, 0);
    std::size_t start = 0;
    while (true) {
        std::size_t star = text.find('*', start);
        std::string piece = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
        std::smatch m;
        if (!std::regex_match(piece, m, factor)) throw InputError("bad monomial factor '" + piece + "' in '" + text + "'");
        std::size_t i = std::stoul(m[1].str());
        if (i < 1 || i > dim)
            throw InputError("variable x" + m[1].str() + " outside dimension " + std::to_string(dim));
        a[i - 1] += m[2].matched ? std::stoll(m[2].str()) : 1;
        if (star == std::string::npos) break;
        start = star + 1;
    }
    MultiIndex idx(a);
    if (idx.is_zero()) throw InputError("monomial '" + text + "' has empty support");
    return MonomialFunction(idx);
}

}  // namespace slopelab
