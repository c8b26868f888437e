#include "unicrit/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "unicrit/errors.hpp"

namespace unicrit {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Complex> parse_pairs(const ordered_json& coeffs) {
    if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array of [re, im] pairs");
    std::vector<Complex> out;
    out.reserve(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const auto& entry = coeffs[i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number())
            throw ParseError("coeffs[" + std::to_string(i) + "] is not a [re, im] number pair");
        out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return out;
}

ordered_json pairs_json(const std::vector<Complex>& c) {
    ordered_json arr = ordered_json::array();
    for (const Complex& z : c) arr.push_back(ordered_json::array({z.real(), z.imag()}));
    return arr;
}

}  // namespace

CoeffFile parse_coeff_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("coefficient file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("coefficient file must be a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ParseError("coefficient file needs a \"kind\" string (\"poly\" or \"trig\")");
    const std::string kind = j["kind"].get<std::string>();
    if (kind != "poly" && kind != "trig")
        throw ParseError("unknown kind \"" + kind + "\" (expected \"poly\" or \"trig\")");
    if (!j.contains("coeffs")) throw ParseError("coefficient file needs a \"coeffs\" array");

    const std::vector<Complex> pairs = parse_pairs(j["coeffs"]);
    CoeffFile file;
    if (kind == "poly") {
        file.kind = CoeffFile::Kind::Poly;
        file.poly = ComplexPoly(pairs);
    } else {
        file.kind = CoeffFile::Kind::Trig;
        file.trig = TrigPoly::from_laurent(pairs);
    }
    return file;
}

CoeffFile load_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coefficient file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coeff_text(buf.str());
}

std::string render_coeff_file(const ComplexPoly& p) {
    ordered_json j;
    j["kind"] = "poly";
    j["coeffs"] = pairs_json(p.coeffs());
    return j.dump(2) + "\n";
}

std::string render_coeff_file(const TrigPoly& t) {
    ordered_json j;
    j["kind"] = "trig";
    j["coeffs"] = pairs_json(t.laurent());
    return j.dump(2) + "\n";
}

}  // namespace unicrit
