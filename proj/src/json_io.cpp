#include "nlslab/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nlslab {

using nlohmann::json;

namespace {

json complex_arrays(const std::vector<cplx>& v) {
    json re = json::array(), im = json::array();
    for (cplx c : v) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    return json{{"re", re}, {"im", im}};
}

std::vector<cplx> read_complex(const json& j) {
    std::vector<cplx> out;
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    for (size_t i = 0; i < re.size(); ++i) out.emplace_back(re[i].get<double>(), im[i].get<double>());
    return out;
}

json discrete_to_json(const DiscreteSpectrum& d) {
    return json{{"thetas", d.thetas}, {"c", complex_arrays(d.c)}};
}

DiscreteSpectrum discrete_from_json(const json& j) {
    DiscreteSpectrum d;
    d.thetas = j.at("thetas").get<std::vector<double>>();
    d.c = read_complex(j.at("c"));
    return d;
}

} // namespace

std::string scattering_data_to_json(const ScatteringData& data) {
    json j;
    j["schema"] = "nlslab.scattering/1";
    j["grid"] = {{"z", data.coeffs.grid.z},
                 {"delta0", data.coeffs.grid.delta0},
                 {"delta1", data.coeffs.grid.delta1}};
    j["r"] = complex_arrays(data.coeffs.r);
    j["a"] = complex_arrays(data.coeffs.a);
    j["b"] = complex_arrays(data.coeffs.b);
    j["discrete"] = discrete_to_json(data.discrete);
    j["boundary_suspect_thetas"] = data.boundary_suspect_thetas;
    j["window"] = {{"sp", data.density.sp}, {"fp", data.density.fp},
                   {"sn", data.density.sn}, {"fn", data.density.fn},
                   {"eta_min", data.density.eta_min},
                   {"abs_a_plus", data.density.abs_a_plus},
                   {"abs_a_minus", data.density.abs_a_minus}};
    return j.dump(2);
}

ScatteringData scattering_data_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "nlslab.scattering/1")
        throw std::runtime_error("scattering_data_from_json: unknown schema");
    ScatteringData data;
    auto zs = j.at("grid").at("z").get<std::vector<double>>();
    data.coeffs.grid = SpectralGrid{};
    data.coeffs.grid.z = zs;
    data.coeffs.grid.delta0 = j.at("grid").at("delta0").get<double>();
    data.coeffs.grid.delta1 = j.at("grid").at("delta1").get<double>();
    // rebuild inversion partners
    data.coeffs.grid.partner_.assign(zs.size(), -1);
    for (int i = 0; i < (int)zs.size(); ++i) {
        if (data.coeffs.grid.partner_[i] >= 0) continue;
        double target = 1.0 / zs[i];
        int jbest = i;
        double best = 1e300;
        for (int k = 0; k < (int)zs.size(); ++k) {
            double d = std::abs(zs[k] - target);
            if (d < best) {
                best = d;
                jbest = k;
            }
        }
        data.coeffs.grid.partner_[i] = jbest;
        data.coeffs.grid.partner_[jbest] = i;
    }
    data.coeffs.r = read_complex(j.at("r"));
    if (j.contains("a")) data.coeffs.a = read_complex(j.at("a"));
    if (j.contains("b")) data.coeffs.b = read_complex(j.at("b"));
    data.discrete = discrete_from_json(j.at("discrete"));
    if (j.contains("boundary_suspect_thetas"))
        data.boundary_suspect_thetas = j.at("boundary_suspect_thetas").get<std::vector<double>>();
    const auto& w = j.at("window");
    data.density.sp = w.at("sp").get<std::vector<double>>();
    data.density.fp = w.at("fp").get<std::vector<double>>();
    data.density.sn = w.at("sn").get<std::vector<double>>();
    data.density.fn = w.at("fn").get<std::vector<double>>();
    data.density.eta_min = w.at("eta_min").get<double>();
    data.density.abs_a_plus = w.at("abs_a_plus").get<double>();
    data.density.abs_a_minus = w.at("abs_a_minus").get<double>();
    return data;
}

std::string soliton_spec_to_json(const SolitonSpec& spec) {
    json j;
    j["schema"] = "nlslab.soliton/1";
    j["discrete"] = discrete_to_json(spec.discrete);
    return j.dump(2);
}

SolitonSpec soliton_spec_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("schema").get<std::string>() != "nlslab.soliton/1")
        throw std::runtime_error("soliton_spec_from_json: unknown schema");
    SolitonSpec spec;
    spec.discrete = discrete_from_json(j.at("discrete"));
    spec.validate();
    return spec;
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_text: cannot open " + path);
    out << text;
}

std::string load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_text: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace nlslab
