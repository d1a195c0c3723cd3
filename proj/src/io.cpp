#include "cohkit/io.hpp"

#include <cstdio>
#include <fstream>

namespace cohkit {

namespace {

using nlohmann::json;

cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(ErrorCode::InvalidInput, where + ": expected a [re, im] pair");
    }
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(cplx v) {
    return json::array({v.real(), v.imag()});
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) {
        fail(ErrorCode::InvalidInput, std::string("missing field \"") + name + "\"");
    }
    return *it;
}

}  // namespace

StateVariant parse_state_json(const json& j) {
    if (!j.is_object()) {
        fail(ErrorCode::InvalidInput, "state file must be a JSON object");
    }
    std::size_t dim = field(j, "dim").get<std::size_t>();
    if (j.contains("amplitudes")) {
        const json& amps = j["amplitudes"];
        if (!amps.is_array() || amps.size() != dim) {
            fail(ErrorCode::InvalidInput, "\"amplitudes\" must list exactly dim entries");
        }
        std::vector<cplx> v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            v[i] = parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
        }
        return PureState::validated(std::move(v));
    }
    if (j.contains("matrix")) {
        const json& rows = j["matrix"];
        if (!rows.is_array() || rows.size() != dim) {
            fail(ErrorCode::InvalidInput, "\"matrix\" must list exactly dim rows");
        }
        CMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            const json& row = rows[r];
            if (!row.is_array() || row.size() != dim) {
                fail(ErrorCode::InvalidInput,
                     "matrix row " + std::to_string(r) + " must list exactly dim entries");
            }
            for (std::size_t c = 0; c < dim; ++c) {
                m.at(r, c) = parse_complex(
                        row[c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
            }
        }
        return DensityMatrix::validated(std::move(m));
    }
    fail(ErrorCode::InvalidInput, "state file needs an \"amplitudes\" or \"matrix\" field");
}

StateVariant read_state_file(const std::string& path) {
    return parse_state_json(read_json_file(path));
}

json state_to_json(const PureState& psi) {
    json amps = json::array();
    for (const cplx& a : psi.amplitudes()) {
        amps.push_back(complex_to_json(a));
    }
    return json{{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

json density_to_json(const DensityMatrix& rho) {
    json rows = json::array();
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            row.push_back(complex_to_json(rho.entry(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"dim", rho.dim()}, {"matrix", std::move(rows)}};
}

HomogeneousPolynomial parse_polynomial_json(const json& j) {
    if (!j.is_object()) {
        fail(ErrorCode::InvalidInput, "polynomial file must be a JSON object");
    }
    std::size_t dim = field(j, "dim").get<std::size_t>();
    int degree = field(j, "degree").get<int>();
    double power = field(j, "power").get<double>();
    const json& terms = field(j, "terms");
    if (!terms.is_array() || terms.empty()) {
        fail(ErrorCode::InvalidInput, "\"terms\" must be a nonempty array");
    }
    HomogeneousPolynomial::TermMap map;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const json& term = terms[t];
        const json& exps = field(term, "exponents");
        if (!exps.is_array() || exps.size() != dim) {
            fail(ErrorCode::InvalidInput,
                 "terms[" + std::to_string(t) + "].exponents must list exactly dim entries");
        }
        std::vector<int> k(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            k[i] = exps[i].get<int>();
        }
        map[std::move(k)] = parse_complex(field(term, "coeff"),
                                          "terms[" + std::to_string(t) + "].coeff");
    }
    return HomogeneousPolynomial::make(dim, degree, power, std::move(map));
}

HomogeneousPolynomial read_polynomial_file(const std::string& path) {
    return parse_polynomial_json(read_json_file(path));
}

json polynomial_to_json(const HomogeneousPolynomial& p) {
    json terms = json::array();
    for (const auto& [exponents, coeff] : p.terms()) {
        terms.push_back(json{{"exponents", exponents}, {"coeff", complex_to_json(coeff)}});
    }
    return json{{"dim", p.dim()}, {"degree", p.degree()}, {"power", p.power()},
                {"terms", std::move(terms)}};
}

json decomposition_to_json(const Decomposition& dec) {
    json probs = json::array();
    json states = json::array();
    for (const Decomposition::Entry& e : dec.entries) {
        probs.push_back(e.probability);
        json amps = json::array();
        for (const cplx& a : e.state.amplitudes()) {
            amps.push_back(complex_to_json(a));
        }
        states.push_back(std::move(amps));
    }
    return json{{"probabilities", std::move(probs)}, {"states", std::move(states)}};
}

Decomposition parse_decomposition_json(const json& j) {
    const json& probs = field(j, "probabilities");
    const json& states = field(j, "states");
    if (!probs.is_array() || !states.is_array() || probs.size() != states.size()) {
        fail(ErrorCode::InvalidInput, "probabilities and states must be equal-length arrays");
    }
    Decomposition dec;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const json& amps = states[i];
        std::vector<cplx> v(amps.size());
        for (std::size_t k = 0; k < amps.size(); ++k) {
            v[k] = parse_complex(amps[k],
                                 "states[" + std::to_string(i) + "][" + std::to_string(k) + "]");
        }
        dec.entries.push_back({probs[i].get<double>(), PureState::validated(std::move(v))});
    }
    return dec;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorCode::InvalidInput, "cannot open \"" + path + "\" for writing");
    }
    out << j.dump(2) << "\n";
    if (!out) {
        fail(ErrorCode::InvalidInput, "write to \"" + path + "\" failed");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::InvalidInput, "cannot open \"" + path + "\"");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::InvalidInput, std::string(e.what()) + " in \"" + path + "\"");
    }
    return j;
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path);
    if (!out) {
        fail(ErrorCode::InvalidInput, "cannot open \"" + path + "\" for writing");
    }
    out << "K,cbar_g,cg\n";
    char buf[96];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f\n", r.K, r.cbar, r.cg);
        out << buf;
    }
    if (!out) {
        fail(ErrorCode::InvalidInput, "write to \"" + path + "\" failed");
    }
}

}  // namespace cohkit
